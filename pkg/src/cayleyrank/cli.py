"""Command-line front end.

Usage:
    cayleyrank count   --seq 1,1,3,1,4,1,3,1,2,1,3,1
    cayleyrank count   --multiset 1:7,2:1,3:3,4:1 --n 12
    cayleyrank rank    --seq ... TREE_FILE        (TREE_FILE may be '-')
    cayleyrank unrank  --seq ... RANK
    cayleyrank sample  --seq ... --count 5 --seed 1
    cayleyrank selftest --n-max 6

Exit status: 0 success, 1 self-test failure, 2 usage error, 3 invalid
degree spec, rank or tree.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO, Sequence

from cayleyrank import oracle, treerank
from cayleyrank.bijection import InvalidStructure, RootedTree, theta, theta_inverse
from cayleyrank.dfcodec import RankOutOfRange
from cayleyrank.partition import PartitionError
from cayleyrank.treerank import DegreeMismatch, DegreeMultiset, DegreeSequence, InvalidDegrees

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class FormatError(ValueError):
    pass


DOMAIN_ERRORS = (
    FormatError,
    InvalidDegrees,
    DegreeMismatch,
    RankOutOfRange,
    InvalidStructure,
    PartitionError,
    oracle.OracleTooLarge,
)


def parse_sequence(text: str) -> DegreeSequence:
    try:
        degrees = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise FormatError(f"malformed degree sequence {text!r}") from None
    return DegreeSequence(degrees)


def parse_multiset(text: str, n: int) -> DegreeMultiset:
    mapping: dict[int, int] = {}
    for item in text.split(","):
        try:
            d, c = (int(x) for x in item.split(":"))
        except ValueError:
            raise FormatError(f"malformed multiset entry {item!r}, expected degree:count") from None
        if d in mapping:
            raise FormatError(f"degree {d} listed twice")
        mapping[d] = c
    return DegreeMultiset.from_mapping(n, mapping)


def format_sequence(d: DegreeSequence) -> str:
    return ",".join(map(str, d.degrees))


def format_multiset(d: DegreeMultiset) -> str:
    return ",".join(f"{deg}:{c}" for deg, c in d.as_mapping().items())


def parse_rank(text: str) -> int:
    text = text.strip()
    if not text.isdigit():
        raise FormatError(f"rank must be a non-negative decimal integer, got {text!r}")
    return int(text)


def format_tree(t: RootedTree) -> str:
    lines = [f"n {t.n}"]
    lines += [f"{i} {p}" for i, p in t.edges()]
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> RootedTree:
    lines = [ln.split() for ln in text.strip().splitlines()]
    if not lines or len(lines[0]) != 2 or lines[0][0] != "n":
        raise FormatError("tree text must start with a line 'n <vertex count>'")
    try:
        n = int(lines[0][1])
        pairs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError:
        raise FormatError("tree lines must be '<vertex> <parent>' integer pairs") from None
    if [i for i, _ in pairs] != list(range(2, n + 1)):
        raise FormatError(f"expected one line per vertex 2..{n} in ascending order")
    return RootedTree(n, tuple(p for _, p in pairs))


def _spec(args: argparse.Namespace) -> treerank.DegreeSpec:
    if args.seq is not None:
        if args.n is not None and args.n != len(args.seq.split(",")):
            raise FormatError(f"--n {args.n} disagrees with a sequence of length {len(args.seq.split(','))}")
        return parse_sequence(args.seq)
    if args.n is None:
        raise FormatError("--multiset requires --n")
    return parse_multiset(args.multiset, args.n)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def selftest(n_max: int, out: IO[str]) -> bool:
    """Compare every class for n <= n_max with brute-force enumeration."""
    if n_max > oracle.MAX_N:
        raise FormatError(f"--n-max is capped at {oracle.MAX_N}")

    def fail(msg: str) -> bool:
        print(f"FAIL {msg}", file=out)
        return False

    for n in range(2, n_max + 1):
        functions = oracle.enumerate_functions(n)
        for f in functions:
            t = theta(f)
            if theta_inverse(t) != f:
                return fail(f"n={n}: theta_inverse(theta(f)) != f for f={f.as_dict()}")
            if t != oracle.naive_theta(f):
                return fail(f"n={n}: theta disagrees with the reference for f={f.as_dict()}")
        checked = 0
        specs: list[treerank.DegreeSpec] = [*oracle.all_sequences(n), *oracle.all_multisets(n)]
        for d in specs:
            cls = treerank.class_for(d)
            members = oracle.enumerate_class(d)
            label = format_sequence(d) if isinstance(d, DegreeSequence) else format_multiset(d)
            if cls.count != len(members):
                return fail(f"n={n} [{label}]: count {cls.count} but {len(members)} trees enumerated")
            for i, t in enumerate(members):
                r = cls.rank(t)
                if r != i:
                    return fail(f"n={n} [{label}]: tree {t.as_dict()} ranked {r}, expected {i}")
                u = cls.unrank(i)
                if u != t:
                    return fail(f"n={n} [{label}]: unrank({i}) = {u.as_dict()}, expected {t.as_dict()}")
                checked += 1
        print(f"ok n={n}: {len(functions)} tables, {len(specs)} classes, {checked} ranks", file=out)
    return True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleyrank",
        description="Count, rank, unrank and sample rooted labeled trees with restricted degrees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_spec(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--seq", help="degree sequence, e.g. 2,1,1")
        group.add_argument("--multiset", help="degree multiset as degree:count pairs, e.g. 1:2,2:1")
        p.add_argument("--n", type=int, help="vertex count (required with --multiset)")
        return p

    with_spec(sub.add_parser("count", help="print the class size"))
    p = with_spec(sub.add_parser("rank", help="print the rank of a tree"))
    p.add_argument("tree", help="tree file, or - for standard input")
    p = with_spec(sub.add_parser("unrank", help="print the tree of a given rank"))
    p.add_argument("rank")
    p = with_spec(sub.add_parser("sample", help="print uniformly random trees"))
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p = sub.add_parser("selftest", help="exhaustive comparison with brute force")
    p.add_argument("--n-max", type=int, default=6)
    # debugging aid: dump a class in rank order from the brute-force oracle
    with_spec(sub.add_parser("enumerate", help=argparse.SUPPRESS))
    return parser


def run(argv: Sequence[str] | None = None, stdout: IO[str] | None = None) -> int:
    stdout = stdout or sys.stdout
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return 0 if selftest(args.n_max, stdout) else EXIT_FAILED
        spec = _spec(args)
        cls = treerank.class_for(spec)
        if args.command == "count":
            stdout.write(f"{cls.count}\n")
        elif args.command == "rank":
            stdout.write(f"{cls.rank(parse_tree(_read(args.tree)))}\n")
        elif args.command == "unrank":
            stdout.write(format_tree(cls.unrank(parse_rank(args.rank))))
        elif args.command == "sample":
            if args.count < 0:
                raise FormatError("--count must be non-negative")
            trees = treerank.sample_many(spec, args.count, args.seed)
            stdout.write("\n".join(format_tree(t) for t in trees))
        elif args.command == "enumerate":
            stdout.write("\n".join(format_tree(t) for t in oracle.enumerate_class(spec)))
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
