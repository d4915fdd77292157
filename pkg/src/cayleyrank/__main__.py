from cayleyrank.cli import main

main()
