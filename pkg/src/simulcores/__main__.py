from simulcores.cli import main

main()
