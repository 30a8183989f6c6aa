"""Enable running shagraph as a module with `python -m shagraph`."""

from shagraph.cli.main import main

if __name__ == "__main__":
    main()
