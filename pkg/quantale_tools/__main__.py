#
# This file is part of quantale-tools.
#
""" Allows running the tools with `python -m quantale_tools`. """

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
