import sys

from ._entvis import main

sys.exit(main(sys.argv[1:]))
