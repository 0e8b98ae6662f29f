import sys

from brmatch.cli import main

sys.exit(main())
