import sys

from deltakit.cli import main

sys.exit(main())
