import sys

from multirank.cli import main

sys.exit(main())
