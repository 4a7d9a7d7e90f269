import sys

from strengthlab.cli import main

sys.exit(main())
