import sys

from altenum.cli import main

sys.exit(main())
