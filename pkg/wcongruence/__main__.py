import sys

from wcongruence.cli import main

sys.exit(main())
