import sys

from areamethod.frontend.cli import main

sys.exit(main())
