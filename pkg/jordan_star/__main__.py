import sys

from jordan_star.cli.main import main

sys.exit(main())
