import sys

from coxan.cli import main

sys.exit(main())
