import sys

from errlingo.cli import main

sys.exit(main())
