import sys

from tenfriends.cli import main

sys.exit(main())
