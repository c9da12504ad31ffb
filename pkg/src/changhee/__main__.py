import sys

from changhee.cli import main

sys.exit(main())
