import sys

from resolvedim.main import main

sys.exit(main())
