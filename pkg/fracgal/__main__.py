import sys
from fracgal.cli import main

sys.exit(main())
