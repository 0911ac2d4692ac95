import sys

from qconcept.cli import main

sys.exit(main())
