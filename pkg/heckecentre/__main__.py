# -*- coding: utf-8 -*-

import sys

from heckecentre.cli import main

sys.exit(main())
