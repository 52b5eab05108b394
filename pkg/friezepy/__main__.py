# -*- coding: utf-8 -*-
import sys

from friezepy.cli import main

sys.exit(main())
