# -*- coding: utf-8 -*-
import logging

import xarray as xr

xr.set_options(keep_attrs=True, display_expand_attrs=False)

logging.getLogger(__name__).addHandler(logging.NullHandler())

from friezepy import friezepy  # noqa: E402,F401  registers ds.frieze
