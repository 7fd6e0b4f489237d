# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""python -m sharpflat"""

from sharpflat.cli import main

raise SystemExit(main())
