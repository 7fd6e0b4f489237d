# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
sharpflat package root
Exact arithmetic for sharp/flat Iwasawa theory at non-ordinary primes
"""

__version__ = "0.3.0"
__title__ = "sharpflat"

from . import core

__all__ = ["core"]
