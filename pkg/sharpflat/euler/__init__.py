# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Euler system vectors and reciprocity laws
"""

__all__ = ["vectors", "reciprocity"]
