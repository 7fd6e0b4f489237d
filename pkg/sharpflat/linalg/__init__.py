# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Linear algebra over Z/p^n
"""

__all__ = ["howell"]
