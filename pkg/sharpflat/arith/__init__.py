# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Truncated p-adic scalars and the quadratic extension Q_p(alpha)
"""

__all__ = ["scalars"]
