# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
n-admissible primes
"""

__all__ = ["tables", "classify"]
