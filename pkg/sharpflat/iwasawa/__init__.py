# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Iwasawa ring package

Modules:
- poly: structural polynomials and integer polynomial arithmetic
- ring: elements of Z/p^n[X]/(omega_m)
- quad: ring elements with coefficients in Z/p^n[alpha]
"""

__all__ = ["poly", "ring", "quad"]
