# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Mock local module and sharp/flat Coleman maps

Modules:
- indices: plus/minus index bookkeeping
- qsystem: Q-system model, its conditions and the Coleman functionals
- functionals: surjectivity, kernels and orthogonal complements
"""

__all__ = ["indices", "qsystem", "functionals"]
