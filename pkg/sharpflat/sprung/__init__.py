# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Sharp/flat factorization

Modules:
- matrices: the C_j and B matrices and H_m products
- normseq: norm-compatible sequences
- factorize: decomposition, kernels and congruence checks
"""

__all__ = ["matrices", "normseq", "factorize"]
