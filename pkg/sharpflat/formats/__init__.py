# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
JSON input and report formats
"""

__all__ = ["codec"]
