# SPDX-License-Identifier: MIT
# -*- coding: utf-8 -*-
"""
Theta tables and p-stabilization
"""

__all__ = ["table", "stabilize"]
