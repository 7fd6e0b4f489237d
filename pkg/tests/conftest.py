# -*- coding: utf-8 -*-
"""
Pytest configuration and fixtures for sharpflat tests
"""

import random

import pytest

from sharpflat.iwasawa.ring import IwasawaElem
from sharpflat.sprung.normseq import generate_seq


@pytest.fixture
def rng():
    """Seeded generator so failing draws can be replayed"""
    return random.Random(20240517)


@pytest.fixture
def make_elem():
    """Build an element from X-basis coefficients"""

    def _make(coeffs, p=3, n=2, m=1):
        return IwasawaElem(tuple(coeffs), p, n, m)

    return _make


@pytest.fixture
def random_elem(rng):
    """Uniform random element of Lambda_{m,n}"""

    def _random(p=3, n=2, m=1):
        q = p ** n
        return IwasawaElem(tuple(rng.randrange(q) for _ in range(p ** m)), p, n, m)

    return _random


@pytest.fixture
def random_seq(random_elem):
    """Norm-compatible sequence generated from a random sharp/flat seed"""

    def _seq(p=3, n=2, M=2, ap=0):
        return generate_seq(random_elem(p, n, M), random_elem(p, n, M), ap)

    return _seq


@pytest.fixture
def settings_file(tmp_path):
    """Write a settings JSON under tmp_path and return its path"""

    def _write(text):
        path = tmp_path / ".sharpflat" / "config.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return path

    return _write
