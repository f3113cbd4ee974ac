"""Shared fixtures: every test gets its own settings directory."""

from __future__ import annotations

import pytest

from tanglekit.tangle_core import TangleFraction, closure_of_rational, genus_one_fraction

# Xer products of T(2,2k): (k, knot label, N(z/v))
XER_PRODUCTS = [
    (3, "7_2", TangleFraction(11, 2)),
    (3, "7_4", TangleFraction(15, 4)),
    (4, "9_2", TangleFraction(15, 2)),
    (4, "9_5", TangleFraction(23, 4)),
    (5, "11a247", TangleFraction(19, 2)),
    (5, "11a343", TangleFraction(31, 4)),
    (5, "11a363", TangleFraction(35, 6)),
]


@pytest.fixture(autouse=True)
def settings_home(tmp_path, monkeypatch):
    monkeypatch.setenv("TANGLEKIT_HOME", str(tmp_path / "home"))
    monkeypatch.delenv("TANGLEKIT_CROSSING_CAP", raising=False)
    return tmp_path / "home"


@pytest.fixture
def seven_four():
    return closure_of_rational(genus_one_fraction(2, 2))
