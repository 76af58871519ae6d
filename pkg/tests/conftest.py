"""Shared fixtures for the simulator suite."""
from __future__ import annotations

import pytest
from refcases import BLUE, GREY

from qbat import BatteryParams


@pytest.fixture
def blue_params() -> BatteryParams:
    return BLUE


@pytest.fixture
def grey_params() -> BatteryParams:
    return GREY
