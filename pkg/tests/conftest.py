import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from tripmaps.exact import NumberField, parse_polynomial  # noqa: E402


def field_root(poly: str, lo=0, hi=1) -> NumberField:
    return NumberField.from_polynomial(parse_polynomial(poly), Fraction(lo), Fraction(hi))


@pytest.fixture
def cbrt2():
    """Q(2^(1/3)) with generator a = 2^(1/3)."""
    return field_root("x^3-2", 1, 2)


@pytest.fixture
def alpha_field():
    """Q(a) with a^3 + a - 1 = 0, 0 < a < 1."""
    return field_root("x^3+x-1")


sys.modules.setdefault("tripmaps_testutil", sys.modules[__name__])
