import mpmath
import pytest
from hypothesis import settings

from classical_mops.arith import DEFAULT_PRECISION, to_real, working_precision

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def precision_256():
    with working_precision(DEFAULT_PRECISION):
        yield


def close(a, b, tol="1e-60"):
    """Relative closeness at the working precision."""
    a, b = to_real(a), to_real(b)
    return abs(a - b) <= mpmath.mpf(tol) * max(1, abs(a), abs(b))
