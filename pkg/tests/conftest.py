import pytest

from shenell import ShenContext

_CACHE = {}


@pytest.fixture(scope="session")
def context_for():
    """Session-cached ShenContext factory; lattices are expensive enough to share."""
    def get(k):
        if k not in _CACHE:
            _CACHE[k] = ShenContext.from_modulus(k)
        return _CACHE[k]
    return get
