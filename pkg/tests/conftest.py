import hypothesis.strategies as st
import pytest
from hypothesis import settings

from alexcert.laurent import HalfLaurent

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def small_polys(min_exp=-6, max_exp=6, max_terms=5, coef=5):
    return st.dictionaries(
        st.integers(min_exp, max_exp), st.integers(-coef, coef), max_size=max_terms
    ).map(HalfLaurent)


def T(text):
    """Shorthand for building polynomials from text in tests."""
    from alexcert.laurent import from_text

    return from_text(text)


@pytest.fixture
def poly():
    return T
