"""Shared hypothesis strategies: rationals, scalars, monomials, forms."""

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from astheno.algebra import Form, Monomial
from astheno.scalars import PARAMS, Scalar

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)

nonzero_rationals = rationals.filter(bool)

exponent_tuples = st.tuples(
    st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)
)

param_values = st.fixed_dictionaries({name: rationals for name in PARAMS})


@st.composite
def scalars(draw, max_terms: int = 3):
    terms = draw(
        st.dictionaries(exponent_tuples, rationals, min_size=1, max_size=max_terms)
    )
    return Scalar(terms)


@st.composite
def monomials(draw, max_pq: int = 3):
    return Monomial(
        draw(st.integers(0, 1)),
        draw(st.integers(0, 1)),
        draw(st.integers(0, max_pq)),
        draw(st.integers(0, max_pq)),
    )


@st.composite
def forms(draw, max_monos: int = 3, max_pq: int = 3):
    out = Form.zero()
    for _ in range(draw(st.integers(0, max_monos))):
        out = out + Form.monomial(draw(monomials(max_pq=max_pq)), draw(scalars()))
    return out
