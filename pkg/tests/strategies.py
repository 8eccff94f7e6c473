"""Hypothesis strategies producing small valid pseudorings."""

from hypothesis import strategies as st

from pmlab.core import build_chain_monoid_ring, build_product, build_sub, build_zero_mul, build_zmod

_atoms = st.one_of(
    st.integers(1, 9).map(build_zmod),
    st.integers(1, 4).map(build_zero_mul),
    st.integers(1, 3).map(build_chain_monoid_ring),
)


@st.composite
def pseudorings(draw, max_order: int = 24):
    factors, order = [], 1
    for _ in range(draw(st.integers(1, 3))):
        A = draw(_atoms)
        if order * A.order > max_order:
            break
        factors.append(A)
        order *= A.order
    R = factors[0] if len(factors) == 1 else build_product(factors)
    if draw(st.booleans()) and R.order > 1:
        gens = draw(st.lists(st.integers(0, R.order - 1), min_size=1, max_size=2))
        R = build_sub(R, gens).ring
    return R
