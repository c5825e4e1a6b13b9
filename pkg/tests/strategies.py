from fractions import Fraction

from hypothesis import strategies as st

from wedderburn.fields import GF, QQ

FIELDS = [GF(2), GF(3), GF(5), GF(7), GF(2, 2), GF(3, 2), GF(2, 3), GF(2147483647), QQ]


def scalars(F):
    if F.kind == "prime":
        return st.integers(0, F.p - 1)
    if F.kind == "extension":
        return st.tuples(*[st.integers(0, F.p - 1)] * F.deg)
    return st.fractions(min_value=-50, max_value=50, max_denominator=30).map(Fraction)


fields = st.sampled_from(FIELDS)
finite_fields = st.sampled_from([F for F in FIELDS if F.order is not None and F.order < 100])


@st.composite
def field_triples(draw):
    F = draw(fields)
    s = scalars(F)
    return F, draw(s), draw(s), draw(s)


@st.composite
def matrices(draw, F=None, max_rows=6, max_cols=6):
    if F is None:
        F = draw(fields)
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.tuples(*[scalars(F)] * c), min_size=r, max_size=r))
    return F, rows
