from hypothesis import settings, strategies as st

from ramcalc.field import FieldElem, make_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def fields(draw, primes=(3, 5), max_depth=2, max_m=2):
    p = draw(st.sampled_from(primes))
    m = draw(st.integers(1, max_m))
    return make_field(p, draw(st.integers(0, max_depth)), draw(st.integers(0, max_depth)), m)


def elements(field, max_terms=4, alpha=(-6, 6), beta=(-12, 4)):
    term = st.tuples(
        st.integers(1, field.fq.q - 1),
        st.integers(*alpha),
        st.integers(*beta),
    )
    return st.lists(term, max_size=max_terms).map(lambda items: FieldElem.from_terms(field, items))


@st.composite
def field_and_elements(draw, count=1, **kw):
    field = draw(fields(**kw))
    return (field, *[draw(elements(field)) for _ in range(count)])
