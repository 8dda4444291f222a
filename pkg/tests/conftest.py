"""Shared strategies for property-based tests."""

from hypothesis import strategies as st

from cghlab.core import Cgh, all_triples


@st.composite
def sized_triples(draw, min_n=3, max_n=12):
    """A (n, triple) pair with the triple valid for n."""
    n = draw(st.integers(min_n, max_n))
    trips = all_triples(n)
    t = draw(st.sampled_from(trips))
    return n, t


@st.composite
def small_families(draw, min_n=3, max_n=8, max_size=12):
    """A random Cgh on a small ground set."""
    n = draw(st.integers(min_n, max_n))
    trips = all_triples(n)
    chosen = draw(st.sets(st.sampled_from(trips), max_size=min(max_size, len(trips))))
    return Cgh(n, frozenset(chosen))


@st.composite
def triple_pairs(draw, min_n=4, max_n=9):
    """A (n, s, t) with s != t, both valid for n."""
    n = draw(st.integers(min_n, max_n))
    trips = all_triples(n)
    s = draw(st.sampled_from(trips))
    t = draw(st.sampled_from(trips).filter(lambda x: x != s))
    return n, s, t
