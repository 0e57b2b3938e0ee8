"""Backend agreement: the compiled kernels must match the pure reference."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectough._kernels import _ref
from spectough.graphs import gnp

try:
    from spectough._kernels import _fast
except ImportError:
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None,
                                reason="compiled kernels unavailable")


@needs_fast
@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 11), seed=st.integers(0, 2**32),
       p=st.sampled_from([0.2, 0.4, 0.6, 0.8]))
def test_toughness_search_agreement(n, seed, p):
    g = gnp(n, p, seed)
    if g.is_complete() or not g.is_connected():
        return
    assert _fast.toughness_search(n, g.adj) == _ref.toughness_search(n, g.adj)


@needs_fast
@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 11), seed=st.integers(0, 2**32),
       p=st.sampled_from([0.3, 0.5, 0.7]))
def test_hamilton_agreement(n, seed, p):
    g = gnp(n, p, seed)
    assert _fast.hamilton_cycle(n, g.adj) == _ref.hamilton_cycle(n, g.adj)
