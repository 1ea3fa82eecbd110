from __future__ import annotations

import pytest

from evencox.reduction import (check_alternating_reduced, check_exchange, check_homomorphism,
                               check_one_reduction, check_reduction, prefixes)


def test_prefixes(groups):
    A = groups["sysa"]
    ps = {A.format(p) for p in prefixes(A, A.element("s t s"))}
    assert ps == {"e", "s", "s t", "s t s"}
    # the longest element has every group element as a prefix
    assert len(prefixes(A, A.element("s t s t"))) == 8


@pytest.mark.parametrize("name,radius,counts", [
    ("sysb", 5, (428, 12, 892)),
    ("sysc", 4, (340, 0, 830)),
])
def test_reduction_facts(groups, name, radius, counts):
    W = groups[name]
    one, red, exch = check_one_reduction(W, radius), check_reduction(W, radius + 1), check_exchange(W, radius)
    assert (one[0], red[0], exch[0]) == counts
    assert one[1] == red[1] == exch[1] == []


def test_reduction_needs_room(groups):
    assert check_reduction(groups["sysb"], 2) == (0, [])


def test_alternating_words(groups):
    for name in ("sysb", "sysd"):
        n, failures = check_alternating_reduced(groups[name])
        assert n > 0 and failures == []


def test_homomorphism(groups):
    n, failures = check_homomorphism(groups["sysa"], 4)
    assert n == 256 and failures == []



def test_reduction_facts_on_sysd(groups):
    D = groups["sysd"]
    one = check_one_reduction(D, 5)
    red = check_reduction(D, 6)
    assert (one[0], red[0]) == (8152, 1816)
    assert one[1] == red[1] == []
