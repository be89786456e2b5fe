from itertools import product

import pytest

from libs.quiver_service import PreconditionError
from libs.roots_service import RootTag, check_root_form, classify_root, positive_roots_below, reflect

from .conftest import loop_quiver
from .oracles import reflection_orbit_roots


def test_reflect(a2, jordan):
    assert reflect(a2, (1, 0), "w") == (1, 1)
    assert reflect(a2, (0, 1), "w") == (0, -1)
    assert reflect(a2, (2, 1), "w") == (2, 1)
    with pytest.raises(PreconditionError):
        reflect(jordan, (1,), "v")


@pytest.mark.parametrize(
    "fixture, alpha, tag",
    [
        ("a2", (1, 1), RootTag.REAL_ROOT),
        ("a2", (2, 1), RootTag.NOT_ROOT),
        ("dtilde4", (2, 1, 1, 1, 1), RootTag.IMAGINARY_ROOT),
        ("dtilde4", (4, 2, 2, 2, 2), RootTag.IMAGINARY_ROOT),
        ("dtilde4", (1, 1, 1, 1, 1), RootTag.REAL_ROOT),
        ("dtilde4", (1, 2, 0, 0, 0), RootTag.NOT_ROOT),
        ("twoloop", (3,), RootTag.IMAGINARY_ROOT),
        ("point", (2,), RootTag.NOT_ROOT),
    ],
)
def test_classify_root(request, fixture, alpha, tag):
    quiver = request.getfixturevalue(fixture)
    root = classify_root(quiver, alpha)
    assert root.tag == tag
    assert check_root_form(quiver, alpha, root)


def test_zero_vector_rejected(a2):
    with pytest.raises(PreconditionError):
        classify_root(a2, (0, 0))


def test_positive_roots_below(a2, point, twoloop):
    assert positive_roots_below(a2, (1, 1)) == [(0, 1), (1, 0), (1, 1)]
    assert positive_roots_below(point, (3,)) == [(1,)]
    assert positive_roots_below(twoloop, (2,)) == [(1,), (2,)]


@pytest.mark.parametrize("fixture, bound", [("a2", 4), ("atilde1", 4), ("dtilde4", 4), ("twoloop", 4)])
def test_classification_matches_reflection_orbits(request, fixture, bound):
    quiver = request.getfixturevalue(fixture)
    box = (bound,) * quiver.vertex_count
    roots = reflection_orbit_roots(quiver, box)
    for alpha in product(range(bound + 1), repeat=quiver.vertex_count):
        if any(alpha):
            assert classify_root(quiver, alpha).is_root == (alpha in roots), alpha


def test_d4_roots_up_to_four(dtilde4):
    box = (4, 4, 4, 4, 4)
    roots = reflection_orbit_roots(dtilde4, box)
    assert set(positive_roots_below(dtilde4, box)) == set(roots)


def test_loop_multiples_are_roots():
    quiver = loop_quiver(2)
    assert all(classify_root(quiver, (n,)).tag == RootTag.IMAGINARY_ROOT for n in range(1, 7))
