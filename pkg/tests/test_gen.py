import itertools
import random

import pytest
from hypothesis import given, strategies as st

from efslift.catalog import empty_category, terminal_category
from efslift.fincat import (
    compose_functors,
    is_bijective_on_objects,
    is_fully_faithful,
    validate_category,
    validate_functor,
    validate_nat,
    whisker_right,
)
from efslift.gen import (
    DOCUMENT_KINDS,
    FAMILIES,
    GenParams,
    TWO_CAT_KINDS,
    gen_create_instance,
    gen_document,
    gen_fill_instance,
    gen_fincat,
    gen_functor,
    gen_nat_between,
    gen_rigidity_instance,
    gen_two_cat,
    gen_two_cell_instance,
    gen_two_instance,
    path_category,
)
from efslift.report import InvalidInput, NoFunctorExists
from efslift.twocat import validate_two_cat, validate_two_functor, validate_two_natural

seeds = st.integers(0, 2**64 - 1)


def paths(n, edges, a, b):
    """Edge sequences from ``a`` to ``b``, the empty one included when ``a == b``."""
    out = [()] if a == b else []
    for k, (s, t) in enumerate(edges):
        if s == a:
            out += [(k,) + rest for rest in paths(n, edges, t, b)]
    return out


def test_free_dag_counts_paths():
    edges = [(0, 1), (1, 2), (0, 2)]
    c = path_category(3, edges)
    assert validate_category(c).ok
    for a, b in itertools.product(range(3), repeat=2):
        assert len(c.hom(a, b)) == len(paths(3, edges, a, b))
    assert c.n_mor == 7


def test_walking_shape_zero_is_terminal():
    assert gen_fincat(0, GenParams(family="walking-shape", index=0)) == terminal_category()


def test_no_functor_into_empty():
    with pytest.raises(NoFunctorExists):
        gen_functor(0, terminal_category(), empty_category())


def test_bad_params():
    with pytest.raises(InvalidInput):
        GenParams(0, 3)
    with pytest.raises(InvalidInput):
        GenParams(family="random-table")


@pytest.mark.parametrize("family", FAMILIES)
def test_categories_are_sound_and_bounded(family):
    p = GenParams(5, 20, family)
    for seed in range(1000):
        c = gen_fincat(seed, p)
        assert validate_category(c).ok
        assert c.n_obj <= 5 and c.n_mor <= 20


@given(seeds)
def test_preorders_are_thin(seed):
    assert gen_fincat(seed, GenParams(5, 25, "preorder")).is_thin()


@pytest.mark.parametrize("family", FAMILIES)
def test_functors_and_transformations_are_sound(family):
    p = GenParams(4, 12, family)
    for seed in range(1000):
        a, b = gen_fincat(seed, p), gen_fincat(seed + 1000, p)
        if a.n_obj and not b.n_obj:
            b = terminal_category()
        assert validate_functor(gen_functor(seed, a, b)).ok
        assert validate_nat(gen_nat_between(random.Random(seed), a, b)).ok


def test_coverage():
    cats = [gen_fincat(s, GenParams(4, 12, f)) for f in FAMILIES for s in range(1000)]
    assert any(not c.is_thin() for c in cats)
    assert any(not c.hom(x, y) for c in cats for x in c.objects for y in c.objects)
    two_cats = [gen_two_cat(s) for s in range(1000)]
    assert any(c.has_nonidentity_2cells() for c in two_cats)
    fills = [gen_fill_instance(s) for s in range(1000)]
    assert any(not f.square.commutes for f in fills)
    assert any(not f.square.eps.dom.is_thin() or not f.square.mu.dom.is_thin() for f in fills)


@given(seeds)
def test_fill_instances_are_squares(seed):
    inst = gen_fill_instance(seed)
    sq = inst.square
    assert is_bijective_on_objects(sq.eps) and is_fully_faithful(sq.mu)
    assert compose_functors(inst.delta0, sq.eps) == sq.alpha
    assert whisker_right(inst.psi_tilde0, sq.eps) == sq.psi


@given(seeds)
def test_other_instances_are_sound(seed):
    t = gen_two_cell_instance(seed)
    assert validate_nat(t.phi).ok and validate_nat(t.phi_prime).ok
    c = gen_create_instance(seed)
    assert validate_nat(c.psi).ok and c.psi.dom == compose_functors(c.mu, c.alpha)
    r = gen_rigidity_instance(seed)
    assert validate_nat(r.psi).ok and is_fully_faithful(r.mu)


@pytest.mark.parametrize("index", range(len(TWO_CAT_KINDS)))
def test_two_cats_and_instances(index):
    for seed in range(1000):
        c = gen_two_cat(seed, GenParams(3, 5, index=index))
        assert validate_two_cat(c).ok
        f, g, alpha = gen_two_instance(seed, c)
        assert validate_two_functor(f).ok and validate_two_functor(g).ok
        assert validate_two_natural(alpha).ok


@pytest.mark.parametrize("kind", DOCUMENT_KINDS)
def test_generation_is_deterministic(kind):
    for seed in range(5):
        assert gen_document(seed, kind).render() == gen_document(seed, kind).render()
    assert len({gen_document(s, kind).render() for s in range(8)}) > 1
