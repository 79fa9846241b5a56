import itertools
import random

import pytest
from hypothesis import given, strategies as st

from efslift.catalog import (
    chain_category,
    constant_functor,
    cyclic_group,
    discrete_category,
    parallel_pair,
    product_category,
    terminal_category,
    walking_arrow,
)
from efslift.fincat import (
    FinFunctor,
    NatTrans,
    compose_functors,
    horizontal_compose,
    identity_functor,
    identity_nat,
)
from efslift.gen import GenParams, gen_fincat, gen_functor, gen_nat_between, gen_two_cat, gen_two_instance
from efslift.report import BoundaryMismatch, PreconditionFailed
from efslift.shapes import (
    SHAPES,
    composable_1cells,
    locally_discrete,
    walking_2cell,
    walking_arrow_two_cat,
)
from efslift.twocat import (
    CatValued2Functor,
    Cell,
    FinTwoCat,
    Modification,
    TwoNatTrans,
    Vertical,
    WhiskerL,
    WhiskerR,
    assemble_two_natural,
    horizontal_decompositions,
    identity_modification,
    identity_two_nat,
    paste_whiskers,
    validate_modification,
    validate_two_cat,
    validate_two_functor,
    validate_two_natural,
)
from efslift.twofun import (
    Product2,
    composite_2functor,
    constant_2functor,
    representable,
    to_constant,
    two_object_2functor,
    yoneda_2nat,
)

import oracles
from instances import conjugation_instance

seeds = st.integers(0, 2**64 - 1)


# -- 2-categories -------------------------------------------------------------


def test_locally_discrete_walking_arrow_is_valid():
    assert validate_two_cat(locally_discrete(walking_arrow())).ok


def test_walking_2cell_laws():
    c = walking_2cell()
    assert validate_two_cat(c).ok
    assert c.hom[(0, 1)] == walking_arrow()
    assert c.has_nonidentity_2cells()


@pytest.mark.parametrize("name", sorted(SHAPES))
def test_registry_shapes_are_valid(name):
    assert validate_two_cat(SHAPES[name]()).ok


def test_corrupted_unit_law_is_localized():
    # one object, 1-cells {0, 1} with only identity 2-cells; composing to 1 always is
    # associative and functorial but 0 is no longer a unit
    hom = discrete_category(2)
    prod = product_category(hom, hom)
    hcomp = FinFunctor(prod, hom, [1] * 4, [hom.identity[1]] * 4)
    broken = FinTwoCat(1, {(0, 0): hom}, {(0, 0, 0): hcomp}, [0], check=False)
    rep = validate_two_cat(broken)
    assert sorted(map(str, rep.violations)) == ["LeftUnit(0, 0, 0)", "LeftUnit2(0, 0, 0)", "RightUnit(0, 0, 0)", "RightUnit2(0, 0, 0)"]


@given(seeds)
def test_interchange_holds_in_generated_2cats(seed):
    c = gen_two_cat(seed)
    for (a, b), hab in c.hom.items():
        for d in c.objects:
            hbd = c.hom[(b, d)]
            for l1, l2 in itertools.product(hab.morphisms, repeat=2):
                if not hab.composable(l2, l1):
                    continue
                for m1, m2 in itertools.product(hbd.morphisms, repeat=2):
                    if not hbd.composable(m2, m1):
                        continue
                    had = c.hom[(a, d)]
                    lhs = c.comp2(a, b, d, hbd.comp[(m2, m1)], hab.comp[(l2, l1)])
                    rhs = had.comp[(c.comp2(a, b, d, m2, l2), c.comp2(a, b, d, m1, l1))]
                    assert lhs == rhs


# -- 2-functors ----------------------------------------------------------------


def test_constant_2functor_at_terminal():
    for make in SHAPES.values():
        assert validate_two_functor(constant_2functor(make(), terminal_category())).ok


def two_cell_functor(a1, x, y, m):
    """Walking 2-cell → Cat: terminal, ``a1``, the objects ``x, y`` and the morphism ``m: x → y``."""
    t = terminal_category()
    fx = FinFunctor(t, a1, [x], [a1.identity[x]])
    fy = FinFunctor(t, a1, [y], [a1.identity[y]])
    return two_object_2functor(walking_2cell(), t, a1, [fx, fy], [identity_nat(fx), identity_nat(fy), NatTrans(fx, fy, [m])])


def test_walking_2cell_functor_picks_a_transformation():
    a1 = walking_arrow()
    f = two_cell_functor(a1, 0, 1, a1.hom(0, 1)[0])
    assert validate_two_functor(f).ok


def test_broken_1cell_composition_is_reported():
    c = composable_1cells()
    chain = [walking_arrow()] * 3
    ident = identity_functor(walking_arrow())
    f = composite_2functor(c, chain, [ident, ident])
    wrong = constant_functor(walking_arrow(), walking_arrow(), 1)
    on_1cell = dict(f.on_1cell)
    on_2cell = dict(f.on_2cell)
    on_1cell[(0, 2)] = (wrong,)
    on_2cell[(0, 2)] = (identity_nat(wrong),)
    broken = CatValued2Functor(c, f.on_obj, on_1cell, on_2cell, check=False)
    assert "Composition1Cell" in validate_two_functor(broken).kinds()


@given(seeds)
def test_representables_and_yoneda_maps(seed):
    rng = random.Random(seed)
    c = gen_two_cat(rng.getrandbits(64))
    for c0 in c.objects:
        rep = representable(c, c0)
        assert validate_two_functor(rep).ok
    if not c.n_obj:
        return
    a, b = rng.randrange(c.n_obj), rng.randrange(c.n_obj)
    hom = c.hom[(a, b)]
    if hom.n_obj:
        y = yoneda_2nat(c, a, b, rng.randrange(hom.n_obj))
        assert validate_two_natural(y).ok


# -- 2-natural transformations ----------------------------------------------------


def test_identity_two_natural():
    f, _, _ = gen_two_instance(1, walking_2cell())
    assert validate_two_natural(identity_two_nat(f)).ok


def test_one_failed_square_over_walking_arrow():
    c = walking_arrow_two_cat()
    t = terminal_category()
    a1 = walking_arrow()
    cell = FinFunctor(t, a1, [0], [0])
    f = two_object_2functor(c, t, a1, [cell], [identity_nat(cell)])
    # correct α_1 is the identity; a constant functor breaks the single square
    comps = [identity_functor(t), constant_functor(a1, a1, 1)]
    rep = validate_two_natural(TwoNatTrans(f, f, comps, check=False))
    assert rep.kinds() == ["Square"]


def one_natural_not_two_natural():
    """Brute-force search over walking-2cell 2-functors out of the terminal category."""
    found = []
    for a1 in (walking_arrow(), parallel_pair(), chain_category(3)):
        arrows = [m for m in a1.morphisms if not a1.is_identity(m)]
        for m, m2 in itertools.product(arrows, repeat=2):
            f = two_cell_functor(a1, a1.src[m], a1.tgt[m], m)
            g = two_cell_functor(a1, a1.src[m2], a1.tgt[m2], m2)
            for alpha1 in oracles.all_functors(a1, a1):
                comps = [identity_functor(terminal_category()), alpha1]
                t = TwoNatTrans(f, g, comps, check=False)
                one_natural = all(
                    compose_functors(g.cell1(0, 1, x), comps[0]) == compose_functors(comps[1], f.cell1(0, 1, x))
                    for x in (0, 1)
                )
                if one_natural and alpha1.mor_map[m] != m2:
                    found.append(t)
    return found


def test_two_naturality_failure_is_flagged_alone():
    found = one_natural_not_two_natural()
    assert found
    for t in found:
        assert validate_two_natural(t).kinds() == ["TwoCell"]


@given(seeds)
def test_locally_discrete_needs_only_squares(seed):
    rng = random.Random(seed)
    c = locally_discrete(gen_fincat(rng.getrandbits(64), GenParams(3, 6)))
    if not c.n_obj:
        return
    f, g, alpha = gen_two_instance(rng.getrandbits(64), c)
    comps = list(alpha.components)
    x = rng.randrange(c.n_obj)
    if g(x).n_obj:
        comps[x] = gen_functor(rng.getrandbits(64), f(x), g(x))
    rep = validate_two_natural(TwoNatTrans(f, g, comps, check=False))
    assert set(rep.kinds()) <= {"Square"}
    assert validate_two_natural(TwoNatTrans(f, g, comps, check=False)).kinds() == rep.kinds()


# -- modifications ---------------------------------------------------------------


def cyclic_modification(swap_at=None):
    """Over the walking arrow: ``⟨α, *⟩ ⇛ ⟨α, *⟩`` in ``G × Δ_{Z/2}`` with every component ``(id, g)``."""
    c = walking_arrow_two_cat()
    f, g, alpha = gen_two_instance(11, c)
    z2 = cyclic_group(2)
    dz = constant_2functor(c, z2)
    prod = Product2(g, dz)
    a2 = prod.pair(alpha, to_constant(f, dz, 0))
    comps = []
    for x in c.objects:
        gx = g(x)
        k = 0 if x == swap_at else 1
        comps.append(NatTrans(a2[x], a2[x], [gx.identity[y] * z2.n_mor + k for y in alpha[x].obj_map], check=False))
    return a2, Modification(a2, a2, comps, check=False)


def test_identity_modification():
    a2, _ = cyclic_modification()
    assert validate_modification(identity_modification(a2)).ok


def test_replaced_component_gives_one_violation():
    _, m = cyclic_modification()
    assert validate_modification(m).ok
    _, broken = cyclic_modification(swap_at=0)
    assert validate_modification(broken).kinds() == ["ModificationCondition"]


# -- assembly ------------------------------------------------------------------


def test_assemble_identity_case():
    _, _, alpha = gen_two_instance(4, walking_2cell())
    beta, phi = assemble_two_natural(alpha, alpha.components, [identity_nat(a) for a in alpha.components])
    assert beta == alpha
    assert phi == identity_modification(alpha)


@given(seeds)
def test_assemble_conjugation(seed):
    alpha, betas, phis = conjugation_instance(seed)
    beta, phi = assemble_two_natural(alpha, betas, phis)
    assert validate_two_natural(beta).ok
    assert validate_modification(phi).ok
    assert list(beta.components) == betas


def test_assemble_rejects_broken_modification_condition():
    a2, broken = cyclic_modification(swap_at=0)
    with pytest.raises(PreconditionFailed):
        assemble_two_natural(a2, a2.components, broken.components)


# -- pasting -------------------------------------------------------------------


def test_single_leaf():
    t = gen_nat_between(random.Random(0), walking_arrow(), walking_arrow())
    assert paste_whiskers(Cell(t)) == t


@given(seeds)
def test_two_decompositions_agree(seed):
    rng = random.Random(seed)
    x = gen_fincat(rng.getrandbits(64), GenParams(3, 6))
    y = gen_fincat(rng.getrandbits(64), GenParams(3, 6))
    z = gen_fincat(rng.getrandbits(64), GenParams(3, 6))
    if x.n_obj and not y.n_obj:
        y = terminal_category()
    if y.n_obj and not z.n_obj:
        z = terminal_category()
    inner = gen_nat_between(rng, x, y)
    outer = gen_nat_between(rng, y, z)
    first, second = horizontal_decompositions(outer, inner)
    assert paste_whiskers(first) == paste_whiskers(second) == horizontal_compose(outer, inner)


def test_ill_typed_tree_names_the_node():
    rng = random.Random(1)
    t = gen_nat_between(rng, walking_arrow(), walking_arrow())
    expr = Vertical(WhiskerL(identity_functor(walking_arrow()), Cell(t)), WhiskerR(Cell(t), identity_functor(terminal_category())))
    with pytest.raises(BoundaryMismatch) as err:
        paste_whiskers(expr)
    assert err.value.path == ("before",)


def test_validators_are_idempotent():
    f, g, alpha = gen_two_instance(9, walking_2cell())
    assert validate_two_natural(alpha).kinds() == validate_two_natural(alpha).kinds()
    found = one_natural_not_two_natural()[0]
    assert validate_two_natural(found).violations == validate_two_natural(found).violations
