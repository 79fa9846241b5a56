import random

import pytest
from hypothesis import given, strategies as st

from efslift.catalog import (
    discrete_category,
    indiscrete_category,
    relabel_objects,
    terminal_category,
    walking_arrow,
)
from efslift.efs import (
    FillSquare,
    check_separation,
    create_invertible,
    diagonal_fill,
    rigidity_witness,
    two_cell_fill,
)
from efslift.fincat import (
    FinFunctor,
    NatTrans,
    compose_functors,
    identity_functor,
    identity_nat,
    inverse_nat,
    is_identity_nat,
    is_natural_iso,
    whisker_left,
    whisker_right,
)
from efslift.gen import (
    GenParams,
    gen_create_instance,
    gen_fill_instance,
    gen_functor,
    gen_rigidity_instance,
    gen_two_cell_instance,
)
from efslift.report import BoundaryMismatch, NotFullyFaithful, NotInvertible, PreconditionFailed

import oracles

seeds = st.integers(0, 2**64 - 1)


def collapse():
    return FinFunctor(discrete_category(2), terminal_category(), [0, 0], [0, 0])


# -- diagonal fill --------------------------------------------------------------


def test_identity_square():
    c = walking_arrow()
    alpha = gen_functor(3, c, indiscrete_category(2))
    ident_c, ident_d = identity_functor(c), identity_functor(alpha.cod)
    delta, psi_tilde = diagonal_fill(FillSquare(ident_c, ident_d, alpha, alpha))
    assert delta == alpha
    assert is_identity_nat(psi_tilde)


@given(seeds)
def test_commuting_square_gives_strict_fill(seed):
    inst = gen_fill_instance(seed, commuting=True)
    sq = inst.square
    delta, psi_tilde = diagonal_fill(sq)
    assert compose_functors(sq.mu, delta) == sq.alpha_prime
    assert is_identity_nat(psi_tilde)


@given(seeds)
def test_fill_recovers_the_known_answer(seed):
    inst = gen_fill_instance(seed)
    delta, psi_tilde = diagonal_fill(inst.square)
    assert delta == inst.delta0
    assert psi_tilde == inst.psi_tilde0
    assert compose_functors(delta, inst.square.eps) == inst.square.alpha
    assert whisker_right(psi_tilde, inst.square.eps) == inst.square.psi


def test_empty_top_fills_vacuously():
    from efslift.catalog import empty_category

    e = empty_category()
    ident = identity_functor(e)
    target = indiscrete_category(2)
    f = FinFunctor(e, target, [], [])
    delta, psi_tilde = diagonal_fill(FillSquare(ident, identity_functor(target), f, f))
    assert delta.dom == e and psi_tilde.components == ()


def test_square_preconditions():
    c = discrete_category(2)
    t = terminal_category()
    ident = identity_functor(c)
    with pytest.raises(PreconditionFailed, match="bijective"):
        FillSquare(collapse(), identity_functor(t), collapse(), identity_functor(t))
    with pytest.raises(PreconditionFailed, match="fully faithful"):
        FillSquare(ident, collapse(), ident, collapse())
    swap = FinFunctor(c, c, [1, 0], [1, 0])
    with pytest.raises(PreconditionFailed, match="commute"):
        FillSquare(ident, ident, ident, swap)
    i2 = indiscrete_category(2)
    arrow = i2.hom(0, 1)[0]
    p = FinFunctor(t, i2, [0], [i2.identity[0]])
    q = FinFunctor(t, i2, [1], [i2.identity[1]])
    wrong = NatTrans(p, q, [arrow])
    with pytest.raises(PreconditionFailed):
        FillSquare(identity_functor(t), identity_functor(i2), p, p, wrong)


def test_non_invertible_psi_is_refused():
    t = terminal_category()
    w = walking_arrow()
    p = FinFunctor(t, w, [0], [0])
    q = FinFunctor(t, w, [1], [1])
    psi = NatTrans(p, q, [w.hom(0, 1)[0]])
    with pytest.raises(PreconditionFailed, match="invertible"):
        FillSquare(identity_functor(t), identity_functor(w), q, p, psi)


@given(seeds)
def test_fill_is_unique_among_all_candidates(seed):
    inst = gen_fill_instance(seed, GenParams(3, 5))
    sq = inst.square
    if not all(oracles.tiny(c) for c in (sq.eps.dom, sq.eps.cod, sq.mu.dom, sq.mu.cod)):
        return
    sols = oracles.fill_solutions(sq.eps, sq.mu, sq.alpha, sq.alpha_prime, sq.psi)
    assert sols == [(inst.delta0, inst.psi_tilde0)]


# -- 2-cell fill -------------------------------------------------------------------


@given(seeds)
def test_identity_two_cell(seed):
    inst = gen_two_cell_instance(seed)
    d = inst.delta1
    big = two_cell_fill(inst.sq1, inst.sq1, d, d, identity_nat(inst.sq1.alpha), identity_nat(inst.sq1.alpha_prime))
    assert is_identity_nat(big)


@given(seeds)
def test_two_cell_round_trip(seed):
    inst = gen_two_cell_instance(seed)
    big = two_cell_fill(inst.sq1, inst.sq2, None, None, inst.phi, inst.phi_prime)
    assert big == inst.big_delta0
    assert whisker_right(big, inst.sq1.eps) == inst.phi
    assert whisker_left(inst.sq1.mu, big) == inst.phi_prime


def test_incompatible_two_cells():
    # all four functors are id on Z/2; phi = id but phi' = g, so mu phi ≠ phi' eps
    from efslift.catalog import cyclic_group

    ident = identity_functor(cyclic_group(2))
    sq = FillSquare(ident, ident, ident, ident)
    with pytest.raises(PreconditionFailed, match="compatibility"):
        two_cell_fill(sq, sq, ident, ident, identity_nat(ident), NatTrans(ident, ident, [1]))
    g = NatTrans(ident, ident, [1])
    assert two_cell_fill(sq, sq, ident, ident, g, g) == g


def test_two_cell_needs_commuting_squares():
    inst = gen_fill_instance(next(s for s in range(100) if not gen_fill_instance(s).square.commutes))
    sq = inst.square
    with pytest.raises(PreconditionFailed):
        two_cell_fill(sq, sq, None, None, identity_nat(sq.alpha), identity_nat(sq.alpha_prime))


@given(seeds)
def test_two_cell_unique(seed):
    inst = gen_two_cell_instance(seed, GenParams(3, 5))
    sq = inst.sq1
    if not all(oracles.tiny(c) for c in (sq.eps.dom, sq.eps.cod, sq.mu.dom, sq.mu.cod)):
        return
    sols = oracles.two_cell_solutions(sq.eps, sq.mu, inst.delta1, inst.delta2, inst.phi, inst.phi_prime)
    assert sols == [inst.big_delta0]


# -- creating invertible 2-cells ---------------------------------------------------


@given(seeds)
def test_create_identity_cases(seed):
    inst = gen_create_instance(seed)
    ident = identity_nat(inst.alpha)
    assert is_identity_nat(create_invertible(inst.mu, inst.alpha, inst.alpha, whisker_left(inst.mu, ident)))
    g = inst.mu.dom
    assert create_invertible(identity_functor(g), inst.alpha, inst.beta, inst.psi_hat0) == inst.psi_hat0


@given(seeds)
def test_create_round_trip(seed):
    inst = gen_create_instance(seed)
    hat = create_invertible(inst.mu, inst.alpha, inst.beta, inst.psi)
    assert hat == inst.psi_hat0
    assert is_natural_iso(hat)


@given(seeds)
def test_create_unique(seed):
    inst = gen_create_instance(seed, GenParams(3, 5))
    if not all(oracles.tiny(c) for c in (inst.alpha.dom, inst.mu.dom, inst.mu.cod)):
        return
    assert oracles.create_solutions(inst.mu, inst.alpha, inst.beta, inst.psi) == [inst.psi_hat0]


def test_create_errors():
    ident = identity_functor(discrete_category(2))
    with pytest.raises(NotFullyFaithful):
        create_invertible(collapse(), ident, ident, whisker_left(collapse(), identity_nat(ident)))
    t = terminal_category()
    w = walking_arrow()
    p = FinFunctor(t, w, [0], [0])
    q = FinFunctor(t, w, [1], [1])
    with pytest.raises(NotInvertible):
        create_invertible(identity_functor(w), p, q, NatTrans(p, q, [w.hom(0, 1)[0]]))
    with pytest.raises(BoundaryMismatch):
        create_invertible(identity_functor(w), p, identity_functor(w), identity_nat(p))


# -- rigidity --------------------------------------------------------------------


def test_rigidity_identity():
    c = walking_arrow()
    ident = identity_functor(c)
    assert is_identity_nat(rigidity_witness(ident, ident, identity_nat(ident)))


@given(seeds)
def test_rigidity_for_isomorphisms(seed):
    from efslift.gen import gen_fincat

    rng = random.Random(seed)
    c = gen_fincat(rng.getrandbits(64), GenParams(4, 10))
    perm = list(c.objects)
    rng.shuffle(perm)
    copy, iso = relabel_objects(c, perm)
    inv = FinFunctor(copy, c, [perm.index(y) for y in copy.objects], copy.morphisms)
    hat = rigidity_witness(iso, inv, identity_nat(compose_functors(iso, inv)))
    assert is_identity_nat(hat)


def test_rigidity_equivalence_onto_skeleton():
    # 1 ↪ I_2 with the retraction I_2 → 1; psi: µα ⇒ id has components id_0 and 0 → 1
    t = terminal_category()
    i2 = indiscrete_category(2)
    mu = FinFunctor(t, i2, [0], [i2.identity[0]])
    alpha = FinFunctor(i2, t, [0, 0], [0] * i2.n_mor)
    mu_alpha = compose_functors(mu, alpha)
    psi = NatTrans(mu_alpha, identity_functor(i2), [i2.identity[0], i2.hom(0, 1)[0]])
    hat = rigidity_witness(mu, alpha, psi)
    assert is_natural_iso(hat)
    assert whisker_left(mu, hat) == whisker_right(psi, mu)
    assert hat.components == (0,)


@given(seeds)
def test_rigidity_generated(seed):
    inst = gen_rigidity_instance(seed)
    hat = rigidity_witness(inst.mu, inst.alpha, inst.psi)
    assert is_natural_iso(hat)
    assert whisker_left(inst.mu, hat) == whisker_right(inst.psi, inst.mu)
    assert is_identity_nat(vertical_inverse_check(hat))


def vertical_inverse_check(hat):
    from efslift.fincat import vertical_compose

    return vertical_compose(inverse_nat(hat), hat)


def test_rigidity_errors():
    ident = identity_functor(discrete_category(2))
    with pytest.raises(NotFullyFaithful):
        rigidity_witness(collapse(), FinFunctor(terminal_category(), discrete_category(2), [0], [0]), identity_nat(identity_functor(terminal_category())))
    w = walking_arrow()
    wrap = identity_functor(w)
    with pytest.raises(BoundaryMismatch):
        rigidity_witness(wrap, ident, identity_nat(wrap))


# -- separation ---------------------------------------------------------------------


@given(seeds)
def test_separation_on_fill_instances(seed):
    rng = random.Random(seed)
    inst = gen_fill_instance(seed)
    sq = inst.square
    alpha = inst.delta0
    assert check_separation(sq.eps, sq.mu, alpha, alpha)
    g0 = sq.mu.dom
    if not g0.n_obj:
        return
    beta = gen_functor(rng.getrandbits(64), sq.eps.cod, g0)
    premises = (compose_functors(alpha, sq.eps) == compose_functors(beta, sq.eps)
                and compose_functors(sq.mu, alpha) == compose_functors(sq.mu, beta))
    assert check_separation(sq.eps, sq.mu, alpha, beta)
    if alpha != beta:
        assert not premises


def test_separation_boundaries():
    ident = identity_functor(walking_arrow())
    with pytest.raises(BoundaryMismatch):
        check_separation(ident, ident, ident, collapse())
