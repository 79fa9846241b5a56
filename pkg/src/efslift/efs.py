"""The (bijective-on-objects, fully faithful) enhanced factorization system on Cat.

Every fill recomputes its defining equations before returning; a failure
there raises :class:`~efslift.report.InternalError` rather than an input
error, since the inputs already passed their precondition checks.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fincat import (
    FinFunctor,
    NatTrans,
    compose_functors,
    identity_nat,
    is_bijective_on_objects,
    is_fully_faithful,
    is_identity_nat,
    is_natural_iso,
    lift_through_ff,
    validate_nat,
    whisker_left,
    whisker_right,
)
from .report import BoundaryMismatch, NotFullyFaithful, NotInvertible, PreconditionFailed, ensure


@dataclass(frozen=True, eq=False)
class FillSquare:
    """A square ``mu ∘ alpha ≅ alpha_prime ∘ eps`` filled by ``psi: α'ε ⇒ µα``.

    ``eps: F → F'`` is bijective on objects, ``mu: G → G'`` fully faithful,
    ``alpha: F → G`` and ``alpha_prime: F' → G'``.  When ``psi`` is omitted
    the square must commute strictly and ``psi`` becomes the identity.
    """

    eps: FinFunctor
    mu: FinFunctor
    alpha: FinFunctor
    alpha_prime: FinFunctor
    psi: NatTrans = None

    def __post_init__(self):
        if not is_bijective_on_objects(self.eps):
            raise PreconditionFailed("eps is not bijective on objects")
        if not is_fully_faithful(self.mu):
            raise PreconditionFailed("mu is not fully faithful")
        if self.alpha.dom != self.eps.dom or self.alpha.cod != self.mu.dom:
            raise PreconditionFailed("alpha does not run from dom(eps) to dom(mu)")
        if self.alpha_prime.dom != self.eps.cod or self.alpha_prime.cod != self.mu.cod:
            raise PreconditionFailed("alpha_prime does not run from cod(eps) to cod(mu)")
        top = compose_functors(self.alpha_prime, self.eps)
        bottom = compose_functors(self.mu, self.alpha)
        if self.psi is None:
            if top != bottom:
                raise PreconditionFailed("square does not commute and no 2-cell was given")
            object.__setattr__(self, "psi", identity_nat(top))
        else:
            if self.psi.dom != top or self.psi.cod != bottom:
                raise PreconditionFailed("psi is not a transformation alpha_prime∘eps ⇒ mu∘alpha")
            if not is_natural_iso(self.psi):
                raise PreconditionFailed("psi is not invertible")

    @property
    def commutes(self):
        return is_identity_nat(self.psi)


@dataclass(frozen=True, eq=False)
class FillResult:
    delta: FinFunctor
    psi_tilde: NatTrans

    def __iter__(self):
        return iter((self.delta, self.psi_tilde))


def _eps_preimage(eps):
    pre = [0] * eps.cod.n_obj
    for x, y in enumerate(eps.obj_map):
        pre[y] = x
    return pre


def diagonal_fill(sq: FillSquare) -> FillResult:
    """The unique ``(delta, psi_tilde)`` with ``delta∘eps = alpha`` and ``psi_tilde eps = psi``."""
    eps, mu, alpha, alpha_prime, psi = sq.eps, sq.mu, sq.alpha, sq.alpha_prime, sq.psi
    f1 = eps.cod
    g, g2 = mu.dom, mu.cod
    pre = _eps_preimage(eps)
    obj_map = [alpha.obj_map[pre[y]] for y in f1.objects]
    tilde = [psi.components[pre[y]] for y in f1.objects]
    mor_map = []
    for m in f1.morphisms:
        x, y = f1.src[m], f1.tgt[m]
        inv = g2.inverse(tilde[x])
        ensure(inv is not None, "psi has a non-invertible component")
        target = g2.compose(tilde[y], alpha_prime.mor_map[m], inv)
        k = mu.preimage(obj_map[x], obj_map[y], target)
        ensure(k is not None, f"no mu-preimage for morphism {m}")
        mor_map.append(k)
    delta = FinFunctor(f1, g, obj_map, mor_map, check=False)
    psi_tilde = NatTrans(alpha_prime, compose_functors(mu, delta), tilde, check=False)
    ensure(_valid_functor(delta), "diagonal is not a functor")
    ensure(validate_nat(psi_tilde).ok, "psi_tilde is not natural")
    ensure(compose_functors(delta, eps) == alpha, "delta∘eps differs from alpha")
    ensure(whisker_right(psi_tilde, eps) == psi, "psi_tilde eps differs from psi")
    ensure(is_natural_iso(psi_tilde), "psi_tilde is not invertible")
    if sq.commutes:
        ensure(compose_functors(mu, delta) == alpha_prime, "identity square gave mu∘delta ≠ alpha_prime")
        ensure(is_identity_nat(psi_tilde), "identity square gave a non-identity psi_tilde")
    return FillResult(delta, psi_tilde)


def _valid_functor(f):
    from .fincat import validate_functor

    return validate_functor(f).ok


def two_cell_fill(sq1: FillSquare, sq2: FillSquare, delta1, delta2, phi: NatTrans, phi_prime: NatTrans) -> NatTrans:
    """The unique ``Delta: delta1 ⇒ delta2`` with ``Delta eps = phi`` and ``mu Delta = phi_prime``.

    Both squares must commute strictly; ``delta1``/``delta2`` are their
    diagonals (computed when passed as ``None``).
    """
    if not (sq1.commutes and sq2.commutes):
        raise PreconditionFailed("two_cell_fill needs strictly commuting squares")
    if sq1.eps != sq2.eps or sq1.mu != sq2.mu:
        raise PreconditionFailed("squares do not share eps and mu")
    eps, mu = sq1.eps, sq1.mu
    if delta1 is None:
        delta1 = diagonal_fill(sq1).delta
    if delta2 is None:
        delta2 = diagonal_fill(sq2).delta
    for sq, d in ((sq1, delta1), (sq2, delta2)):
        if compose_functors(d, eps) != sq.alpha or compose_functors(mu, d) != sq.alpha_prime:
            raise PreconditionFailed("delta is not the diagonal of its square")
    if phi.dom != sq1.alpha or phi.cod != sq2.alpha:
        raise PreconditionFailed("phi is not alpha1 ⇒ alpha2")
    if phi_prime.dom != sq1.alpha_prime or phi_prime.cod != sq2.alpha_prime:
        raise PreconditionFailed("phi_prime is not alpha1' ⇒ alpha2'")
    if whisker_left(mu, phi).components != whisker_right(phi_prime, eps).components:
        raise PreconditionFailed("compatibility mu phi = phi_prime eps fails")
    pre = _eps_preimage(eps)
    big = NatTrans(delta1, delta2, [phi.components[pre[y]] for y in eps.cod.objects], check=False)
    ensure(validate_nat(big).ok, "Delta is not natural")
    ensure(whisker_right(big, eps) == phi, "Delta eps differs from phi")
    ensure(whisker_left(mu, big) == phi_prime, "mu Delta differs from phi_prime")
    return big


def create_invertible(mu: FinFunctor, alpha: FinFunctor, beta: FinFunctor, psi: NatTrans) -> NatTrans:
    """The unique invertible ``alpha ⇒ beta`` whose whisker by ``mu`` is ``psi``."""
    if not is_fully_faithful(mu):
        raise NotFullyFaithful("post-composition creates 2-cells only for fully faithful functors")
    if alpha.dom != beta.dom or alpha.cod != beta.cod or alpha.cod != mu.dom:
        raise BoundaryMismatch("alpha and beta must be parallel into dom(mu)")
    if not is_natural_iso(psi):
        raise NotInvertible("psi is not invertible")
    hat = lift_through_ff(mu, psi, alpha, beta)
    ensure(is_natural_iso(hat), "lift of an invertible transformation is not invertible")
    return hat


def rigidity_witness(mu: FinFunctor, alpha: FinFunctor, psi: NatTrans) -> NatTrans:
    """For ``mu: F → G`` ff, ``alpha: G → F`` and invertible ``psi: mu∘alpha ⇒ id_G``,
    the unique invertible ``alpha∘mu ⇒ id_F`` whose whisker by ``mu`` is ``psi mu``."""
    if not is_fully_faithful(mu):
        raise NotFullyFaithful("rigidity needs a fully faithful functor")
    if alpha.dom != mu.cod or alpha.cod != mu.dom:
        raise BoundaryMismatch("alpha must run opposite to mu")
    if not is_natural_iso(psi):
        raise NotInvertible("psi is not invertible")
    from .fincat import identity_functor

    ident_g = identity_functor(mu.cod)
    if psi.dom != compose_functors(mu, alpha) or psi.cod != ident_g:
        raise BoundaryMismatch("psi is not mu∘alpha ⇒ id")
    restricted = whisker_right(psi, mu)
    hat = create_invertible(mu, compose_functors(alpha, mu), identity_functor(mu.dom), restricted)
    ensure(whisker_left(mu, hat) == restricted, "mu Phi_hat differs from psi mu")
    return hat


def check_separation(eps: FinFunctor, mu: FinFunctor, alpha: FinFunctor, beta: FinFunctor) -> bool:
    """Whether ``alpha∘eps = beta∘eps`` and ``mu∘alpha = mu∘beta`` force ``alpha = beta``.

    ``True`` when a premise fails or the functors agree; ``False`` would be a
    counterexample to separation of parallel pairs.
    """
    if alpha.dom != beta.dom or alpha.cod != beta.cod:
        raise BoundaryMismatch("alpha and beta are not parallel")
    if eps.cod != alpha.dom or mu.dom != alpha.cod:
        raise BoundaryMismatch("eps must end at, and mu start at, the boundary of alpha")
    if compose_functors(alpha, eps) != compose_functors(beta, eps):
        return True
    if compose_functors(mu, alpha) != compose_functors(mu, beta):
        return True
    return alpha == beta
