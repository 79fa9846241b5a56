"""Finite strict 2-categories and the functor 2-category ``Cat^C``.

A :class:`FinTwoCat` stores one :class:`FinCat` per ordered pair of objects
(1-cells are its objects, 2-cells its morphisms) and horizontal composition
as functors out of product categories.  :class:`CatValued2Functor`,
:class:`TwoNatTrans` and :class:`Modification` are the objects, 1-cells and
2-cells of ``Cat^C``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .catalog import product_category
from .fincat import (
    FinCat,
    FinFunctor,
    NatTrans,
    compose_functors,
    identity_functor,
    identity_nat,
    inverse_nat,
    is_natural_iso,
    validate_functor,
    vertical_compose,
    whisker_left,
    whisker_right,
)
from .report import (
    BoundaryMismatch,
    InvalidInput,
    NotInvertible,
    PreconditionFailed,
    Report,
    ValidationError,
    ensure,
)


class FinTwoCat:
    """A finite strict 2-category.

    ``hom[(a, b)]`` is the hom category, ``hcomp[(a, b, c)]`` the composition
    functor ``hom(b, c) × hom(a, b) → hom(a, c)`` and ``unit[a]`` the identity
    1-cell of ``a`` (an object of ``hom(a, a)``).
    """

    def __init__(self, n_obj, hom, hcomp, unit, *, ob_names=None, check=True):
        self.n_obj = n_obj
        self.hom = dict(hom)
        self.hcomp = dict(hcomp)
        self.unit = tuple(unit)
        self.ob_names = tuple(ob_names) if ob_names is not None else tuple(str(a) for a in range(n_obj))
        if check:
            report = validate_two_cat(self)
            if not report.ok:
                raise ValidationError(report, "2-category")

    @property
    def objects(self):
        return range(self.n_obj)

    def comp1(self, a, b, c, g, f):
        """Horizontal composite ``g ∘ f`` of 1-cells ``f: a → b`` and ``g: b → c``."""
        return self.hcomp[(a, b, c)].obj_map[g * self.hom[(a, b)].n_obj + f]

    def comp2(self, a, b, c, mu, lam):
        """Horizontal composite ``mu ⋆ lam`` of 2-cells."""
        return self.hcomp[(a, b, c)].mor_map[mu * self.hom[(a, b)].n_mor + lam]

    def one_cells(self):
        for (a, b), h in sorted(self.hom.items()):
            for x in h.objects:
                yield a, b, x

    def two_cells(self, include_identities=True):
        for (a, b), h in sorted(self.hom.items()):
            for m in h.morphisms:
                if include_identities or not h.is_identity(m):
                    yield a, b, m

    def has_nonidentity_2cells(self):
        return any(True for _ in self.two_cells(include_identities=False))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinTwoCat):
            return NotImplemented
        return (
            self.n_obj == other.n_obj
            and self.unit == other.unit
            and self.hom == other.hom
            and self.hcomp == other.hcomp
        )

    def __hash__(self):
        return hash((self.n_obj, self.unit))

    def __repr__(self):
        return f"FinTwoCat(objects={self.n_obj})"


def make_two_cat(n_obj, hom, comp1, comp2, unit, *, ob_names=None, check=True):
    """Build a 2-category from hom categories and composition given as functions.

    ``comp1(a, b, c, g, f)`` composes 1-cells and ``comp2(a, b, c, mu, lam)``
    composes 2-cells, both by ids in the respective hom categories.
    """
    hcomp = {}
    for a, b, c in itertools.product(range(n_obj), repeat=3):
        hbc, hab, hac = hom[(b, c)], hom[(a, b)], hom[(a, c)]
        prod = product_category(hbc, hab)
        obj_map = [comp1(a, b, c, g, f) for g in hbc.objects for f in hab.objects]
        mor_map = [comp2(a, b, c, mu, lam) for mu in hbc.morphisms for lam in hab.morphisms]
        hcomp[(a, b, c)] = FinFunctor(prod, hac, obj_map, mor_map, check=check)
    return FinTwoCat(n_obj, hom, hcomp, unit, ob_names=ob_names, check=check)


def validate_two_cat(c: FinTwoCat) -> Report:
    report = Report()
    objs = list(c.objects)
    for a, b in itertools.product(objs, repeat=2):
        if (a, b) not in c.hom:
            report.add("MissingHom", a, b)
    if len(c.unit) != c.n_obj:
        report.add("MissingUnit")
    if not report.ok:
        return report
    for a in objs:
        if not 0 <= c.unit[a] < c.hom[(a, a)].n_obj:
            report.add("MissingUnit", a)
    for a, b, d in itertools.product(objs, repeat=3):
        h = c.hcomp.get((a, b, d))
        if h is None:
            report.add("MissingHcomp", a, b, d)
            continue
        if h.dom != product_category(c.hom[(b, d)], c.hom[(a, b)]) or h.cod != c.hom[(a, d)]:
            report.add("HcompBoundary", a, b, d)
            continue
        report.extend(validate_functor(h), prefix=("Hcomp", a, b, d))
    if not report.ok:
        return report

    for a, b in itertools.product(objs, repeat=2):
        hab = c.hom[(a, b)]
        ua, ub = c.unit[a], c.unit[b]
        ida = c.hom[(a, a)].identity[ua]
        idb = c.hom[(b, b)].identity[ub]
        for f in hab.objects:
            if c.comp1(a, b, b, ub, f) != f:
                report.add("LeftUnit", a, b, f)
            if c.comp1(a, a, b, f, ua) != f:
                report.add("RightUnit", a, b, f)
        for m in hab.morphisms:
            if c.comp2(a, b, b, idb, m) != m:
                report.add("LeftUnit2", a, b, m)
            if c.comp2(a, a, b, m, ida) != m:
                report.add("RightUnit2", a, b, m)

    for a, b, d, e in itertools.product(objs, repeat=4):
        hde, hbd, hab = c.hom[(d, e)], c.hom[(b, d)], c.hom[(a, b)]
        for x, y, z in itertools.product(hde.morphisms, hbd.morphisms, hab.morphisms):
            left = c.comp2(a, b, e, c.comp2(b, d, e, x, y), z)
            right = c.comp2(a, d, e, x, c.comp2(a, b, d, y, z))
            if left != right:
                report.add("Associativity", a, b, d, e, x, y, z)

    # interchange, stated directly
    for a, b, d in itertools.product(objs, repeat=3):
        hbd, hab, had = c.hom[(b, d)], c.hom[(a, b)], c.hom[(a, d)]
        for (v2, v1), (u2, u1) in itertools.product(hbd.comp, hab.comp):
            left = c.comp2(a, b, d, hbd.comp[(v2, v1)], hab.comp[(u2, u1)])
            right = had.comp[(c.comp2(a, b, d, v2, u2), c.comp2(a, b, d, v1, u1))]
            if left != right:
                report.add("Interchange", a, b, d, v2, v1, u2, u1)
    return report


# ----------------------------------------------------------------------------
# 2-functors C → Cat


class CatValued2Functor:
    """A strict 2-functor from a finite 2-category into ``Cat``.

    ``on_1cell[(a, b)][x]`` is the functor assigned to 1-cell ``x: a → b`` and
    ``on_2cell[(a, b)][m]`` the natural transformation assigned to 2-cell ``m``.
    """

    def __init__(self, dom: FinTwoCat, on_obj, on_1cell, on_2cell, *, check=True):
        self.dom = dom
        self.on_obj = tuple(on_obj)
        self.on_1cell = {k: tuple(v) for k, v in on_1cell.items()}
        self.on_2cell = {k: tuple(v) for k, v in on_2cell.items()}
        if check:
            report = validate_two_functor(self)
            if not report.ok:
                raise ValidationError(report, "2-functor")

    def cell1(self, a, b, x) -> FinFunctor:
        return self.on_1cell[(a, b)][x]

    def cell2(self, a, b, m) -> NatTrans:
        return self.on_2cell[(a, b)][m]

    def __call__(self, c) -> FinCat:
        return self.on_obj[c]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, CatValued2Functor):
            return NotImplemented
        return (
            self.on_obj == other.on_obj
            and self.on_1cell == other.on_1cell
            and self.on_2cell == other.on_2cell
            and self.dom == other.dom
        )

    def __hash__(self):
        return hash(self.on_obj)

    def __repr__(self):
        return f"CatValued2Functor(on_obj={self.on_obj})"


def validate_two_functor(f: CatValued2Functor) -> Report:
    report = Report()
    c = f.dom
    if len(f.on_obj) != c.n_obj:
        report.add("BadArity")
        return report
    for (a, b), h in c.hom.items():
        ones = f.on_1cell.get((a, b), ())
        twos = f.on_2cell.get((a, b), ())
        if len(ones) != h.n_obj or len(twos) != h.n_mor:
            report.add("BadArity", a, b)
            continue
        for x, fx in enumerate(ones):
            if fx.dom != f.on_obj[a] or fx.cod != f.on_obj[b]:
                report.add("Boundary1Cell", a, b, x)
        for m, fm in enumerate(twos):
            if fm.dom != ones[h.src[m]] or fm.cod != ones[h.tgt[m]]:
                report.add("Boundary2Cell", a, b, m)
    if not report.ok:
        return report

    for a in c.objects:
        if f.cell1(a, a, c.unit[a]) != identity_functor(f.on_obj[a]):
            report.add("Unit1Cell", a)
    for (a, b), h in sorted(c.hom.items()):
        for x in h.objects:
            if f.cell2(a, b, h.identity[x]) != identity_nat(f.cell1(a, b, x)):
                report.add("Identity2Cell", a, b, x)
        for (m2, m1), m in h.comp.items():
            if h.is_identity(m1) or h.is_identity(m2):
                continue
            if vertical_compose(f.cell2(a, b, m2), f.cell2(a, b, m1)) != f.cell2(a, b, m):
                report.add("Vertical2Cell", a, b, m2, m1)

    for a, b, d in itertools.product(c.objects, repeat=3):
        hbd, hab = c.hom[(b, d)], c.hom[(a, b)]
        for g in hbd.objects:
            for x in hab.objects:
                composite = compose_functors(f.cell1(b, d, g), f.cell1(a, b, x))
                if composite != f.cell1(a, d, c.comp1(a, b, d, g, x)):
                    report.add("Composition1Cell", a, b, d, g, x)
        for mu in hbd.morphisms:
            for lam in hab.morphisms:
                if hbd.is_identity(mu) and hab.is_identity(lam):
                    continue
                star = _hcomp_nat(f.cell2(b, d, mu), f.cell2(a, b, lam))
                if star != f.cell2(a, d, c.comp2(a, b, d, mu, lam)).components:
                    report.add("Horizontal2Cell", a, b, d, mu, lam)
    return report


def _hcomp_nat(outer: NatTrans, inner: NatTrans):
    """Components of ``outer ⋆ inner`` (no boundary checks)."""
    z = outer.target
    cod_map = outer.cod.mor_map
    fo = inner.dom.obj_map
    return tuple(
        z.comp[(cod_map[inner.components[x]], outer.components[fo[x]])] for x in inner.source.objects
    )


# ----------------------------------------------------------------------------
# 2-natural transformations and modifications


class TwoNatTrans:
    """A 2-natural transformation ``dom ⇒ cod`` with one functor per object."""

    def __init__(self, dom: CatValued2Functor, cod: CatValued2Functor, components, *, check=True):
        self.dom = dom
        self.cod = cod
        self.components = tuple(components)
        if check:
            report = validate_two_natural(self)
            if not report.ok:
                raise ValidationError(report, "2-natural transformation")

    def __getitem__(self, c) -> FinFunctor:
        return self.components[c]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, TwoNatTrans):
            return NotImplemented
        return self.components == other.components and self.dom == other.dom and self.cod == other.cod

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"TwoNatTrans({len(self.components)} components)"


def validate_two_natural(a: TwoNatTrans) -> Report:
    report = Report()
    f, g = a.dom, a.cod
    if f.dom != g.dom:
        report.add("NotParallel")
        return report
    c = f.dom
    if len(a.components) != c.n_obj:
        report.add("BadArity")
        return report
    for x, comp in enumerate(a.components):
        if comp.dom != f(x) or comp.cod != g(x):
            report.add("ComponentBoundary", x)
    if not report.ok:
        return report
    for (s, t), h in sorted(c.hom.items()):
        for x in h.objects:
            left = compose_functors(g.cell1(s, t, x), a[s])
            right = compose_functors(a[t], f.cell1(s, t, x))
            if left != right:
                report.add("Square", s, t, x)
        for m in h.morphisms:
            if h.is_identity(m):
                continue
            left = whisker_left(a[t], f.cell2(s, t, m))
            right = whisker_right(g.cell2(s, t, m), a[s])
            if left.components != right.components:
                report.add("TwoCell", s, t, m)
    return report


class Modification:
    """A modification ``dom ⇛ cod`` between parallel 2-natural transformations."""

    def __init__(self, dom: TwoNatTrans, cod: TwoNatTrans, components, *, check=True):
        self.dom = dom
        self.cod = cod
        self.components = tuple(components)
        if check:
            report = validate_modification(self)
            if not report.ok:
                raise ValidationError(report, "modification")

    def __getitem__(self, c) -> NatTrans:
        return self.components[c]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Modification):
            return NotImplemented
        return self.components == other.components and self.dom == other.dom and self.cod == other.cod

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"Modification({len(self.components)} components)"


def validate_modification(m: Modification) -> Report:
    report = Report()
    a, b = m.dom, m.cod
    if a.dom != b.dom or a.cod != b.cod:
        report.add("NotParallel")
        return report
    f, g = a.dom, a.cod
    c = f.dom
    if len(m.components) != c.n_obj:
        report.add("BadArity")
        return report
    for x, phi in enumerate(m.components):
        if phi.dom != a[x] or phi.cod != b[x]:
            report.add("ComponentBoundary", x)
    if not report.ok:
        return report
    for s, t, x in c.one_cells():
        left = whisker_left(g.cell1(s, t, x), m[s])
        right = whisker_right(m[t], f.cell1(s, t, x))
        if left.components != right.components:
            report.add("ModificationCondition", s, t, x)
    return report


def identity_two_nat(f: CatValued2Functor) -> TwoNatTrans:
    return TwoNatTrans(f, f, [identity_functor(f(c)) for c in f.dom.objects], check=False)


def compose_two_nat(b: TwoNatTrans, a: TwoNatTrans) -> TwoNatTrans:
    if a.cod != b.dom:
        raise BoundaryMismatch("2-natural transformations are not composable")
    return TwoNatTrans(a.dom, b.cod, [compose_functors(q, p) for p, q in zip(a.components, b.components)], check=False)


def identity_modification(a: TwoNatTrans) -> Modification:
    return Modification(a, a, [identity_nat(p) for p in a.components], check=False)


def vertical_compose_mod(q: Modification, p: Modification) -> Modification:
    if p.cod != q.dom:
        raise BoundaryMismatch("modifications are not composable")
    return Modification(p.dom, q.cod, [vertical_compose(y, x) for x, y in zip(p.components, q.components)], check=False)


def whisker_mod_left(mu: TwoNatTrans, phi: Modification) -> Modification:
    """``mu phi``: components ``mu_c phi_c``."""
    return Modification(
        compose_two_nat(mu, phi.dom), compose_two_nat(mu, phi.cod),
        [whisker_left(mu[c], phi[c]) for c in range(len(phi.components))], check=False,
    )


def whisker_mod_right(phi: Modification, eps: TwoNatTrans) -> Modification:
    """``phi eps``: components ``phi_c eps_c``."""
    return Modification(
        compose_two_nat(phi.dom, eps), compose_two_nat(phi.cod, eps),
        [whisker_right(phi[c], eps[c]) for c in range(len(phi.components))], check=False,
    )


def is_invertible_modification(m: Modification) -> bool:
    return all(is_natural_iso(p) for p in m.components)


def inverse_modification(m: Modification) -> Modification:
    if not is_invertible_modification(m):
        raise NotInvertible("modification has a non-invertible component")
    return Modification(m.cod, m.dom, [inverse_nat(p) for p in m.components], check=False)


# ----------------------------------------------------------------------------
# assembling a 2-natural transformation from an isomorphic family


def _pasting_steps(alpha, beta_components, phi_components, s, t, lam):
    """The chain of pasting equalities showing 2-naturality of beta at ``lam``.

    Returns the list of intermediate 2-cells, the first and last of which are
    ``β_t F(λ) · Φ_t F(f)`` and ``G(λ) β_s · Φ_t F(f)``; each must equal the next.
    """
    f_, g_ = alpha.dom, alpha.cod
    h = f_.dom.hom[(s, t)]
    f1, g1 = h.src[lam], h.tgt[lam]
    ff, fg = f_.cell1(s, t, f1), f_.cell1(s, t, g1)
    gf, gg = g_.cell1(s, t, f1), g_.cell1(s, t, g1)
    fl, gl = f_.cell2(s, t, lam), g_.cell2(s, t, lam)
    phi_s, phi_t = phi_components[s], phi_components[t]
    beta_s, beta_t = beta_components[s], beta_components[t]
    alpha_s, alpha_t = alpha[s], alpha[t]

    phi_ff = whisker_right(phi_t, ff)
    return [
        # β_t F(λ) · Φ_t F(f), one decomposition of Φ_t ⋆ F(λ)
        vertical_compose(whisker_left(beta_t, fl), phi_ff),
        # Φ_t F(g) · α_t F(λ), the other decomposition
        vertical_compose(whisker_right(phi_t, fg), whisker_left(alpha_t, fl)),
        # 2-naturality of α: α_t F(λ) = G(λ) α_s
        vertical_compose(whisker_right(phi_t, fg), whisker_right(gl, alpha_s)),
        # modification condition at g: Φ_t F(g) = G(g) Φ_s
        vertical_compose(whisker_left(gg, phi_s), whisker_right(gl, alpha_s)),
        # interchange for G(λ) ⋆ Φ_s
        vertical_compose(whisker_right(gl, beta_s), whisker_left(gf, phi_s)),
        # modification condition at f: G(f) Φ_s = Φ_t F(f)
        vertical_compose(whisker_right(gl, beta_s), phi_ff),
    ], phi_ff, whisker_left(beta_t, fl), whisker_right(gl, beta_s)


def assemble_two_natural(alpha: TwoNatTrans, beta_components, phi_components):
    """Promote a 1-natural family isomorphic to ``alpha`` to a 2-natural transformation.

    ``beta_components[c]`` are functors ``F(c) → G(c)`` whose naturality
    squares commute and ``phi_components[c]: alpha_c ⇒ beta_c`` invertible
    transformations satisfying the modification condition.  The 2-cell
    condition on beta is derived step by step by the pasting argument and
    then re-verified directly.  Returns ``(beta, phi)``.
    """
    report = validate_two_natural(alpha)
    if not report.ok:
        raise InvalidInput(f"alpha is not 2-natural: {report}")
    f_, g_ = alpha.dom, alpha.cod
    c = f_.dom
    beta_components = list(beta_components)
    phi_components = list(phi_components)
    if len(beta_components) != c.n_obj or len(phi_components) != c.n_obj:
        raise BoundaryMismatch("one component per object is required")
    for x in c.objects:
        b, p = beta_components[x], phi_components[x]
        if b.dom != f_(x) or b.cod != g_(x):
            raise BoundaryMismatch(f"beta component at {x} has the wrong boundary")
        if p.dom != alpha[x] or p.cod != b:
            raise BoundaryMismatch(f"phi component at {x} is not alpha_c ⇒ beta_c")
        if not is_natural_iso(p):
            raise NotInvertible(x)
    for s, t, x in c.one_cells():
        if compose_functors(g_.cell1(s, t, x), beta_components[s]) != compose_functors(beta_components[t], f_.cell1(s, t, x)):
            raise PreconditionFailed(("square", s, t, x))
        left = whisker_left(g_.cell1(s, t, x), phi_components[s])
        right = whisker_right(phi_components[t], f_.cell1(s, t, x))
        if left != right:
            raise PreconditionFailed(("modification", s, t, x))

    for s, t, lam in c.two_cells(include_identities=False):
        steps, phi_ff, lhs, rhs = _pasting_steps(alpha, beta_components, phi_components, s, t, lam)
        for k in range(len(steps) - 1):
            ensure(steps[k] == steps[k + 1], f"pasting step {k} fails at 2-cell {(s, t, lam)}")
        inv = inverse_nat(phi_ff)
        ensure(vertical_compose(steps[0], inv) == lhs, "cancelling the invertible 2-cell failed")
        ensure(vertical_compose(steps[-1], inv) == rhs, "cancelling the invertible 2-cell failed")

    beta = TwoNatTrans(f_, g_, beta_components, check=False)
    ensure(validate_two_natural(beta).ok, "assembled family is not 2-natural")
    phi = Modification(alpha, beta, phi_components, check=False)
    ensure(validate_modification(phi).ok, "assembled family is not a modification")
    return beta, phi


# ----------------------------------------------------------------------------
# pasting expressions built from whiskering and vertical composition


@dataclass(frozen=True)
class Cell:
    nat: NatTrans


@dataclass(frozen=True)
class WhiskerL:
    functor: FinFunctor
    expr: object


@dataclass(frozen=True)
class WhiskerR:
    expr: object
    functor: FinFunctor


@dataclass(frozen=True)
class Vertical:
    after: object
    before: object


def paste_whiskers(expr, _path=()):
    """Evaluate a pasting expression; ``BoundaryMismatch`` names the offending node."""
    if isinstance(expr, NatTrans):
        return expr
    if isinstance(expr, Cell):
        return expr.nat
    try:
        if isinstance(expr, WhiskerL):
            inner = paste_whiskers(expr.expr, _path + ("expr",))
            return whisker_left(expr.functor, inner)
        if isinstance(expr, WhiskerR):
            inner = paste_whiskers(expr.expr, _path + ("expr",))
            return whisker_right(inner, expr.functor)
        if isinstance(expr, Vertical):
            before = paste_whiskers(expr.before, _path + ("before",))
            after = paste_whiskers(expr.after, _path + ("after",))
            return vertical_compose(after, before)
    except BoundaryMismatch as err:
        if getattr(err, "path", None) is not None:
            raise
        exc = BoundaryMismatch(f"at node {'/'.join(_path) or 'root'}: {err}")
        exc.path = _path
        raise exc from None
    raise InvalidInput(f"not a pasting expression: {expr!r}")


def horizontal_decompositions(outer: NatTrans, inner: NatTrans):
    """The two whisker-and-compose expressions for ``outer ⋆ inner``.

    For ``inner: F ⇒ F'`` and ``outer: G ⇒ G'`` these are
    ``G' inner · outer F`` and ``outer F' · G inner``.
    """
    first = Vertical(WhiskerL(outer.cod, Cell(inner)), WhiskerR(Cell(outer), inner.dom))
    second = Vertical(WhiskerR(Cell(outer), inner.cod), WhiskerL(outer.dom, Cell(inner)))
    return first, second
