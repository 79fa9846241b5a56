"""Constructions of 2-functors ``C → Cat`` and of cells between them.

Representables, constants and levelwise products give strict 2-functors
out of any finite 2-category; the maps between them below are 2-natural by
construction, which is what the random generators rely on.
"""
from __future__ import annotations

from .catalog import (
    constant_functor,
    constant_nat,
    pair_functor,
    pair_nat,
    product_category,
    product_functor,
    product_nat,
    projections,
)
from .fincat import FinCat, FinFunctor, NatTrans, identity_functor, identity_nat
from .report import BoundaryMismatch
from .twocat import CatValued2Functor, FinTwoCat, Modification, TwoNatTrans


def constant_2functor(c: FinTwoCat, k: FinCat) -> CatValued2Functor:
    ident = identity_functor(k)
    inat = identity_nat(ident)
    return CatValued2Functor(
        c, [k] * c.n_obj,
        {ab: [ident] * h.n_obj for ab, h in c.hom.items()},
        {ab: [inat] * h.n_mor for ab, h in c.hom.items()},
        check=False,
    )


def representable(c: FinTwoCat, c0: int) -> CatValued2Functor:
    """The 2-functor ``C(c0, -)``: post-composition with 1-cells and 2-cells."""
    on_obj = [c.hom[(c0, x)] for x in c.objects]
    on_1cell, on_2cell = {}, {}
    for (a, b), h in c.hom.items():
        src, dst = on_obj[a], on_obj[b]
        funs = []
        for x in h.objects:
            idx = h.identity[x]
            funs.append(FinFunctor(
                src, dst,
                [c.comp1(c0, a, b, x, y) for y in src.objects],
                [c.comp2(c0, a, b, idx, m) for m in src.morphisms],
                check=False,
            ))
        nats = []
        for m in h.morphisms:
            comps = [c.comp2(c0, a, b, m, src.identity[y]) for y in src.objects]
            nats.append(NatTrans(funs[h.src[m]], funs[h.tgt[m]], comps, check=False))
        on_1cell[(a, b)] = funs
        on_2cell[(a, b)] = nats
    return CatValued2Functor(c, on_obj, on_1cell, on_2cell, check=False)


def yoneda_2nat(c: FinTwoCat, c0: int, c1: int, u: int, rep0=None, rep1=None) -> TwoNatTrans:
    """``C(c1, -) ⇒ C(c0, -)``, pre-composition with the 1-cell ``u: c0 → c1``."""
    rep0 = rep0 if rep0 is not None else representable(c, c0)
    rep1 = rep1 if rep1 is not None else representable(c, c1)
    idu = c.hom[(c0, c1)].identity[u]
    comps = []
    for x in c.objects:
        src, dst = rep1(x), rep0(x)
        comps.append(FinFunctor(
            src, dst,
            [c.comp1(c0, c1, x, y, u) for y in src.objects],
            [c.comp2(c0, c1, x, m, idu) for m in src.morphisms],
            check=False,
        ))
    return TwoNatTrans(rep1, rep0, comps, check=False)


class Product2:
    """A levelwise product ``F × G`` together with its factors."""

    def __init__(self, fst: CatValued2Functor, snd: CatValued2Functor):
        self.fst, self.snd = fst, snd
        c = fst.dom
        cats = [product_category(fst(x), snd(x)) for x in c.objects]
        on_1cell, on_2cell = {}, {}
        for (a, b), h in c.hom.items():
            on_1cell[(a, b)] = [
                product_functor(fst.cell1(a, b, x), snd.cell1(a, b, x), cats[a], cats[b]) for x in h.objects
            ]
            on_2cell[(a, b)] = [
                product_nat(fst.cell2(a, b, m), snd.cell2(a, b, m), cats[a], cats[b]) for m in h.morphisms
            ]
        self.fun = CatValued2Functor(c, cats, on_1cell, on_2cell, check=False)
        self._proj = None

    def projections(self):
        if self._proj is None:
            c = self.fst.dom
            pairs = [projections(self.fst(x), self.snd(x), self.fun(x)) for x in c.objects]
            self._proj = (
                TwoNatTrans(self.fun, self.fst, [p for p, _ in pairs], check=False),
                TwoNatTrans(self.fun, self.snd, [q for _, q in pairs], check=False),
            )
        return self._proj

    def pair(self, a: TwoNatTrans, b: TwoNatTrans) -> TwoNatTrans:
        """``⟨a, b⟩: H ⇒ F × G``."""
        if a.cod != self.fst or b.cod != self.snd or a.dom != b.dom:
            raise BoundaryMismatch("pairing needs 2-natural transformations into the factors")
        comps = [pair_functor(p, q, self.fun(x)) for x, (p, q) in enumerate(zip(a.components, b.components))]
        return TwoNatTrans(a.dom, self.fun, comps, check=False)

    def pair_modification(self, p: Modification, q: Modification) -> Modification:
        dom = self.pair(p.dom, q.dom)
        cod = self.pair(p.cod, q.cod)
        comps = [pair_nat(s, t, self.fun(x)) for x, (s, t) in enumerate(zip(p.components, q.components))]
        return Modification(dom, cod, comps, check=False)


def product2(fst, snd) -> Product2:
    return Product2(fst, snd)


def product_2nat(a: TwoNatTrans, b: TwoNatTrans, dom: Product2, cod: Product2) -> TwoNatTrans:
    """``a × b: F × G ⇒ F' × G'``."""
    comps = [
        product_functor(p, q, dom.fun(x), cod.fun(x))
        for x, (p, q) in enumerate(zip(a.components, b.components))
    ]
    return TwoNatTrans(dom.fun, cod.fun, comps, check=False)


def to_constant(h: CatValued2Functor, target: CatValued2Functor, y: int) -> TwoNatTrans:
    """``H ⇒ Δ_K`` sending everything to the object ``y`` of ``K``."""
    k = target(0) if target.dom.n_obj else None
    return TwoNatTrans(h, target, [constant_functor(h(x), k, y) for x in h.dom.objects], check=False)


def constant_2nat(source: CatValued2Functor, target: CatValued2Functor, phi: FinFunctor) -> TwoNatTrans:
    """``Δ_φ: Δ_K ⇒ Δ_L`` for a functor ``φ: K → L``."""
    return TwoNatTrans(source, target, [phi] * source.dom.n_obj, check=False)


def constant_modification(h: CatValued2Functor, target: CatValued2Functor, m: int, k: FinCat = None) -> Modification:
    """Modification between two maps ``H ⇒ Δ_K`` to constants, every component ``m``.

    ``k`` is only needed when the shape has no objects to read ``K`` from.
    """
    k = k if k is not None else target(0)
    dom = to_constant(h, target, k.src[m])
    cod = to_constant(h, target, k.tgt[m])
    return Modification(dom, cod, [constant_nat(h(x), k, m) for x in h.dom.objects], check=False)


def product_modification(p: Modification, q: Modification, dom: Product2, cod: Product2) -> Modification:
    comps = [
        product_nat(s, t, dom.fun(x), cod.fun(x)) for x, (s, t) in enumerate(zip(p.components, q.components))
    ]
    return Modification(
        product_2nat(p.dom, q.dom, dom, cod), product_2nat(p.cod, q.cod, dom, cod), comps, check=False
    )


def two_object_2functor(c: FinTwoCat, a0: FinCat, a1: FinCat, cells, nats) -> CatValued2Functor:
    """2-functor out of a two-object shape whose only non-unit homs are ``hom(0, 1)``.

    ``cells[x]`` is the functor ``a0 → a1`` for 1-cell ``x`` and ``nats[m]``
    the transformation for 2-cell ``m`` of ``hom(0, 1)``.
    """
    on_obj = [a0, a1]
    on_1cell = {(0, 0): [identity_functor(a0)], (1, 1): [identity_functor(a1)], (1, 0): [], (0, 1): list(cells)}
    on_2cell = {
        (0, 0): [identity_nat(on_1cell[(0, 0)][0])],
        (1, 1): [identity_nat(on_1cell[(1, 1)][0])],
        (1, 0): [],
        (0, 1): list(nats),
    }
    return CatValued2Functor(c, on_obj, on_1cell, on_2cell)


def discrete_2functor(c: FinTwoCat, cats) -> CatValued2Functor:
    """2-functor out of a discrete 2-category: one category per object."""
    on_1cell, on_2cell = {}, {}
    for (a, b), h in c.hom.items():
        if a == b:
            ident = identity_functor(cats[a])
            on_1cell[(a, b)] = [ident]
            on_2cell[(a, b)] = [identity_nat(ident)]
        else:
            on_1cell[(a, b)] = []
            on_2cell[(a, b)] = []
    return CatValued2Functor(c, cats, on_1cell, on_2cell)


def composite_2functor(c: FinTwoCat, chain, funs) -> CatValued2Functor:
    """2-functor out of ``locally_discrete(chain_category(n))`` from a chain of functors.

    ``funs[i]`` maps ``chain[i] → chain[i+1]``; longer 1-cells go to composites.
    """
    from .fincat import compose_functors

    n = len(chain)
    on_1cell, on_2cell = {}, {}
    for (a, b), h in c.hom.items():
        if a > b:
            on_1cell[(a, b)], on_2cell[(a, b)] = [], []
            continue
        f = identity_functor(chain[a])
        for i in range(a, b):
            f = compose_functors(funs[i], f)
        on_1cell[(a, b)] = [f]
        on_2cell[(a, b)] = [identity_nat(f)]
    assert n == c.n_obj
    return CatValued2Functor(c, chain, on_1cell, on_2cell)
