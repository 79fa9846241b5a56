"""Small strict 2-categories used as indexing shapes."""
from __future__ import annotations

import itertools

from .catalog import (
    chain_category,
    discrete_category,
    empty_category,
    preorder_category,
    product_category,
    terminal_category,
    walking_arrow,
)
from .fincat import FinCat
from .twocat import FinTwoCat, make_two_cat


def _units_only(n_obj, hom, unit, names=None):
    """2-category in which every composable pair involves an identity 1-cell."""

    def comp1(a, b, c, g, f):
        if a == b:
            return g
        if b == c:
            return f
        raise ValueError("non-unit composite in a units-only 2-category")

    def comp2(a, b, c, mu, lam):
        if a == b:
            return mu
        if b == c:
            return lam
        raise ValueError("non-unit composite in a units-only 2-category")

    return make_two_cat(n_obj, hom, comp1, comp2, unit, ob_names=names)


def terminal_two_cat():
    return discrete_two_cat(1)


def discrete_two_cat(n):
    hom = {(a, b): terminal_category("1") if a == b else empty_category() for a in range(n) for b in range(n)}
    return _units_only(n, hom, [0] * n)


def _two_object(hom01: FinCat):
    hom = {(0, 0): terminal_category("1"), (1, 1): terminal_category("1"), (0, 1): hom01, (1, 0): empty_category()}
    return _units_only(2, hom, [0, 0])


def walking_2cell():
    """Two objects, 1-cells ``f, g: 0 → 1`` and one 2-cell ``f ⇒ g``."""
    return _two_object(FinCat.build(["f", "g"], {"lam": ("f", "g")}))


def composable_2cells():
    """Two objects and a composable pair of 2-cells ``f ⇒ g ⇒ h``."""
    return _two_object(
        FinCat.build(["f", "g", "h"], {"lam": ("f", "g"), "eta": ("g", "h"), "eta.lam": ("f", "h")}, {("eta", "lam"): "eta.lam"})
    )


def locally_discrete(c: FinCat) -> FinTwoCat:
    """The 1-category ``c`` viewed as a 2-category with only identity 2-cells."""
    n = c.n_obj
    hom, pos = {}, {}
    for a, b in itertools.product(range(n), repeat=2):
        ms = c.hom(a, b)
        pos[(a, b)] = {m: k for k, m in enumerate(ms)}
        hom[(a, b)] = discrete_category(len(ms), names=[c.mor_names[m] for m in ms])

    def comp1(a, b, d, g, f):
        m = c.comp[(c.hom(b, d)[g], c.hom(a, b)[f])]
        return pos[(a, d)][m]

    def comp2(a, b, d, mu, lam):
        # identity 2-cells of discrete homs share ids with their 1-cells
        return comp1(a, b, d, mu, lam)

    unit = [pos[(a, a)][c.identity[a]] for a in range(n)]
    return make_two_cat(n, hom, comp1, comp2, unit, ob_names=c.ob_names)


def walking_arrow_two_cat():
    return locally_discrete(walking_arrow())


def composable_1cells():
    return locally_discrete(chain_category(3))


def one_object(table, unit=0):
    """One-object 2-category from a commutative monoid.

    1-cells are monoid elements composed by multiplication; there is a
    unique 2-cell ``m ⇒ n`` whenever ``n = m·k`` for some ``k``.
    """
    n = len(table)
    relations = set()
    for m in range(n):
        for k in range(n):
            p = table[m][k]
            if p != m:
                relations.add((m, p))
    # divisibility is a preorder; collapse it to a thin category with every relation
    le = {(m, m) for m in range(n)} | relations
    changed = True
    while changed:
        changed = False
        for (a, b), (x, y) in itertools.product(list(le), repeat=2):
            if b == x and (a, y) not in le:
                le.add((a, y))
                changed = True
    hom00 = _thin_from_relation(n, le, [f"e{m}" for m in range(n)])
    arrow = {(hom00.src[k], hom00.tgt[k]): k for k in hom00.morphisms}

    def comp1(a, b, c, g, f):
        return table[g][f]

    def comp2(a, b, c, mu, lam):
        s = table[hom00.src[mu]][hom00.src[lam]]
        t = table[hom00.tgt[mu]][hom00.tgt[lam]]
        return arrow[(s, t)]

    return make_two_cat(1, {(0, 0): hom00}, comp1, comp2, [unit])


def _thin_from_relation(n, le, names):
    pairs = sorted(le)
    index = {p: k for k, p in enumerate(pairs)}
    comp = {}
    for (a, b), (x, y) in itertools.product(pairs, repeat=2):
        if b == x:
            comp[(index[(x, y)], index[(a, b)])] = index[(a, y)]
    mor_names = [None if a == b else f"{names[a]}~{names[b]}" for a, b in pairs]
    return FinCat(
        [a for a, _ in pairs], [b for _, b in pairs], [index[(a, a)] for a in range(n)], comp,
        ob_names=names, mor_names=mor_names,
    )


def truncated_addition(k):
    """The commutative monoid ``{0..k}`` under addition capped at ``k``."""
    return [[min(a + b, k) for b in range(k + 1)] for a in range(k + 1)]


def cyclic_addition(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def product_two_cat(c: FinTwoCat, d: FinTwoCat) -> FinTwoCat:
    n, m = c.n_obj, d.n_obj
    hom = {}
    for (a, b), (x, y) in itertools.product(c.hom, d.hom):
        hom[(a * m + x, b * m + y)] = product_category(c.hom[(a, b)], d.hom[(x, y)])

    def split(p):
        return divmod(p, m)

    def comp1(p, q, r, g, f):
        (a, x), (b, y), (e, z) = split(p), split(q), split(r)
        nd_g = d.hom[(y, z)].n_obj
        nd_f = d.hom[(x, y)].n_obj
        g1, g2 = divmod(g, nd_g)
        f1, f2 = divmod(f, nd_f)
        return c.comp1(a, b, e, g1, f1) * d.hom[(x, z)].n_obj + d.comp1(x, y, z, g2, f2)

    def comp2(p, q, r, mu, lam):
        (a, x), (b, y), (e, z) = split(p), split(q), split(r)
        md_mu = d.hom[(y, z)].n_mor
        md_lam = d.hom[(x, y)].n_mor
        mu1, mu2 = divmod(mu, md_mu)
        lam1, lam2 = divmod(lam, md_lam)
        return c.comp2(a, b, e, mu1, lam1) * d.hom[(x, z)].n_mor + d.comp2(x, y, z, mu2, lam2)

    unit = [c.unit[a] * d.hom[(x, x)].n_obj + d.unit[x] for a in range(n) for x in range(m)]
    names = [f"({a},{x})" for a in c.ob_names for x in d.ob_names]
    return make_two_cat(n * m, hom, comp1, comp2, unit, ob_names=names)


SHAPES = {
    "terminal": terminal_two_cat,
    "discrete-3": lambda: discrete_two_cat(3),
    "walking-arrow": walking_arrow_two_cat,
    "walking-2cell": walking_2cell,
    "composable-1cells": composable_1cells,
    "composable-2cells": composable_2cells,
    "one-object": lambda: one_object(truncated_addition(2)),
}


def preorder_two_cat(n, relations):
    return locally_discrete(preorder_category(n, relations))
