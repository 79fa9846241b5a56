"""Standard small categories and the product/constant constructions on them.

Products encode the pair ``(i, j)`` as ``i * len(second) + j`` for objects
and morphisms alike, so product categories are ordinary :class:`FinCat` values.
"""
from __future__ import annotations

import itertools

from .fincat import FinCat, FinFunctor, NatTrans, identity_name
from .report import BoundaryMismatch, InternalError, InvalidInput


def empty_category():
    return FinCat((), (), (), {})


def terminal_category(name="*"):
    return FinCat.build([name])


def discrete_category(n, names=None):
    return FinCat.build(names or [str(i) for i in range(n)])


def indiscrete_category(n, names=None):
    """Exactly one morphism between any two objects; every morphism is invertible."""
    names = names or [str(i) for i in range(n)]
    arrows = {f"{a}>{b}": (a, b) for a in names for b in names if a != b}

    def arrow(a, b):
        return identity_name(a) if a == b else f"{a}>{b}"

    comp = {}
    for a, b, c in itertools.product(names, repeat=3):
        if a != b and b != c:
            comp[(arrow(b, c), arrow(a, b))] = arrow(a, c)
    return FinCat.build(names, arrows, comp)


def chain_category(n):
    """The ordinal ``0 < 1 < ... < n-1`` as a thin category."""
    return preorder_category(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def walking_arrow():
    return chain_category(2)


def parallel_pair():
    return FinCat.build(["0", "1"], {"f": ("0", "1"), "g": ("0", "1")})


def preorder_category(n, relations, names=None):
    """Thin category on ``n`` objects generated by the strict ``(a, b)`` relations."""
    names = names or [str(i) for i in range(n)]
    le = {(i, i) for i in range(n)} | set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(le), repeat=2):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    if any((b, a) in le for a, b in le if a != b):
        raise InvalidInput("relations contain a cycle")

    def arrow(a, b):
        return identity_name(names[a]) if a == b else f"{names[a]}<{names[b]}"

    arrows = {arrow(a, b): (names[a], names[b]) for a, b in sorted(le) if a != b}
    comp = {}
    for (a, b), (c, d) in itertools.product(sorted(le), repeat=2):
        if b == c and a != b and c != d:
            comp[(arrow(c, d), arrow(a, b))] = arrow(a, d)
    return FinCat.build(names, arrows, comp)


def monoid_category(table, unit=0, names=None, ob_name="*"):
    """One-object category of the monoid with multiplication ``table[g][f] = g*f``."""
    n = len(table)
    names = list(names) if names else [f"e{k}" for k in range(n)]
    order = [unit] + [k for k in range(n) if k != unit]
    pos = {k: i for i, k in enumerate(order)}
    comp = {(pos[g], pos[f]): pos[table[g][f]] for g in range(n) for f in range(n)}
    mor_names = [names[k] for k in order]
    return FinCat([0] * n, [0] * n, [0], comp, ob_names=[ob_name], mor_names=mor_names)


def cyclic_group(n):
    return monoid_category([[(a + b) % n for b in range(n)] for a in range(n)], names=[f"g{k}" for k in range(n)])


def full_subcategory(c: FinCat, objects):
    """Full subcategory on ``objects`` (in the given order) and its inclusion."""
    objects = list(objects)
    mors = [m for x in objects for y in objects for m in c.hom(x, y)]
    index = {m: k for k, m in enumerate(mors)}
    pos = {x: i for i, x in enumerate(objects)}
    comp = {(index[g], index[f]): index[h] for (g, f), h in c.comp.items() if g in index and f in index}
    sub = FinCat(
        [pos[c.src[m]] for m in mors],
        [pos[c.tgt[m]] for m in mors],
        [index[c.identity[x]] for x in objects],
        comp,
        ob_names=[c.ob_names[x] for x in objects],
        mor_names=[c.mor_names[m] for m in mors],
        check=False,
    )
    return sub, FinFunctor(sub, c, objects, mors, check=False)


def wide_subcategory(c: FinCat, generators):
    """Subcategory with every object, generated by the given morphisms, and its inclusion."""
    keep = set(c.identity) | set(generators)
    frontier = list(keep)
    while frontier:
        new = []
        for g in list(keep):
            for f in list(keep):
                if c.composable(g, f):
                    h = c.comp[(g, f)]
                    if h not in keep:
                        keep.add(h)
                        new.append(h)
        frontier = new
    mors = sorted(keep)
    index = {m: k for k, m in enumerate(mors)}
    comp = {(index[g], index[f]): index[h] for (g, f), h in c.comp.items() if g in index and f in index}
    sub = FinCat(
        [c.src[m] for m in mors], [c.tgt[m] for m in mors], [index[i] for i in c.identity], comp,
        ob_names=c.ob_names, mor_names=[c.mor_names[m] for m in mors], check=False,
    )
    return sub, FinFunctor(sub, c, c.objects, mors, check=False)


def relabel_objects(c: FinCat, perm):
    """Isomorphic copy of ``c`` whose object ``perm[x]`` is the old object ``x``, and the iso."""
    perm = list(perm)
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    copy = FinCat(
        [perm[s] for s in c.src], [perm[t] for t in c.tgt], [c.identity[inv[y]] for y in range(len(perm))],
        c.comp, ob_names=[c.ob_names[inv[y]] for y in range(len(perm))], mor_names=c.mor_names, check=False,
    )
    return copy, FinFunctor(c, copy, perm, c.morphisms, check=False)


# -- products -------------------------------------------------------------------


def product_category(a: FinCat, b: FinCat) -> FinCat:
    na, nb = a.n_obj, b.n_obj
    ma, mb = a.n_mor, b.n_mor
    src = [a.src[p] * nb + b.src[q] for p in range(ma) for q in range(mb)]
    tgt = [a.tgt[p] * nb + b.tgt[q] for p in range(ma) for q in range(mb)]
    identity = [a.identity[i] * mb + b.identity[j] for i in range(na) for j in range(nb)]
    comp = {}
    for (p2, p1), p in a.comp.items():
        for (q2, q1), q in b.comp.items():
            comp[(p2 * mb + q2, p1 * mb + q1)] = p * mb + q
    ob_names = [f"({x},{y})" for x in a.ob_names for y in b.ob_names]
    mor_names = [f"({x},{y})" for x in a.mor_names for y in b.mor_names]
    return FinCat(src, tgt, identity, comp, ob_names=ob_names, mor_names=mor_names, check=False)


def product_functor(f: FinFunctor, g: FinFunctor, dom=None, cod=None) -> FinFunctor:
    """``f × g``; pass ``dom``/``cod`` to reuse existing product categories."""
    dom = dom if dom is not None else product_category(f.dom, g.dom)
    cod = cod if cod is not None else product_category(f.cod, g.cod)
    nb, mb = g.dom.n_obj, g.dom.n_mor
    nb2, mb2 = g.cod.n_obj, g.cod.n_mor
    obj_map = [f.obj_map[k // nb] * nb2 + g.obj_map[k % nb] for k in range(dom.n_obj)]
    mor_map = [f.mor_map[k // mb] * mb2 + g.mor_map[k % mb] for k in range(dom.n_mor)]
    return FinFunctor(dom, cod, obj_map, mor_map, check=False)


def pair_functor(f: FinFunctor, g: FinFunctor, cod=None) -> FinFunctor:
    """``⟨f, g⟩: X → A × B``."""
    if f.dom != g.dom:
        raise BoundaryMismatch("pairing needs functors with a common domain")
    cod = cod if cod is not None else product_category(f.cod, g.cod)
    nb, mb = g.cod.n_obj, g.cod.n_mor
    return FinFunctor(
        f.dom, cod,
        [f.obj_map[x] * nb + g.obj_map[x] for x in f.dom.objects],
        [f.mor_map[m] * mb + g.mor_map[m] for m in f.dom.morphisms],
        check=False,
    )


def projections(a: FinCat, b: FinCat, prod=None):
    prod = prod if prod is not None else product_category(a, b)
    nb, mb = b.n_obj, b.n_mor
    p1 = FinFunctor(prod, a, [k // nb for k in prod.objects], [k // mb for k in prod.morphisms], check=False)
    p2 = FinFunctor(prod, b, [k % nb for k in prod.objects], [k % mb for k in prod.morphisms], check=False)
    return p1, p2


def pair_nat(s: NatTrans, t: NatTrans, cod=None) -> NatTrans:
    """``⟨s, t⟩: ⟨F, G⟩ ⇒ ⟨F', G'⟩`` into a product category."""
    cod = cod if cod is not None else product_category(s.target, t.target)
    mb = t.target.n_mor
    return NatTrans(
        pair_functor(s.dom, t.dom, cod), pair_functor(s.cod, t.cod, cod),
        [p * mb + q for p, q in zip(s.components, t.components)],
        check=False,
    )


def product_nat(s: NatTrans, t: NatTrans, dom=None, cod=None) -> NatTrans:
    """``s × t: F × G ⇒ F' × G'``."""
    dom = dom if dom is not None else product_category(s.source, t.source)
    cod = cod if cod is not None else product_category(s.target, t.target)
    nb = t.source.n_obj
    mb = t.target.n_mor
    comps = [s.components[k // nb] * mb + t.components[k % nb] for k in dom.objects]
    return NatTrans(product_functor(s.dom, t.dom, dom, cod), product_functor(s.cod, t.cod, dom, cod), comps, check=False)


def constant_functor(dom: FinCat, cod: FinCat, y: int) -> FinFunctor:
    return FinFunctor(dom, cod, [y] * dom.n_obj, [cod.identity[y]] * dom.n_mor, check=False)


def constant_nat(dom: FinCat, cod: FinCat, m: int) -> NatTrans:
    """Transformation between constant functors with every component ``m``."""
    return NatTrans(constant_functor(dom, cod, cod.src[m]), constant_functor(dom, cod, cod.tgt[m]), [m] * dom.n_obj, check=False)


def conjugate(h: FinFunctor, isos):
    """Transport ``h`` along invertible ``isos[x]: y_x → h(x)``.

    Returns ``(h2, sigma)`` with ``h2(x) = y_x``, ``h2(f) = σ⁻¹ ∘ h(f) ∘ σ`` and
    ``sigma: h2 ⇒ h`` the natural isomorphism formed by the ``isos``.
    """
    d = h.cod
    c = h.dom
    invs = [d.inverse(s) for s in isos]
    if any(i is None for i in invs):
        raise InvalidInput("conjugation needs invertible morphisms")
    for x, s in enumerate(isos):
        if d.tgt[s] != h.obj_map[x]:
            raise BoundaryMismatch(f"iso at {x} does not end at the image object")
    obj_map = [d.src[s] for s in isos]
    mor_map = [d.compose(invs[c.tgt[m]], h.mor_map[m], isos[c.src[m]]) for m in c.morphisms]
    h2 = FinFunctor(c, d, obj_map, mor_map, check=False)
    sigma = NatTrans(h2, h, isos, check=False)
    if h2.obj_map == h.obj_map and h2.mor_map == h.mor_map:
        h2 = h
    return h2, sigma


def isomorphisms_into(c: FinCat, y: int):
    """Every invertible morphism of ``c`` with target ``y``."""
    return [m for m in c.into(y) if c.inverse(m) is not None]


def check_product_layout(prod: FinCat, a: FinCat, b: FinCat):
    if prod.n_obj != a.n_obj * b.n_obj or prod.n_mor != a.n_mor * b.n_mor:
        raise InternalError("product category has the wrong size")
