"""Brute-force reference implementations used as test oracles.

Everything here works from the raw tables of a category (``src``, ``tgt``,
``identity``, ``comp``) by exhaustive enumeration, deliberately sharing no
code with the package beyond the data types.
"""
from __future__ import annotations

import itertools

from efslift.fincat import FinCat, FinFunctor, NatTrans


def hom(c: FinCat, x, y):
    return [m for m in range(len(c.src)) if c.src[m] == x and c.tgt[m] == y]


def composable_pairs(c: FinCat):
    n = len(c.src)
    return [(g, f) for g in range(n) for f in range(n) if c.src[g] == c.tgt[f]]


def is_invertible(c: FinCat, m):
    x, y = c.src[m], c.tgt[m]
    return any(
        c.comp[(k, m)] == c.identity[x] and c.comp[(m, k)] == c.identity[y] for k in hom(c, y, x)
    )


def is_functor(dom: FinCat, cod: FinCat, obj_map, mor_map):
    for m in range(len(dom.src)):
        n = mor_map[m]
        if cod.src[n] != obj_map[dom.src[m]] or cod.tgt[n] != obj_map[dom.tgt[m]]:
            return False
    for x in range(len(dom.identity)):
        if mor_map[dom.identity[x]] != cod.identity[obj_map[x]]:
            return False
    return all(mor_map[dom.comp[(g, f)]] == cod.comp[(mor_map[g], mor_map[f])] for g, f in composable_pairs(dom))


def all_functors(dom: FinCat, cod: FinCat):
    """Every functor ``dom → cod``, by trying every object map and every endpoint-respecting morphism map."""
    out = []
    for obj_map in itertools.product(range(len(cod.identity)), repeat=len(dom.identity)):
        choices = [hom(cod, obj_map[dom.src[m]], obj_map[dom.tgt[m]]) for m in range(len(dom.src))]
        for mor_map in itertools.product(*choices):
            if is_functor(dom, cod, obj_map, mor_map):
                out.append(FinFunctor(dom, cod, obj_map, mor_map, check=False))
    return out


def is_natural(f: FinFunctor, g: FinFunctor, comps):
    c, d = f.dom, f.cod
    for m in range(len(c.src)):
        x, y = c.src[m], c.tgt[m]
        if d.comp[(comps[y], f.mor_map[m])] != d.comp[(g.mor_map[m], comps[x])]:
            return False
    return True


def all_nats(f: FinFunctor, g: FinFunctor):
    """Every natural transformation ``f ⇒ g``."""
    d = f.cod
    choices = [hom(d, f.obj_map[x], g.obj_map[x]) for x in range(len(f.dom.identity))]
    return [NatTrans(f, g, comps, check=False) for comps in itertools.product(*choices) if is_natural(f, g, comps)]


def all_isos(f: FinFunctor, g: FinFunctor):
    return [t for t in all_nats(f, g) if all(is_invertible(f.cod, m) for m in t.components)]


def compose(g: FinFunctor, f: FinFunctor):
    return FinFunctor(f.dom, g.cod, [g.obj_map[y] for y in f.obj_map], [g.mor_map[n] for n in f.mor_map], check=False)


def restrict(t: NatTrans, k: FinFunctor):
    """Components of ``t k``."""
    return tuple(t.components[k.obj_map[x]] for x in range(len(k.dom.identity)))


def push(h: FinFunctor, t: NatTrans):
    """Components of ``h t``."""
    return tuple(h.mor_map[m] for m in t.components)


def is_bo(f: FinFunctor):
    return sorted(f.obj_map) == list(range(len(f.cod.identity)))


def is_ff(f: FinFunctor):
    c, d = f.dom, f.cod
    for x in range(len(c.identity)):
        for y in range(len(c.identity)):
            image = sorted(f.mor_map[m] for m in hom(c, x, y))
            if image != sorted(hom(d, f.obj_map[x], f.obj_map[y])):
                return False
    return True


def max_nonidentity_per_hom(c: FinCat):
    counts = {}
    for m in range(len(c.src)):
        if c.identity[c.src[m]] != m:
            key = (c.src[m], c.tgt[m])
            counts[key] = counts.get(key, 0) + 1
    return max(counts.values(), default=0)


def tiny(c: FinCat, objects=3, per_hom=2):
    return len(c.identity) <= objects and max_nonidentity_per_hom(c) <= per_hom


# -- uniqueness oracles for the fills -----------------------------------------


def fill_solutions(eps, mu, alpha, alpha_prime, psi):
    """All ``(delta, psi_tilde)`` with ``delta eps = alpha`` and ``psi_tilde eps = psi``, psi_tilde invertible."""
    out = []
    for delta in all_functors(eps.cod, mu.dom):
        if compose(delta, eps).mor_map != alpha.mor_map or compose(delta, eps).obj_map != alpha.obj_map:
            continue
        for t in all_isos(alpha_prime, compose(mu, delta)):
            if restrict(t, eps) == psi.components:
                out.append((delta, t))
    return out


def two_cell_solutions(eps, mu, delta1, delta2, phi, phi_prime):
    return [
        t for t in all_nats(delta1, delta2)
        if restrict(t, eps) == phi.components and push(mu, t) == phi_prime.components
    ]


def create_solutions(mu, alpha, beta, psi):
    return [t for t in all_isos(alpha, beta) if push(mu, t) == psi.components]


# -- associativity counterexample search ---------------------------------------


def unital_tables():
    """All unital multiplication tables on ``{0 = id, 1 = a, 2 = b}`` as dicts ``(g, f) -> g∘f``."""
    free = [(g, f) for g in (1, 2) for f in (1, 2)]
    for values in itertools.product(range(3), repeat=len(free)):
        table = {(0, k): k for k in range(3)} | {(k, 0): k for k in range(3)}
        table.update(zip(free, values))
        yield table


def non_associative_tables():
    """Unital tables where ``(b∘a)∘a ≠ b∘(a∘a)``."""
    a, b = 1, 2
    return [t for t in unital_tables() if t[(t[(b, a)], a)] != t[(b, t[(a, a)])]]
