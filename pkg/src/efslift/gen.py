"""Seeded generators for categories, functors, 2-categories and fill instances.

Everything is built from constructive families; no composition table is
ever sampled and then checked.  A seed is any integer; equal seeds and
parameters give identical results.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import NamedTuple

from .catalog import (
    chain_category,
    conjugate,
    discrete_category,
    empty_category,
    full_subcategory,
    indiscrete_category,
    isomorphisms_into,
    monoid_category,
    parallel_pair,
    preorder_category,
    product_category,
    projections,
    relabel_objects,
    terminal_category,
    walking_arrow,
    wide_subcategory,
)
from .efs import FillSquare
from .fincat import (
    FinCat,
    FinFunctor,
    NatTrans,
    compose_functors,
    factor_bo_ff,
    identity_functor,
    identity_nat,
    whisker_left,
    whisker_right,
)
from .report import InvalidInput, NoFunctorExists, ensure
from .shapes import (
    composable_1cells,
    composable_2cells,
    cyclic_addition,
    locally_discrete,
    one_object,
    product_two_cat,
    terminal_two_cat,
    truncated_addition,
    walking_2cell,
    walking_arrow_two_cat,
)

FAMILIES = ("free-acyclic-graph", "preorder", "monoid-table", "product", "walking-shape")

WALKING_SHAPES = (
    terminal_category,
    walking_arrow,
    parallel_pair,
    lambda: discrete_category(2),
    lambda: indiscrete_category(2),
    lambda: chain_category(3),
    empty_category,
)


@dataclass(frozen=True)
class GenParams:
    max_objects: int = 4
    max_morphisms: int = 12
    family: str = "free-acyclic-graph"
    index: int | None = None

    def __post_init__(self):
        if self.max_objects < 1 or self.max_morphisms < 1:
            raise InvalidInput("generator bounds must be positive")
        if self.family not in FAMILIES:
            raise InvalidInput(f"unknown family {self.family!r}")


def rng_for(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def _child(rng):
    return rng.getrandbits(64)


# ----------------------------------------------------------------------------
# categories


def gen_fincat(seed, p: GenParams = GenParams()) -> FinCat:
    rng = rng_for(seed)
    family = p.family
    if family == "walking-shape":
        k = p.index if p.index is not None else rng.randrange(len(WALKING_SHAPES))
        c = WALKING_SHAPES[k % len(WALKING_SHAPES)]()
        if c.n_obj <= p.max_objects and c.n_mor <= p.max_morphisms:
            return c
        return terminal_category()
    if family == "free-acyclic-graph":
        return _free_dag(rng, p)
    if family == "preorder":
        return _random_preorder(rng, p)
    if family == "monoid-table":
        return _random_monoid(rng, p)
    return _random_product(rng, p)


def _free_dag(rng, p):
    """Path category of a random DAG, grown edge by edge while paths fit the bound."""
    n = rng.randint(1, min(p.max_objects, p.max_morphisms))
    edges = []
    target = rng.randint(0, max(0, p.max_morphisms - n))
    for _ in range(4 * target + 4):
        if len(edges) >= target:
            break
        a, b = sorted(rng.sample(range(n), 2)) if n > 1 else (0, 0)
        if a == b:
            break
        if _count_paths(n, edges + [(a, b)]) <= p.max_morphisms:
            edges.append((a, b))
    return path_category(n, edges)


def _count_paths(n, edges):
    # ending[v] counts nonempty paths ending at v; edges run upward so one pass suffices
    total = n
    ending = [0] * n
    for v in range(n):
        for a, b in edges:
            if b == v:
                ending[v] += 1 + ending[a]
    return total + sum(ending)


def path_category(n, edges, names=None):
    """Free category on a DAG: morphisms are paths, composition is concatenation.

    ``edges`` is a list of ``(src, tgt)`` pairs with ``src < tgt``; parallel
    edges are allowed.
    """
    names = names or [str(i) for i in range(n)]
    order = sorted(range(len(edges)), key=lambda e: edges[e])
    all_paths = [(v, ()) for v in range(n)]
    frontier = list(all_paths)
    while frontier:
        new = []
        for start, path in frontier:
            end = edges[path[-1]][1] if path else start
            new.extend((start, path + (e,)) for e in order if edges[e][0] == end)
        all_paths.extend(new)
        frontier = new
    arrows = {}
    label = {}
    for start, path in all_paths:
        if not path:
            label[(start, path)] = None
            continue
        name = ".".join(f"e{e}" for e in reversed(path))
        label[(start, path)] = name
        arrows[name] = (names[start], names[edges[path[-1]][1]])
    comp = {}
    for (s1, p1), (s2, p2) in itertools.product(all_paths, repeat=2):
        if not p1 or not p2:
            continue
        end1 = edges[p1[-1]][1]
        if s2 == end1:
            comp[(label[(s2, p2)], label[(s1, p1)])] = label[(s1, p1 + p2)]
    return FinCat.build(names, arrows, comp)


def _random_preorder(rng, p):
    n = rng.randint(1, min(p.max_objects, p.max_morphisms))
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    chosen = []
    for pr in pairs:
        if rng.random() < 0.5:
            trial = chosen + [pr]
            if n + len(_closure(trial)) <= p.max_morphisms:
                chosen = trial
    return preorder_category(n, chosen)


def _closure(relations):
    le = set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(le), repeat=2):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    return le


def _random_monoid(rng, p):
    """A transformation monoid generated by random self-maps of a small set, or a cyclic group."""
    bound = p.max_morphisms
    if rng.random() < 0.3 or bound < 2:
        return monoid_category(cyclic_addition(rng.randint(1, bound)), names=None)
    k = rng.randint(2, 3)
    gens = [tuple(rng.randrange(k) for _ in range(k)) for _ in range(rng.randint(1, 2))]
    ident = tuple(range(k))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                h = tuple(g[e[i]] for i in range(k))
                if h not in seen:
                    seen.add(h)
                    elems.append(h)
                    new.append(h)
        frontier = new
        if len(elems) > bound:
            return monoid_category(cyclic_addition(rng.randint(1, bound)))
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[tuple(g[f[i]] for i in range(k))] for f in elems] for g in elems]
    names = ["1"] + ["t" + "".join(map(str, e)) for e in elems[1:]]
    return monoid_category(table, 0, names)


def _random_product(rng, p):
    others = [f for f in FAMILIES if f != "product"]
    for _ in range(10):
        a = gen_fincat(_child(rng), GenParams(max(1, p.max_objects // 2), max(1, p.max_morphisms // 2), rng.choice(others)))
        bo = max(1, p.max_objects // max(1, a.n_obj))
        bm = max(1, p.max_morphisms // max(1, a.n_mor))
        b = gen_fincat(_child(rng), GenParams(bo, bm, rng.choice(others)))
        if a.n_obj * b.n_obj <= p.max_objects and a.n_mor * b.n_mor <= p.max_morphisms:
            return product_category(a, b)
    return terminal_category()


# ----------------------------------------------------------------------------
# functors


def gen_functor(seed, dom: FinCat, cod: FinCat, *, attempts=12, budget=4000) -> FinFunctor:
    """A random functor ``dom → cod``.

    Objects are assigned at random, then morphisms by backtracking search
    (generators free, composites forced).  When no attempt succeeds a
    random constant functor is returned, so a functor exists exactly when
    ``dom`` is empty or ``cod`` is not.
    """
    rng = rng_for(seed)
    if dom.n_obj == 0:
        return FinFunctor(dom, cod, [], [])
    if cod.n_obj == 0:
        raise NoFunctorExists("no functor from a nonempty category into the empty category")
    plan = _search_plan(dom)
    for _ in range(attempts):
        obj_map = [rng.randrange(cod.n_obj) for _ in dom.objects]
        mor_map = _extend(rng, dom, cod, obj_map, plan, budget)
        if mor_map is not None:
            f = FinFunctor(dom, cod, obj_map, mor_map, check=False)
            return f
    y = rng.randrange(cod.n_obj)
    return FinFunctor(dom, cod, [y] * dom.n_obj, [cod.identity[y]] * dom.n_mor, check=False)


def _search_plan(dom):
    nonid = [m for m in dom.morphisms if not dom.is_identity(m)]
    factorizations = {m: [] for m in dom.morphisms}
    touching = {m: [] for m in dom.morphisms}
    for (g, f), h in dom.comp.items():
        if dom.is_identity(g) or dom.is_identity(f):
            continue
        factorizations[h].append((g, f))
        for m in {g, f, h}:
            touching[m].append((g, f, h))
    indecomposable = [m for m in nonid if not factorizations[m]]
    rest = [m for m in nonid if factorizations[m]]
    order = list(indecomposable)
    placed = set(order)
    while rest:
        pick = next((m for m in rest if any(g in placed and f in placed for g, f in factorizations[m])), rest[0])
        rest.remove(pick)
        order.append(pick)
        placed.add(pick)
    return len(indecomposable), order, factorizations, touching


def _extend(rng, dom, cod, obj_map, plan, budget):
    n_free, order, factorizations, touching = plan
    mor = [None] * dom.n_mor
    for x in dom.objects:
        mor[dom.identity[x]] = cod.identity[obj_map[x]]
    first = list(order[:n_free])
    rng.shuffle(first)
    order = first + order[n_free:]
    hom = {}
    steps = [budget]

    def candidates(m):
        for g, f in factorizations[m]:
            if mor[g] is not None and mor[f] is not None:
                return [cod.comp[(mor[g], mor[f])]]
        key = (obj_map[dom.src[m]], obj_map[dom.tgt[m]])
        if key not in hom:
            hom[key] = cod.hom(*key)
        opts = list(hom[key])
        rng.shuffle(opts)
        return opts

    def consistent(m):
        for g, f, h in touching[m]:
            if mor[g] is not None and mor[f] is not None and mor[h] is not None:
                if cod.comp[(mor[g], mor[f])] != mor[h]:
                    return False
        return True

    def dfs(k):
        if k == len(order):
            return True
        steps[0] -= 1
        if steps[0] < 0:
            return False
        m = order[k]
        for v in candidates(m):
            mor[m] = v
            if consistent(m) and dfs(k + 1):
                return True
            mor[m] = None
        return False

    return list(mor) if dfs(0) else None


# ----------------------------------------------------------------------------
# Cat-level instances


class FillInstance(NamedTuple):
    square: FillSquare
    delta0: FinFunctor
    psi_tilde0: NatTrans


class TwoCellInstance(NamedTuple):
    sq1: FillSquare
    sq2: FillSquare
    delta1: FinFunctor
    delta2: FinFunctor
    phi: NatTrans
    phi_prime: NatTrans
    big_delta0: NatTrans


class CreateInstance(NamedTuple):
    mu: FinFunctor
    alpha: FinFunctor
    beta: FinFunctor
    psi: NatTrans
    psi_hat0: NatTrans


class RigidityInstance(NamedTuple):
    mu: FinFunctor
    alpha: FinFunctor
    psi: NatTrans


def _small(p):
    return GenParams(min(p.max_objects, 3), min(p.max_morphisms, 8), p.family)


def gen_bo(rng, target: FinCat):
    """A random bo functor into ``target``: a wide subcategory inclusion after a relabelling."""
    nonid = [m for m in target.morphisms if not target.is_identity(m)]
    gens = [m for m in nonid if rng.random() < 0.5]
    sub, inc = wide_subcategory(target, gens)
    perm = list(range(target.n_obj))
    rng.shuffle(perm)
    copy, _ = relabel_objects(sub, perm)
    inv = [0] * len(perm)
    for x, y in enumerate(perm):
        inv[y] = x
    back = FinFunctor(copy, sub, inv, copy.morphisms, check=False)
    return copy, compose_functors(inc, back)


def gen_ff(rng, target: FinCat, k=None):
    """A random ff functor into ``target``: the ff half of a selection of objects.

    Repeated selections create isomorphic copies, so the domain is rarely thin.
    """
    if target.n_obj == 0:
        return empty_category(), FinFunctor(empty_category(), target, [], [])
    k = k if k is not None else rng.randint(1, min(3, target.n_obj + 1))
    picks = [rng.randrange(target.n_obj) for _ in range(k)]
    sel = FinFunctor(discrete_category(k), target, picks, [target.identity[x] for x in picks], check=False)
    fac = factor_bo_ff(sel)
    return fac.i, fac.m


def _category_with_isos(rng, p):
    c = gen_fincat(_child(rng), _small(GenParams(p.max_objects, p.max_morphisms, rng.choice(FAMILIES))))
    if c.n_obj == 0:
        c = terminal_category()
    if rng.random() < 0.5 and c.n_obj <= 2:
        c = product_category(c, indiscrete_category(2))
    return c


def gen_fill_instance(seed, p: GenParams = GenParams(), *, commuting=False) -> FillInstance:
    """A square whose unique diagonal fill is known: ``(delta0, psi_tilde0)`` come first."""
    rng = rng_for(seed)
    f1 = gen_fincat(_child(rng), _small(GenParams(p.max_objects, p.max_morphisms, rng.choice(FAMILIES))))
    f0, eps = gen_bo(rng, f1)
    g1 = _category_with_isos(rng, p)
    g0, mu = gen_ff(rng, g1)
    return fill_instance_from(rng, eps, mu, commuting=commuting)


def fill_instance_from(rng, eps, mu, *, commuting=False) -> FillInstance:
    f1, g0, g1 = eps.cod, mu.dom, mu.cod
    if f1.n_obj and not g0.n_obj:
        raise InvalidInput("no diagonal into an empty category")
    delta0 = gen_functor(_child(rng), f1, g0)
    top = compose_functors(mu, delta0)
    if commuting:
        alpha_prime, psi_tilde0 = top, identity_nat(top)
    else:
        isos = [rng.choice(isomorphisms_into(g1, y)) for y in top.obj_map]
        alpha_prime, psi_tilde0 = conjugate(top, isos)
    alpha = compose_functors(delta0, eps)
    psi = whisker_right(psi_tilde0, eps)
    return FillInstance(FillSquare(eps, mu, alpha, alpha_prime, None if commuting else psi), delta0, psi_tilde0)


def gen_nat_between(rng, dom: FinCat, cod: FinCat, *, invertible=False):
    """A random transformation between random functors ``dom → cod``.

    Read off a random functor out of ``dom × [1]`` (or ``dom × I_2`` for an
    invertible one).
    """
    shape = indiscrete_category(2) if invertible else walking_arrow()
    prod = product_category(dom, shape)
    h = gen_functor(_child(rng), prod, cod)
    ns, ms = shape.n_obj, shape.n_mor
    arrow = shape.hom(0, 1)[0]
    ends = []
    for j in (0, 1):
        ends.append(FinFunctor(
            dom, cod, [h.obj_map[x * ns + j] for x in dom.objects],
            [h.mor_map[m * ms + shape.identity[j]] for m in dom.morphisms], check=False,
        ))
    comps = [h.mor_map[dom.identity[x] * ms + arrow] for x in dom.objects]
    return NatTrans(ends[0], ends[1], comps, check=False)


def gen_two_cell_instance(seed, p: GenParams = GenParams()) -> TwoCellInstance:
    rng = rng_for(seed)
    f1 = gen_fincat(_child(rng), _small(GenParams(p.max_objects, p.max_morphisms, rng.choice(FAMILIES))))
    f0, eps = gen_bo(rng, f1)
    g1 = _category_with_isos(rng, p)
    g0, mu = gen_ff(rng, g1)
    if f1.n_obj and not g0.n_obj:
        raise InvalidInput("no diagonal into an empty category")
    big = gen_nat_between(rng, f1, g0)
    d1, d2 = big.dom, big.cod
    sq1 = FillSquare(eps, mu, compose_functors(d1, eps), compose_functors(mu, d1))
    sq2 = FillSquare(eps, mu, compose_functors(d2, eps), compose_functors(mu, d2))
    return TwoCellInstance(sq1, sq2, d1, d2, whisker_right(big, eps), whisker_left(mu, big), big)


def gen_create_instance(seed, p: GenParams = GenParams()) -> CreateInstance:
    rng = rng_for(seed)
    x = gen_fincat(_child(rng), _small(GenParams(p.max_objects, p.max_morphisms, rng.choice(FAMILIES))))
    g1 = _category_with_isos(rng, p)
    g0, mu = gen_ff(rng, g1)
    if x.n_obj and not g0.n_obj:
        x = empty_category()
    hat = gen_nat_between(rng, x, g0, invertible=True)
    return CreateInstance(mu, hat.dom, hat.cod, whisker_left(mu, hat), hat)


def gen_rigidity_instance(seed, p: GenParams = GenParams()) -> RigidityInstance:
    """An equivalence onto a skeleton: ``K ↪ K × I_n`` at level 0 with its retraction."""
    rng = rng_for(seed)
    k = gen_fincat(_child(rng), _small(GenParams(p.max_objects, p.max_morphisms, rng.choice(FAMILIES))))
    n = rng.randint(1, 3)
    ind = indiscrete_category(n)
    g = product_category(k, ind)
    f, mu = full_subcategory(g, [x * n for x in k.objects])
    pos = {x * n: i for i, x in enumerate(k.objects)}
    nm = ind.n_mor
    # retraction (x, j) -> (x, 0); (f, j -> j') -> (f, id_0)
    sub_index = {m: i for i, m in enumerate(mu.mor_map)}
    obj_map = [pos[(y // n) * n] for y in g.objects]
    mor_map = [sub_index[(m // nm) * nm + ind.identity[0]] for m in g.morphisms]
    alpha = FinFunctor(g, f, obj_map, mor_map, check=False)
    mu_alpha = compose_functors(mu, alpha)
    comps = [(k.identity[y // n]) * nm + ind.hom(0, y % n)[0] for y in g.objects]
    psi = NatTrans(mu_alpha, identity_functor(g), comps, check=False)
    return RigidityInstance(mu, alpha, psi)


# ----------------------------------------------------------------------------
# 2-categories


TWO_CAT_KINDS = ("walking-arrow", "walking-2cell", "composable-1cells", "composable-2cells", "locally-discrete", "one-object", "product")


def gen_two_cat(seed, p: GenParams = GenParams()):
    rng = rng_for(seed)
    kind = TWO_CAT_KINDS[p.index % len(TWO_CAT_KINDS)] if p.index is not None else rng.choice(TWO_CAT_KINDS)
    return _two_cat_of_kind(rng, kind, p)


def _two_cat_of_kind(rng, kind, p):
    if kind == "walking-arrow":
        return walking_arrow_two_cat()
    if kind == "walking-2cell":
        return walking_2cell()
    if kind == "composable-1cells":
        return composable_1cells()
    if kind == "composable-2cells":
        return composable_2cells()
    if kind == "locally-discrete":
        return locally_discrete(gen_fincat(_child(rng), GenParams(min(p.max_objects, 3), min(p.max_morphisms, 6), rng.choice(FAMILIES))))
    if kind == "one-object":
        k = rng.randint(1, 3)
        return one_object(truncated_addition(k) if rng.random() < 0.5 else cyclic_addition(k + 1))
    a = _two_cat_of_kind(rng, rng.choice(("walking-arrow", "walking-2cell", "one-object")), p)
    return product_two_cat(a, terminal_two_cat() if rng.random() < 0.5 else walking_arrow_two_cat())



# ----------------------------------------------------------------------------
# 2-functors and 2-natural transformations over a fixed 2-category
#
# Terms are products of at most two atoms: representables C(c0, -),
# constants Δ_K and, over 2-categories without non-unit cells, arbitrary
# families of categories.  Maps between terms are built from projections,
# pairings, Yoneda maps, maps to constants and constant maps Δ_φ, all of
# which are 2-natural by construction.


def is_locally_trivial(c) -> bool:
    """No 1-cells except units: every family of functors is then 2-natural."""
    return all(h.n_obj == (1 if a == b else 0) and h.n_mor == h.n_obj for (a, b), h in c.hom.items())


class Term:
    def __init__(self, c, atoms, funs):
        from .twocat import identity_two_nat
        from .twofun import Product2

        self.c = c
        self.atoms = tuple(atoms)
        self.atom_funs = tuple(funs)
        if len(funs) == 1:
            self.prod = None
            self.fun = funs[0]
            self.proj = (identity_two_nat(self.fun),)
        else:
            self.prod = Product2(*funs)
            self.fun = self.prod.fun
            self.proj = self.prod.projections()


class _Grammar:
    def __init__(self, rng, c, p):
        from .twofun import representable

        self.rng, self.c, self.p = rng, c, p
        self.discrete = is_locally_trivial(c)
        self.reps = {} if self.discrete else {x: representable(c, x) for x in c.objects}

    def small_cat(self, nonempty=True):
        fam = self.rng.choice(FAMILIES)
        k = gen_fincat(_child(self.rng), GenParams(min(self.p.max_objects, 3), min(self.p.max_morphisms, 5), fam))
        if nonempty and k.n_obj == 0:
            k = terminal_category()
        return k

    def atom(self, kind=None):
        from .twofun import constant_2functor, discrete_2functor

        if self.discrete:
            cats = [self.small_cat() for _ in self.c.objects]
            return ("family", tuple(cats)), discrete_2functor(self.c, cats)
        if kind is None:
            kind = "rep" if self.rng.random() < 0.55 else "const"
        if kind == "rep":
            x = self.rng.randrange(self.c.n_obj)
            return ("rep", x), self.reps[x]
        k = self.small_cat()
        return ("const", k), constant_2functor(self.c, k)

    def term(self, n_atoms=None):
        n_atoms = n_atoms or self.rng.randint(1, 2)
        pairs = [self.atom() for _ in range(n_atoms)]
        return Term(self.c, [a for a, _ in pairs], [f for _, f in pairs])

    def reachable_atom(self, source: Term):
        """An atom admitting at least one map out of ``source``."""
        if self.discrete or self.rng.random() < 0.4:
            return self.atom("const") if not self.discrete else self.atom()
        reps = [a[1] for a in source.atoms if a[0] == "rep"]
        if not reps:
            return self.atom("const")
        c1 = self.rng.choice(reps)
        targets = [x for x in self.c.objects if self.c.hom[(x, c1)].n_obj]
        x = self.rng.choice(targets)
        return ("rep", x), self.reps[x]

    def next_term(self, source: Term, n_atoms=None):
        n_atoms = n_atoms or self.rng.randint(1, 2)
        pairs = [self.reachable_atom(source) for _ in range(n_atoms)]
        return Term(self.c, [a for a, _ in pairs], [f for _, f in pairs])

    def map_to_atom(self, source: Term, atom, fun):
        from .twocat import TwoNatTrans, compose_two_nat
        from .twofun import constant_2nat, to_constant, yoneda_2nat

        rng, c = self.rng, self.c
        kind = atom[0]
        if kind == "family":
            comps = [gen_functor(_child(rng), source.fun(x), fun(x)) for x in c.objects]
            return TwoNatTrans(source.fun, fun, comps, check=False)
        options = []
        if kind == "const":
            k = atom[1]
            options.append(lambda: to_constant(source.fun, fun, rng.randrange(k.n_obj)))
            for j, a in enumerate(source.atoms):
                if a[0] == "const":
                    def via(j=j, a=a):
                        phi = gen_functor(_child(rng), a[1], k)
                        return compose_two_nat(constant_2nat(source.atom_funs[j], fun, phi), source.proj[j])
                    options.append(via)
        else:
            c0 = atom[1]
            for j, a in enumerate(source.atoms):
                if a[0] == "rep" and c.hom[(c0, a[1])].n_obj:
                    def via(j=j, a=a):
                        u = rng.randrange(c.hom[(c0, a[1])].n_obj)
                        y = yoneda_2nat(c, c0, a[1], u, self.reps[c0], self.reps[a[1]])
                        return compose_two_nat(y, source.proj[j])
                    options.append(via)
        if not options:
            raise InvalidInput(f"no map from the source term to atom {kind}")
        return rng.choice(options)()

    def map(self, source: Term, target: Term):
        legs = [self.map_to_atom(source, a, f) for a, f in zip(target.atoms, target.atom_funs)]
        if target.prod is None:
            return legs[0]
        return target.prod.pair(*legs)

    def chain(self, length):
        """Terms ``X0, ..., X_length`` and maps ``X_k ⇒ X_{k+1}``."""
        terms = [self.term()]
        maps = []
        for _ in range(length):
            nxt = self.next_term(terms[-1])
            maps.append(self.map(terms[-1], nxt))
            terms.append(nxt)
        return terms, maps


def grammar(seed, c, p: GenParams = GenParams(3, 5)):
    return _Grammar(rng_for(seed), c, p)


def gen_two_instance(seed, c, p: GenParams = GenParams(3, 5)):
    """``(F, G, alpha)`` with ``alpha: F ⇒ G`` 2-natural, over the 2-category ``c``."""
    g = grammar(seed, c, p)
    terms, maps = g.chain(1)
    return terms[0].fun, terms[1].fun, maps[0]


DOCUMENT_KINDS = ("cat", "fun", "nat", "2cat", "2fun", "2nat", "mod")


def gen_value(seed, kind, p: GenParams = GenParams()):
    """A random valid value of the given block kind."""
    rng = rng_for(seed)

    def cat():
        return gen_fincat(_child(rng), GenParams(p.max_objects, p.max_morphisms, rng.choice(FAMILIES)))

    if kind == "cat":
        return cat()
    if kind == "fun":
        a, b = cat(), cat()
        if a.n_obj and not b.n_obj:
            b = terminal_category()
        return gen_functor(_child(rng), a, b)
    if kind == "nat":
        a, b = cat(), cat()
        if a.n_obj and not b.n_obj:
            b = terminal_category()
        return gen_nat_between(rng, a, b)
    small = GenParams(min(p.max_objects, 3), min(p.max_morphisms, 5), p.family)
    c = gen_two_cat(_child(rng), small)
    if kind == "2cat":
        return c
    if kind in ("2fun", "2nat"):
        f, _, alpha = gen_two_instance(_child(rng), c, small)
        return f if kind == "2fun" else alpha
    if kind == "mod":
        from .lift import LiftedFill

        return LiftedFill(rng, c, small).psi_tilde0
    raise InvalidInput(f"unknown block kind {kind!r}")


_DOCUMENT_NAMES = {"cat": "C", "fun": "F", "nat": "T", "2cat": "K", "2fun": "P", "2nat": "alpha", "mod": "Theta"}


def gen_document(seed, kind, p: GenParams = GenParams()):
    from .textformat import Document

    doc = Document()
    doc.add(_DOCUMENT_NAMES[kind], gen_value(seed, kind, p))
    return doc
