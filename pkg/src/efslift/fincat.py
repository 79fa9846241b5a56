"""Finite categories, functors and natural transformations given by explicit tables.

Objects and morphisms of a :class:`FinCat` are dense integer ids.  The
composition table maps composable pairs ``(g, f)`` (read ``g ∘ f``) to their
composite, and is required to be total on composable pairs.  Equality is
structural on ids; display names never take part in comparisons.
"""
from __future__ import annotations

from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .report import (
    BoundaryMismatch,
    DomainMismatch,
    InternalError,
    InvalidInput,
    NotFullyFaithful,
    Report,
    ValidationError,
    ensure,
)

# above this many composable triples associativity is checked with numpy
_VECTOR_THRESHOLD = 20000


def identity_name(ob_name):
    return f"id({ob_name})"


class FinCat:
    """A finite category.

    ``src[m]``/``tgt[m]`` give the endpoints of morphism ``m``, ``identity[x]``
    the identity of object ``x`` and ``comp[(g, f)]`` the composite ``g ∘ f``.
    Construction validates every category axiom unless ``check=False``.
    """

    __slots__ = ("src", "tgt", "identity", "comp", "ob_names", "mor_names", "_cache", "_hash")

    def __init__(
        self,
        src: Sequence[int],
        tgt: Sequence[int],
        identity: Sequence[int],
        comp: Mapping[tuple, int],
        *,
        ob_names=None,
        mor_names=None,
        check=True,
    ):
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.identity = tuple(identity)
        self.comp = dict(comp)
        n_obj, n_mor = len(self.identity), len(self.src)
        if ob_names is None:
            ob_names = [str(x) for x in range(n_obj)]
        self.ob_names = tuple(ob_names)
        names = list(mor_names) if mor_names is not None else [f"m{k}" for k in range(n_mor)]
        for x, k in enumerate(self.identity):
            if 0 <= k < n_mor and x < len(self.ob_names):
                names[k] = identity_name(self.ob_names[x])
        self.mor_names = tuple(names)
        self._cache = {}
        self._hash = None
        if check:
            report = validate_category(self)
            if not report.ok:
                raise ValidationError(report, "category")

    @classmethod
    def build(cls, objects, arrows=(), comp=(), *, check=True):
        """Build a category from names.

        ``arrows`` maps each non-identity morphism name to ``(src, tgt)``
        object names; ``comp`` maps ``(g, f)`` name pairs to the composite's
        name for composable non-identity pairs.  Identities get ids
        ``0..n-1`` and are written ``id(x)``; unit composites are filled in.
        """
        objects = list(objects)
        ob_index = {name: i for i, name in enumerate(objects)}
        arrows = dict(arrows)
        mor_names = [identity_name(o) for o in objects] + list(arrows)
        mor_index = {name: k for k, name in enumerate(mor_names)}
        src = list(range(len(objects))) + [ob_index[s] for s, _ in arrows.values()]
        tgt = list(range(len(objects))) + [ob_index[t] for _, t in arrows.values()]
        identity = list(range(len(objects)))
        table = {}
        for m in range(len(src)):
            table[(identity[tgt[m]], m)] = m
            table[(m, identity[src[m]])] = m
        for (g, f), h in dict(comp).items():
            table[(mor_index[g], mor_index[f])] = mor_index[h]
        return cls(src, tgt, identity, table, ob_names=objects, mor_names=mor_names, check=check)

    # -- basic structure ------------------------------------------------

    @property
    def n_obj(self):
        return len(self.identity)

    @property
    def n_mor(self):
        return len(self.src)

    @property
    def objects(self):
        return range(self.n_obj)

    @property
    def morphisms(self):
        return range(self.n_mor)

    def composable(self, g, f):
        return self.src[g] == self.tgt[f]

    def compose(self, *ms):
        """Composite ``ms[0] ∘ ms[1] ∘ ...``."""
        out = ms[-1]
        for g in reversed(ms[:-1]):
            out = self.comp[(g, out)]
        return out

    def is_identity(self, m):
        return self.identity[self.src[m]] == m

    def _homs(self):
        homs = self._cache.get("hom")
        if homs is None:
            homs = {}
            for m in self.morphisms:
                homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
            homs = {k: tuple(v) for k, v in homs.items()}
            self._cache["hom"] = homs
        return homs

    def hom(self, x, y):
        return self._homs().get((x, y), ())

    def into(self, x):
        key = ("into", x)
        if key not in self._cache:
            self._cache[key] = tuple(m for m in self.morphisms if self.tgt[m] == x)
        return self._cache[key]

    def out_of(self, x):
        key = ("out", x)
        if key not in self._cache:
            self._cache[key] = tuple(m for m in self.morphisms if self.src[m] == x)
        return self._cache[key]

    def inverse(self, m):
        """The inverse of ``m`` or ``None`` when ``m`` is not invertible."""
        invs = self._cache.get("inv")
        if invs is None:
            invs = {}
            for k in self.morphisms:
                x, y = self.src[k], self.tgt[k]
                for j in self.hom(y, x):
                    if self.comp.get((j, k)) == self.identity[x] and self.comp.get((k, j)) == self.identity[y]:
                        invs[k] = j
                        break
            self._cache["inv"] = invs
        return invs.get(m)

    def is_thin(self):
        return all(len(ms) <= 1 for ms in self._homs().values())

    @property
    def table(self):
        """Dense composition table as an int array, ``-1`` where undefined."""
        t = self._cache.get("table")
        if t is None:
            t = np.full((self.n_mor, self.n_mor), -1, dtype=np.int64)
            for (g, f), h in self.comp.items():
                if 0 <= g < self.n_mor and 0 <= f < self.n_mor:
                    t[g, f] = h
            self._cache["table"] = t
        return t

    def ob_index(self, name):
        idx = self._cache.get("obnames")
        if idx is None:
            idx = self._cache["obnames"] = {n: i for i, n in enumerate(self.ob_names)}
        return idx[name]

    def mor_index(self, name):
        idx = self._cache.get("mornames")
        if idx is None:
            idx = self._cache["mornames"] = {n: i for i, n in enumerate(self.mor_names)}
        return idx[name]

    def renamed(self, ob_names=None, mor_names=None):
        return FinCat(
            self.src, self.tgt, self.identity, self.comp,
            ob_names=self.ob_names if ob_names is None else ob_names,
            mor_names=self.mor_names if mor_names is None else mor_names,
            check=False,
        )

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.src == other.src
            and self.tgt == other.tgt
            and self.identity == other.identity
            and self.comp == other.comp
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self.identity))
        return self._hash

    def __repr__(self):
        return f"FinCat(objects={self.n_obj}, morphisms={self.n_mor})"


def _composable_pairs(c):
    for m in c.morphisms:
        for f in c.into(c.src[m]):
            yield m, f


def validate_category(c: FinCat) -> Report:
    """Check every category axiom; the report lists each violation found."""
    report = Report()
    n_obj, n_mor = c.n_obj, c.n_mor
    if len(c.tgt) != n_mor:
        report.add("BadEndpoint", message="src and tgt differ in length")
        return report
    for m in range(n_mor):
        if not (0 <= c.src[m] < n_obj and 0 <= c.tgt[m] < n_obj):
            report.add("BadEndpoint", m)
    for x, i in enumerate(c.identity):
        if not (0 <= i < n_mor) or c.src[i] != x or c.tgt[i] != x:
            report.add("BadIdentity", x)
    if len(set(c.identity)) != len(c.identity):
        report.add("BadIdentity", message="identities are not distinct")
    if not report.ok:
        return report

    for (g, f), h in c.comp.items():
        if not (0 <= g < n_mor and 0 <= f < n_mor):
            report.add("SpuriousComposite", g, f, message="unknown morphism")
        elif c.src[g] != c.tgt[f]:
            report.add("SpuriousComposite", g, f)
        elif not (0 <= h < n_mor):
            report.add("BadComposite", g, f)
        elif c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
            report.add("CompositeEndpoints", g, f)
    missing = False
    for g, f in _composable_pairs(c):
        if (g, f) not in c.comp:
            report.add("MissingComposite", g, f)
            missing = True
    if not report.ok and not missing:
        return report

    comp = c.comp
    for f in range(n_mor):
        left = comp.get((c.identity[c.tgt[f]], f))
        if left is not None and left != f:
            report.add("LeftUnit", f)
        right = comp.get((f, c.identity[c.src[f]]))
        if right is not None and right != f:
            report.add("RightUnit", f)

    triples = sum(len(c.into(c.src[g])) * len(c.out_of(c.tgt[g])) for g in range(n_mor))
    if triples > _VECTOR_THRESHOLD and report.ok:
        _check_assoc_vectorized(c, report)
    else:
        for g in range(n_mor):
            hs = c.out_of(c.tgt[g])
            for f in c.into(c.src[g]):
                gf = comp.get((g, f))
                if gf is None:
                    continue
                for h in hs:
                    hg = comp.get((h, g))
                    if hg is None:
                        continue
                    a, b = comp.get((h, gf)), comp.get((hg, f))
                    if a is not None and b is not None and a != b:
                        report.add("NonAssociative", h, g, f)
    return report


def _check_assoc_vectorized(c, report):
    t = c.table
    for g in c.morphisms:
        fs = np.asarray(c.into(c.src[g]), dtype=np.int64)
        hs = np.asarray(c.out_of(c.tgt[g]), dtype=np.int64)
        if not len(fs) or not len(hs):
            continue
        left = t[np.ix_(hs, t[g, fs])]
        right = t[np.ix_(t[hs, g], fs)]
        for i, j in zip(*np.nonzero(left != right)):
            report.add("NonAssociative", int(hs[i]), g, int(fs[j]))


# ----------------------------------------------------------------------------
# functors


class FinFunctor:
    __slots__ = ("dom", "cod", "obj_map", "mor_map", "_cache", "_hash")

    def __init__(self, dom: FinCat, cod: FinCat, obj_map, mor_map, *, check=True):
        self.dom = dom
        self.cod = cod
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        self._cache = {}
        self._hash = None
        if check:
            report = validate_functor(self)
            if not report.ok:
                raise ValidationError(report, "functor")

    def __call__(self, m):
        return self.mor_map[m]

    def ob(self, x):
        return self.obj_map[x]

    def preimage(self, x, y, m):
        """The morphism ``x -> y`` sent to ``m``, or ``None``."""
        pre = self._cache.get((x, y))
        if pre is None:
            pre = self._cache[(x, y)] = {self.mor_map[k]: k for k in self.dom.hom(x, y)}
        return pre.get(m)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (
            self.obj_map == other.obj_map
            and self.mor_map == other.mor_map
            and self.dom == other.dom
            and self.cod == other.cod
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.obj_map, self.mor_map))
        return self._hash

    def __repr__(self):
        return f"FinFunctor({self.dom!r} -> {self.cod!r}, obj_map={self.obj_map})"


def validate_functor(f: FinFunctor) -> Report:
    report = Report()
    c, d = f.dom, f.cod
    if len(f.obj_map) != c.n_obj or len(f.mor_map) != c.n_mor:
        report.add("BadArity", message="maps do not cover the domain")
        return report
    for x, y in enumerate(f.obj_map):
        if not 0 <= y < d.n_obj:
            report.add("BadObjectImage", x)
    for m, n in enumerate(f.mor_map):
        if not 0 <= n < d.n_mor:
            report.add("BadMorphismImage", m)
    if not report.ok:
        return report
    for m, n in enumerate(f.mor_map):
        if d.src[n] != f.obj_map[c.src[m]] or d.tgt[n] != f.obj_map[c.tgt[m]]:
            report.add("Endpoints", m)
    for x in c.objects:
        if f.mor_map[c.identity[x]] != d.identity[f.obj_map[x]]:
            report.add("Identity", x)
    if not report.ok:
        return report
    fm, dcomp = f.mor_map, d.comp
    for (g, h), gh in c.comp.items():
        if fm[gh] != dcomp[(fm[g], fm[h])]:
            report.add("Composition", g, h)
    return report


def identity_functor(c: FinCat) -> FinFunctor:
    return FinFunctor(c, c, c.objects, c.morphisms, check=False)


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    """The composite ``g ∘ f``."""
    if f.cod != g.dom:
        raise DomainMismatch("codomain of the first functor differs from domain of the second")
    gm, go = g.mor_map, g.obj_map
    return FinFunctor(
        f.dom, g.cod, [go[y] for y in f.obj_map], [gm[n] for n in f.mor_map], check=False
    )


def is_bijective_on_objects(f: FinFunctor) -> bool:
    return len(f.obj_map) == f.cod.n_obj and len(set(f.obj_map)) == f.cod.n_obj


def is_fully_faithful(f: FinFunctor) -> bool:
    c, d = f.dom, f.cod
    for x in c.objects:
        for y in c.objects:
            hom = c.hom(x, y)
            target = d.hom(f.obj_map[x], f.obj_map[y])
            if len(hom) != len(target) or len({f.mor_map[m] for m in hom}) != len(target):
                return False
    return True


def is_isomorphism(f: FinFunctor) -> bool:
    return is_bijective_on_objects(f) and len(set(f.mor_map)) == f.cod.n_mor == f.dom.n_mor


class Factorization(NamedTuple):
    b: FinFunctor
    i: FinCat
    m: FinFunctor


def factor_bo_ff(f: FinFunctor) -> Factorization:
    """Factor ``f`` as a bijective-on-objects functor followed by a fully faithful one.

    The middle category has the objects of ``f.dom`` and
    ``hom(x, y) = hom(f x, f y)`` in ``f.cod``; its morphisms are numbered
    lexicographically by (source, target, morphism of the codomain).
    """
    c, d = f.dom, f.cod
    fo = f.obj_map
    triples = []
    for x in c.objects:
        for y in c.objects:
            for h in d.hom(fo[x], fo[y]):
                triples.append((x, y, h))
    index = {t: k for k, t in enumerate(triples)}
    src = [t[0] for t in triples]
    tgt = [t[1] for t in triples]
    identity = [index[(x, x, d.identity[fo[x]])] for x in c.objects]
    into = [[] for _ in c.objects]
    out = [[] for _ in c.objects]
    for k, (x, y, _) in enumerate(triples):
        into[y].append(k)
        out[x].append(k)
    comp = {}
    dcomp = d.comp
    for y in c.objects:
        for k1 in into[y]:
            x, _, h = triples[k1]
            for k2 in out[y]:
                _, z, g = triples[k2]
                comp[(k2, k1)] = index[(x, z, dcomp[(g, h)])]
    mor_names = [f"{d.mor_names[h]}[{c.ob_names[x]},{c.ob_names[y]}]" for x, y, h in triples]
    if len(set(mor_names)) != len(mor_names):
        mor_names = None
    i = FinCat(src, tgt, identity, comp, ob_names=c.ob_names, mor_names=mor_names, check=False)
    b = FinFunctor(
        c, i, c.objects,
        [index[(c.src[m], c.tgt[m], f.mor_map[m])] for m in c.morphisms],
        check=False,
    )
    m = FinFunctor(i, d, fo, [t[2] for t in triples], check=False)
    return Factorization(b, i, m)


# ----------------------------------------------------------------------------
# natural transformations


class NatTrans:
    """A natural transformation ``dom ⇒ cod`` between parallel functors."""

    __slots__ = ("dom", "cod", "components", "_hash")

    def __init__(self, dom: FinFunctor, cod: FinFunctor, components, *, check=True):
        self.dom = dom
        self.cod = cod
        self.components = tuple(components)
        self._hash = None
        if check:
            report = validate_nat(self)
            if not report.ok:
                raise ValidationError(report, "natural transformation")

    @property
    def source(self):
        return self.dom.dom

    @property
    def target(self):
        return self.dom.cod

    def __getitem__(self, x):
        return self.components[x]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NatTrans):
            return NotImplemented
        return self.components == other.components and self.dom == other.dom and self.cod == other.cod

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __repr__(self):
        return f"NatTrans(components={self.components})"


def validate_nat(a: NatTrans) -> Report:
    report = Report()
    f, g = a.dom, a.cod
    if f.dom != g.dom or f.cod != g.cod:
        report.add("NotParallel")
        return report
    c, d = f.dom, f.cod
    if len(a.components) != c.n_obj:
        report.add("BadArity")
        return report
    for x, m in enumerate(a.components):
        if not 0 <= m < d.n_mor or d.src[m] != f.obj_map[x] or d.tgt[m] != g.obj_map[x]:
            report.add("ComponentEndpoints", x)
    if not report.ok:
        return report
    for m in c.morphisms:
        x, y = c.src[m], c.tgt[m]
        if d.comp[(a.components[y], f.mor_map[m])] != d.comp[(g.mor_map[m], a.components[x])]:
            report.add("Naturality", m)
    return report


def identity_nat(f: FinFunctor) -> NatTrans:
    d = f.cod
    return NatTrans(f, f, [d.identity[y] for y in f.obj_map], check=False)


def is_identity_nat(a: NatTrans) -> bool:
    return a.dom == a.cod and all(a.target.is_identity(m) for m in a.components)


def vertical_compose(b: NatTrans, a: NatTrans) -> NatTrans:
    """``b · a`` for ``a: F ⇒ G`` and ``b: G ⇒ H``."""
    if a.cod != b.dom:
        raise BoundaryMismatch("vertical composite: codomain of a differs from domain of b")
    comp = a.target.comp
    return NatTrans(a.dom, b.cod, [comp[(q, p)] for p, q in zip(a.components, b.components)], check=False)


def whisker_left(h: FinFunctor, a: NatTrans) -> NatTrans:
    """``h a``: post-compose every component of ``a`` with ``h``."""
    if a.target != h.dom:
        raise BoundaryMismatch("left whisker: functor domain differs from transformation target")
    hm = h.mor_map
    return NatTrans(
        compose_functors(h, a.dom), compose_functors(h, a.cod), [hm[m] for m in a.components], check=False
    )


def whisker_right(a: NatTrans, k: FinFunctor) -> NatTrans:
    """``a k``: restrict ``a`` along ``k``."""
    if k.cod != a.source:
        raise BoundaryMismatch("right whisker: functor codomain differs from transformation source")
    comps = a.components
    return NatTrans(
        compose_functors(a.dom, k), compose_functors(a.cod, k), [comps[x] for x in k.obj_map], check=False
    )


def horizontal_compose(b: NatTrans, a: NatTrans) -> NatTrans:
    """``b ⋆ a`` for ``a: F ⇒ F'`` (X → Y) and ``b: G ⇒ G'`` (Y → Z)."""
    if a.target != b.source:
        raise BoundaryMismatch("horizontal composite: inner target differs from outer source")
    z = b.target
    g2 = b.cod.mor_map
    fo = a.dom.obj_map
    comps = [z.comp[(g2[a.components[x]], b.components[fo[x]])] for x in a.source.objects]
    return NatTrans(compose_functors(b.dom, a.dom), compose_functors(b.cod, a.cod), comps, check=False)


def is_natural_iso(a: NatTrans) -> bool:
    d = a.target
    return all(d.inverse(m) is not None for m in a.components)


def inverse_nat(a: NatTrans) -> NatTrans:
    d = a.target
    comps = [d.inverse(m) for m in a.components]
    if any(m is None for m in comps):
        from .report import NotInvertible

        raise NotInvertible("transformation has a non-invertible component")
    return NatTrans(a.cod, a.dom, comps, check=False)


def _restore_from_ff(f: FinFunctor, composite: FinFunctor) -> FinFunctor:
    """Recover ``g`` from ``f ∘ g`` when ``f`` is fully faithful and injective on objects."""
    pre_ob = {}
    for x, y in enumerate(f.obj_map):
        if y in pre_ob:
            raise InvalidInput("cannot recover the lifted functors: pass them explicitly")
        pre_ob[y] = x
    try:
        obj_map = [pre_ob[y] for y in composite.obj_map]
    except KeyError:
        raise BoundaryMismatch("transformation does not factor through the functor") from None
    c = composite.dom
    mor_map = [f.preimage(obj_map[c.src[m]], obj_map[c.tgt[m]], composite.mor_map[m]) for m in c.morphisms]
    ensure(all(m is not None for m in mor_map), "fully faithful functor missed a preimage")
    return FinFunctor(c, f.dom, obj_map, mor_map)


def lift_through_ff(f: FinFunctor, eta: NatTrans, source=None, target=None) -> NatTrans:
    """Lift ``eta: f∘G ⇒ f∘H`` along the fully faithful ``f`` to ``G ⇒ H``.

    ``G`` and ``H`` may be given as ``source`` and ``target``; they are
    recovered from ``eta`` when ``f`` is injective on objects.
    """
    if not is_fully_faithful(f):
        raise NotFullyFaithful("lift_through_ff needs a fully faithful functor")
    if eta.target != f.cod:
        raise BoundaryMismatch("transformation does not land in the codomain of the functor")
    g = source if source is not None else _restore_from_ff(f, eta.dom)
    h = target if target is not None else _restore_from_ff(f, eta.cod)
    if compose_functors(f, g) != eta.dom or compose_functors(f, h) != eta.cod:
        raise BoundaryMismatch("given functors do not match the transformation boundary")
    comps = []
    for x, m in enumerate(eta.components):
        k = f.preimage(g.obj_map[x], h.obj_map[x], m)
        ensure(k is not None, f"no preimage for component at {x}")
        comps.append(k)
    lifted = NatTrans(g, h, comps, check=False)
    ensure(validate_nat(lifted).ok, "lift of a natural transformation is not natural")
    ensure(whisker_left(f, lifted) == eta, "lift does not whisker back to the input")
    return lifted
