"""Line-oriented text format for categories, 2-categories and their cells.

A document is a sequence of named blocks::

    cat C
    ob x y
    mor f : x -> y
    end

    fun F : C -> D
    ob x |-> a
    mor f |-> g
    end

Block kinds are ``cat``, ``fun``, ``nat``, ``2cat``, ``2fun``, ``2nat`` and
``mod``; every reference names an earlier block.  ``#`` starts a comment,
and top-level ``RESULT`` lines are ignored so command output can be fed
back in.  Identities are written ``id(x)`` and need no ``mor`` line unless
their positions differ from ``0..n-1``, in which case every morphism,
identities included, is listed in id order.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .catalog import product_category
from .fincat import (
    FinCat,
    FinFunctor,
    NatTrans,
    identity_functor,
    identity_name,
    identity_nat,
    validate_category,
    validate_functor,
    validate_nat,
)
from .report import CategoryError, Report, ValidationError
from .twocat import (
    CatValued2Functor,
    FinTwoCat,
    Modification,
    TwoNatTrans,
    validate_modification,
    validate_two_cat,
    validate_two_functor,
    validate_two_natural,
)

KINDS = ("cat", "fun", "nat", "2cat", "2fun", "2nat", "mod")
RESERVED = {":", "->", "|->", "=>", "=", ".", "end", *KINDS}
_ID = re.compile(r"^id\((.*)\)$")


class ParseError(CategoryError):
    def __init__(self, line, column, message):
        self.line, self.column, self.message = line, column, message
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(eq=False)
class Block:
    kind: str
    name: str
    value: object
    refs: tuple = ()

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        if (self.kind, self.name, self.refs) != (other.kind, other.name, other.refs):
            return False
        if self.value != other.value:
            return False
        if self.kind == "cat":
            return (self.value.ob_names, self.value.mor_names) == (other.value.ob_names, other.value.mor_names)
        if self.kind == "2cat":
            return self.value.ob_names == other.value.ob_names
        return True


@dataclass(eq=False)
class Document:
    blocks: list = field(default_factory=list)

    def __post_init__(self):
        self._by_name = {b.name: b for b in self.blocks}
        self._by_value = {}
        for b in self.blocks:
            self._by_value.setdefault((b.kind, b.value), b.name)

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return self.blocks == other.blocks

    def __getitem__(self, name):
        return self._by_name[name].value

    def __contains__(self, name):
        return name in self._by_name

    def __iter__(self):
        return iter(self.blocks)

    def names(self, kind=None):
        return [b.name for b in self.blocks if kind is None or b.kind == kind]

    def block(self, name) -> Block:
        return self._by_name[name]

    def render(self) -> str:
        return render(self)

    def dependencies(self, name):
        """Names of the blocks ``name`` refers to directly."""
        b = self._by_name[name]
        return [r[-1] if isinstance(r, tuple) else r for r in b.refs]

    def subdocument(self, names) -> "Document":
        """The named blocks together with everything they depend on, in document order."""
        keep, todo = set(), list(names)
        while todo:
            n = todo.pop()
            if n not in keep:
                keep.add(n)
                todo.extend(self.dependencies(n))
        return Document([b for b in self.blocks if b.name in keep])

    # -- building from values -------------------------------------------

    def _append(self, block):
        self.blocks.append(block)
        self._by_name[block.name] = block
        self._by_value.setdefault((block.kind, block.value), block.name)
        return block.name

    def _fresh(self, name):
        name = _safe_token(name)
        if name not in self._by_name:
            return name
        for k in itertools.count(2):
            cand = f"{name}~{k}"
            if cand not in self._by_name:
                return cand

    def _existing(self, kind, value):
        try:
            return self._by_value.get((kind, value))
        except TypeError:
            return None

    def add(self, name, value, share=True) -> str:
        """Add ``value`` (and, first, everything it refers to); returns its block name.

        A value already present, up to structural equality, is not added
        twice and keeps its existing name, unless ``share`` is false; then
        the top-level block is always new (its dependencies are still shared).
        """
        if isinstance(value, FinCat):
            return self.add_cat(name, value, share)
        if isinstance(value, FinFunctor):
            return self.add_fun(name, value, share)
        if isinstance(value, NatTrans):
            return self.add_nat(name, value, share)
        if isinstance(value, FinTwoCat):
            return self.add_2cat(name, value, share)
        if isinstance(value, CatValued2Functor):
            return self.add_2fun(name, value, share)
        if isinstance(value, TwoNatTrans):
            return self.add_2nat(name, value, share)
        if isinstance(value, Modification):
            return self.add_mod(name, value, share)
        raise TypeError(f"cannot serialize {type(value).__name__}")

    def add_cat(self, name, c: FinCat, share=True):
        found = share and self._existing("cat", c)
        if found:
            return found
        return self._append(Block("cat", self._fresh(name), _sanitized(c)))

    def add_fun(self, name, f: FinFunctor, share=True):
        found = share and self._existing("fun", f)
        if found:
            return found
        a = self.add_cat(f"{name}.dom", f.dom)
        b = self.add_cat(f"{name}.cod", f.cod)
        value = FinFunctor(self[a], self[b], f.obj_map, f.mor_map, check=False)
        return self._append(Block("fun", self._fresh(name), value, (a, b)))

    def add_nat(self, name, t: NatTrans, share=True):
        found = share and self._existing("nat", t)
        if found:
            return found
        f = self.add_fun(f"{name}.src", t.dom)
        g = self.add_fun(f"{name}.tgt", t.cod)
        value = NatTrans(self[f], self[g], t.components, check=False)
        return self._append(Block("nat", self._fresh(name), value, (f, g)))

    def add_2cat(self, name, c: FinTwoCat, share=True):
        found = share and self._existing("2cat", c)
        if found:
            return found
        refs, hom, hcomp = [], {}, {}
        for (a, b), h in sorted(c.hom.items()):
            r = self.add_cat(f"{name}.hom[{a},{b}]", h)
            hom[(a, b)] = self[r]
            refs.append(("hom", a, b, r))
        for (a, b, d), h in sorted(c.hcomp.items()):
            r = self.add_fun(f"{name}.hcomp[{a},{b},{d}]", h)
            hcomp[(a, b, d)] = self[r]
            refs.append(("hcomp", a, b, d, r))
        value = FinTwoCat(c.n_obj, hom, hcomp, c.unit, ob_names=_safe_names(c.ob_names), check=False)
        return self._append(Block("2cat", self._fresh(name), value, tuple(refs)))

    def add_2fun(self, name, f: CatValued2Functor, share=True):
        found = share and self._existing("2fun", f)
        if found:
            return found
        shape = self.add_2cat(f"{name}.shape", f.dom)
        c = self[shape]
        refs = [("shape", shape)]
        cats = []
        for a, k in enumerate(f.on_obj):
            r = self.add_cat(f"{name}({a})", k)
            cats.append(self[r])
            refs.append(("ob", a, r))
        on_1cell, on_2cell = {}, {}
        for (a, b), funs in sorted(f.on_1cell.items()):
            on_1cell[(a, b)] = []
            for x, g in enumerate(funs):
                if a == b and x == c.unit[a] and g == identity_functor(cats[a]):
                    on_1cell[(a, b)].append(identity_functor(cats[a]))
                    continue
                r = self.add_fun(f"{name}[{a},{b},{x}]", g)
                on_1cell[(a, b)].append(self[r])
                refs.append(("1cell", a, b, x, r))
        for (a, b), nats in sorted(f.on_2cell.items()):
            idset = set(c.hom[(a, b)].identity)
            on_2cell[(a, b)] = []
            for m, t in enumerate(nats):
                base = identity_nat(on_1cell[(a, b)][c.hom[(a, b)].src[m]])
                if m in idset and t == base:
                    on_2cell[(a, b)].append(base)
                    continue
                r = self.add_nat(f"{name}[{a},{b},m{m}]", t)
                on_2cell[(a, b)].append(self[r])
                refs.append(("2cell", a, b, m, r))
        value = CatValued2Functor(c, cats, on_1cell, on_2cell, check=False)
        return self._append(Block("2fun", self._fresh(name), value, tuple(refs)))

    def add_2nat(self, name, a: TwoNatTrans, share=True):
        found = share and self._existing("2nat", a)
        if found:
            return found
        f = self.add_2fun(f"{name}.src", a.dom)
        g = self.add_2fun(f"{name}.tgt", a.cod)
        names = [self.add_fun(f"{name}@{x}", p) for x, p in enumerate(a.components)]
        value = TwoNatTrans(self[f], self[g], [self[r] for r in names], check=False)
        return self._append(Block("2nat", self._fresh(name), value, (f, g, *names)))

    def add_mod(self, name, m: Modification, share=True):
        found = share and self._existing("mod", m)
        if found:
            return found
        a = self.add_2nat(f"{name}.src", m.dom)
        b = self.add_2nat(f"{name}.tgt", m.cod)
        names = [self.add_nat(f"{name}@{x}", p) for x, p in enumerate(m.components)]
        value = Modification(self[a], self[b], [self[r] for r in names], check=False)
        return self._append(Block("mod", self._fresh(name), value, (a, b, *names)))


def document_of(**values) -> Document:
    doc = Document()
    for name, value in values.items():
        doc.add(name, value)
    return doc


# ----------------------------------------------------------------------------
# names


def _safe_token(name):
    name = re.sub(r"[\s#]+", "_", str(name)) or "_"
    return f"_{name}" if name in RESERVED else name


def _safe_names(names, taken=()):
    out, seen = [], set(taken)
    for n in names:
        n = _safe_token(n)
        if _ID.match(n):
            n = f"_{n}"
        base, k = n, 2
        while n in seen:
            n = f"{base}~{k}"
            k += 1
        seen.add(n)
        out.append(n)
    return out


def _sanitized(c: FinCat) -> FinCat:
    obs = _safe_names(c.ob_names)
    ids = {identity_name(o) for o in obs}
    idset = set(c.identity)
    others = [n for m, n in enumerate(c.mor_names) if m not in idset]
    fixed = iter(_safe_names(others, ids))
    mors = [None if m in idset else next(fixed) for m in c.morphisms]
    if tuple(obs) == c.ob_names and all(m in idset or mors[m] == c.mor_names[m] for m in c.morphisms):
        return c
    return c.renamed(obs, mors)


# ----------------------------------------------------------------------------
# rendering


def render(doc: Document) -> str:
    out = []
    for b in doc.blocks:
        out.extend(_RENDER[b.kind](doc, b))
        out.append("")
    return "\n".join(out)


def _render_cat(doc, b):
    c = b.value
    lines = [f"cat {b.name}"]
    if c.n_obj:
        lines.append("ob " + " ".join(c.ob_names))
    pinned = list(c.identity) != list(range(c.n_obj))
    idset = set(c.identity)
    for m in c.morphisms:
        if pinned or m not in idset:
            lines.append(f"mor {c.mor_names[m]} : {c.ob_names[c.src[m]]} -> {c.ob_names[c.tgt[m]]}")
    for (g, f), h in sorted(c.comp.items()):
        if g in idset or f in idset:
            continue
        lines.append(f"comp {c.mor_names[g]} . {c.mor_names[f]} = {c.mor_names[h]}")
    lines.append("end")
    return lines


def _render_fun(doc, b):
    f = b.value
    a, c = doc[b.refs[0]], doc[b.refs[1]]
    lines = [f"fun {b.name} : {b.refs[0]} -> {b.refs[1]}"]
    for x in a.objects:
        lines.append(f"ob {a.ob_names[x]} |-> {c.ob_names[f.obj_map[x]]}")
    idset = set(a.identity)
    for m in a.morphisms:
        if m not in idset:
            lines.append(f"mor {a.mor_names[m]} |-> {c.mor_names[f.mor_map[m]]}")
    lines.append("end")
    return lines


def _render_nat(doc, b):
    t = b.value
    f = doc.block(b.refs[0])
    a, c = doc[f.refs[0]], doc[f.refs[1]]
    lines = [f"nat {b.name} : {b.refs[0]} => {b.refs[1]}"]
    for x, m in enumerate(t.components):
        lines.append(f"at {a.ob_names[x]} : {c.mor_names[m]}")
    lines.append("end")
    return lines


def _render_2cat(doc, b):
    c = b.value
    ob = c.ob_names
    lines = [f"2cat {b.name}"]
    if c.n_obj:
        lines.append("ob " + " ".join(ob))
    homs = {}
    for ref in b.refs:
        if ref[0] == "hom":
            _, x, y, r = ref
            homs[(x, y)] = doc[r]
            lines.append(f"hom {ob[x]} {ob[y]} = {r}")
        else:
            _, x, y, z, r = ref
            lines.append(f"hcomp {ob[x]} {ob[y]} {ob[z]} = {r}")
    for x in c.objects:
        lines.append(f"unit {ob[x]} = {homs[(x, x)].ob_names[c.unit[x]]}")
    lines.append("end")
    return lines


def _hom_names(doc, shape_block, a, b):
    for ref in shape_block.refs:
        if ref[0] == "hom" and ref[1:3] == (a, b):
            return doc[ref[3]]
    raise KeyError((a, b))


def _render_2fun(doc, b):
    shape = doc.block(b.refs[0][1])
    ob = shape.value.ob_names
    lines = [f"2fun {b.name} : {shape.name}"]
    for ref in b.refs[1:]:
        if ref[0] == "ob":
            lines.append(f"ob {ob[ref[1]]} = {ref[2]}")
        elif ref[0] == "1cell":
            _, x, y, i, r = ref
            lines.append(f"1cell {ob[x]} {ob[y]} {_hom_names(doc, shape, x, y).ob_names[i]} = {r}")
        else:
            _, x, y, m, r = ref
            lines.append(f"2cell {ob[x]} {ob[y]} {_hom_names(doc, shape, x, y).mor_names[m]} = {r}")
    lines.append("end")
    return lines


def _shape_of_2fun(doc, name):
    return doc.block(doc.block(name).refs[0][1]).value


def _render_2nat(doc, b):
    ob = _shape_of_2fun(doc, b.refs[0]).ob_names
    lines = [f"2nat {b.name} : {b.refs[0]} => {b.refs[1]}"]
    for x, r in enumerate(b.refs[2:]):
        lines.append(f"at {ob[x]} : {r}")
    lines.append("end")
    return lines


def _render_mod(doc, b):
    ob = _shape_of_2fun(doc, doc.block(b.refs[0]).refs[0]).ob_names
    lines = [f"mod {b.name} : {b.refs[0]} => {b.refs[1]}"]
    for x, r in enumerate(b.refs[2:]):
        lines.append(f"at {ob[x]} : {r}")
    lines.append("end")
    return lines


_RENDER = {
    "cat": _render_cat, "fun": _render_fun, "nat": _render_nat, "2cat": _render_2cat,
    "2fun": _render_2fun, "2nat": _render_2nat, "mod": _render_mod,
}


# ----------------------------------------------------------------------------
# parsing


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokenize(text):
    lines = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [_Tok(m.group(), n, m.start() + 1) for m in re.finditer(r"\S+", body)]
        if toks:
            lines.append(toks)
    return lines


def _expect(toks, i, text):
    if i >= len(toks) or toks[i].text != text:
        where = toks[i] if i < len(toks) else toks[-1]
        raise ParseError(where.line, where.col, f"expected {text!r}")


def _arity(toks, n, shape):
    if len(toks) != n:
        raise ParseError(toks[0].line, toks[0].col, f"expected: {shape}")


def parse(text: str) -> Document:
    """Parse and validate a document; raises :class:`ParseError` or :class:`ValidationError`."""
    lines = _tokenize(text)
    doc = Document()
    i = 0
    while i < len(lines):
        head = lines[i]
        kind = head[0].text
        if kind == "RESULT":
            i += 1
            continue
        if kind not in KINDS:
            raise ParseError(head[0].line, head[0].col, f"unknown block kind {kind!r}")
        if len(head) < 2:
            raise ParseError(head[0].line, head[0].col, "block needs a name")
        name = head[1].text
        if name in doc:
            raise ParseError(head[1].line, head[1].col, f"duplicate block name {name!r}")
        if name in RESERVED:
            raise ParseError(head[1].line, head[1].col, f"reserved word {name!r} used as a name")
        body = []
        i += 1
        while True:
            if i >= len(lines):
                raise ParseError(head[0].line, head[0].col, f"block {name!r} has no 'end'")
            if lines[i][0].text == "end":
                _arity(lines[i], 1, "end")
                end = lines[i]
                i += 1
                break
            body.append(lines[i])
            i += 1
        block = _PARSE[kind](doc, head, body, end[0])
        doc._append(block)
    return doc


def _ref(doc, tok, kind):
    if tok.text not in doc:
        raise ParseError(tok.line, tok.col, f"unknown reference {tok.text!r}")
    b = doc.block(tok.text)
    if b.kind != kind:
        raise ParseError(tok.line, tok.col, f"{tok.text!r} is a {b.kind}, expected a {kind}")
    return b


def _lookup(table, tok, what):
    try:
        return table[tok.text]
    except KeyError:
        raise ParseError(tok.line, tok.col, f"unknown {what} {tok.text!r}") from None


def _validated(report: Report, name):
    if not report.ok:
        raise ValidationError(report, name)


def _parse_cat(doc, head, body, end):
    _arity(head, 2, "cat NAME")
    name = head[1].text
    obs, mors, comps = [], [], []
    for toks in body:
        key = toks[0].text
        if key == "ob":
            if len(toks) < 2:
                raise ParseError(toks[0].line, toks[0].col, "expected: ob ID+")
            obs.extend(toks[1:])
        elif key == "mor":
            _arity(toks, 6, "mor ID : SRC -> TGT")
            _expect(toks, 2, ":")
            _expect(toks, 4, "->")
            mors.append(toks)
        elif key == "comp":
            _arity(toks, 6, "comp G . F = H")
            _expect(toks, 2, ".")
            _expect(toks, 4, "=")
            comps.append(toks)
        else:
            raise ParseError(toks[0].line, toks[0].col, f"unexpected {key!r} in cat block")
    ob_index = {}
    for t in obs:
        if t.text in ob_index:
            raise ParseError(t.line, t.col, f"duplicate object {t.text!r}")
        if t.text in RESERVED or _ID.match(t.text):
            raise ParseError(t.line, t.col, f"invalid object name {t.text!r}")
        ob_index[t.text] = len(ob_index)
    ob_names = [t.text for t in obs]
    pinned = any(_ID.match(m[1].text) for m in mors)
    names, src, tgt = [], [], []
    identity = [None] * len(ob_names)
    if not pinned:
        for x, o in enumerate(ob_names):
            names.append(identity_name(o))
            src.append(x)
            tgt.append(x)
            identity[x] = x
    for toks in mors:
        mname = toks[1].text
        s = _lookup(ob_index, toks[3], "object")
        t = _lookup(ob_index, toks[5], "object")
        if mname in names:
            raise ParseError(toks[1].line, toks[1].col, f"duplicate morphism {mname!r}")
        if mname in RESERVED:
            raise ParseError(toks[1].line, toks[1].col, f"invalid morphism name {mname!r}")
        m = _ID.match(mname)
        if m:
            if m.group(1) not in ob_index:
                raise ParseError(toks[1].line, toks[1].col, f"identity of unknown object {m.group(1)!r}")
            x = ob_index[m.group(1)]
            if s != x or t != x:
                raise ParseError(toks[3].line, toks[3].col, f"identity {mname!r} must be an endomorphism of {m.group(1)!r}")
            identity[x] = len(names)
        names.append(mname)
        src.append(s)
        tgt.append(t)
    if pinned and None in identity:
        x = identity.index(None)
        raise ParseError(end.line, end.col, f"identity of {ob_names[x]!r} not listed although identities are pinned")
    mor_index = {n: k for k, n in enumerate(names)}
    table = {}
    for m in range(len(names)):
        table[(identity[tgt[m]], m)] = m
        table[(m, identity[src[m]])] = m
    for toks in comps:
        g = _lookup(mor_index, toks[1], "morphism")
        f = _lookup(mor_index, toks[3], "morphism")
        h = _lookup(mor_index, toks[5], "morphism")
        table[(g, f)] = h
    c = FinCat(src, tgt, identity, table, ob_names=ob_names, mor_names=names, check=False)
    _validated(validate_category(c), name)
    return Block("cat", name, c)


def _parse_fun(doc, head, body, end):
    _arity(head, 6, "fun NAME : CAT -> CAT")
    _expect(head, 2, ":")
    _expect(head, 4, "->")
    name = head[1].text
    a = _ref(doc, head[3], "cat")
    b = _ref(doc, head[5], "cat")
    dom, cod = a.value, b.value
    ob_ix = {n: k for k, n in enumerate(dom.ob_names)}
    mor_ix = {n: k for k, n in enumerate(dom.mor_names)}
    cob_ix = {n: k for k, n in enumerate(cod.ob_names)}
    cmor_ix = {n: k for k, n in enumerate(cod.mor_names)}
    obj_map = [None] * dom.n_obj
    mor_map = [None] * dom.n_mor
    for toks in body:
        key = toks[0].text
        if key not in ("ob", "mor"):
            raise ParseError(toks[0].line, toks[0].col, f"unexpected {key!r} in fun block")
        _arity(toks, 4, f"{key} X |-> Y")
        _expect(toks, 2, "|->")
        if key == "ob":
            x = _lookup(ob_ix, toks[1], "object")
            if obj_map[x] is not None:
                raise ParseError(toks[1].line, toks[1].col, f"object {toks[1].text!r} mapped twice")
            obj_map[x] = _lookup(cob_ix, toks[3], "object")
        else:
            m = _lookup(mor_ix, toks[1], "morphism")
            if mor_map[m] is not None:
                raise ParseError(toks[1].line, toks[1].col, f"morphism {toks[1].text!r} mapped twice")
            mor_map[m] = _lookup(cmor_ix, toks[3], "morphism")
    for x in dom.objects:
        if obj_map[x] is None:
            raise ParseError(end.line, end.col, f"object {dom.ob_names[x]!r} has no image")
        k = dom.identity[x]
        if mor_map[k] is None:
            mor_map[k] = cod.identity[obj_map[x]]
    for m in dom.morphisms:
        if mor_map[m] is None:
            raise ParseError(end.line, end.col, f"morphism {dom.mor_names[m]!r} has no image")
    f = FinFunctor(dom, cod, obj_map, mor_map, check=False)
    _validated(validate_functor(f), name)
    return Block("fun", name, f, (a.name, b.name))


def _components(doc, body, index, kind, what, end, convert):
    comps = [None] * len(index)
    for toks in body:
        if toks[0].text != "at":
            raise ParseError(toks[0].line, toks[0].col, f"unexpected {toks[0].text!r} in {what} block")
        _arity(toks, 4, "at X : Y")
        _expect(toks, 2, ":")
        x = _lookup(index, toks[1], "object")
        if comps[x] is not None:
            raise ParseError(toks[1].line, toks[1].col, f"component at {toks[1].text!r} given twice")
        comps[x] = convert(toks[3])
    names = {v: k for k, v in index.items()}
    for x, v in enumerate(comps):
        if v is None:
            raise ParseError(end.line, end.col, f"no component at {names[x]!r}")
    return comps


def _parse_nat(doc, head, body, end):
    _arity(head, 6, "nat NAME : FUN => FUN")
    _expect(head, 2, ":")
    _expect(head, 4, "=>")
    name = head[1].text
    f = _ref(doc, head[3], "fun")
    g = _ref(doc, head[5], "fun")
    dom, cod = f.value.dom, f.value.cod
    index = {n: k for k, n in enumerate(dom.ob_names)}
    cmor = {n: k for k, n in enumerate(cod.mor_names)}
    comps = _components(doc, body, index, "nat", "nat", end, lambda t: _lookup(cmor, t, "morphism"))
    t = NatTrans(f.value, g.value, comps, check=False)
    _validated(validate_nat(t), name)
    return Block("nat", name, t, (f.name, g.name))


def _parse_2cat(doc, head, body, end):
    _arity(head, 2, "2cat NAME")
    name = head[1].text
    obs, homs, hcomps, units = [], {}, {}, {}
    for toks in body:
        key = toks[0].text
        if key == "ob":
            obs.extend(toks[1:])
            continue
        ix = {t.text: k for k, t in enumerate(obs)}
        if key == "hom":
            _arity(toks, 5, "hom A B = CAT")
            _expect(toks, 3, "=")
            ab = (_lookup(ix, toks[1], "object"), _lookup(ix, toks[2], "object"))
            if ab in homs:
                raise ParseError(toks[1].line, toks[1].col, "hom given twice")
            homs[ab] = _ref(doc, toks[4], "cat")
        elif key == "hcomp":
            _arity(toks, 6, "hcomp A B C = FUN")
            _expect(toks, 4, "=")
            abc = tuple(_lookup(ix, t, "object") for t in toks[1:4])
            if abc in hcomps:
                raise ParseError(toks[1].line, toks[1].col, "hcomp given twice")
            hcomps[abc] = (_ref(doc, toks[5], "fun"), toks[5])
        elif key == "unit":
            _arity(toks, 4, "unit A = ONECELL")
            _expect(toks, 2, "=")
            units[_lookup(ix, toks[1], "object")] = toks[3]
        else:
            raise ParseError(toks[0].line, toks[0].col, f"unexpected {key!r} in 2cat block")
    n = len(obs)
    names = [t.text for t in obs]
    if len(set(names)) != n:
        raise ParseError(head[0].line, head[0].col, "duplicate object in 2cat block")
    for a, b in itertools.product(range(n), repeat=2):
        if (a, b) not in homs:
            raise ParseError(end.line, end.col, f"missing hom {names[a]} {names[b]}")
    unit = []
    for a in range(n):
        if a not in units:
            raise ParseError(end.line, end.col, f"missing unit of {names[a]}")
        tok = units[a]
        unit.append(_lookup({o: k for k, o in enumerate(homs[(a, a)].value.ob_names)}, tok, "1-cell"))
    refs = [("hom", a, b, blk.name) for (a, b), blk in sorted(homs.items())]
    hom = {ab: blk.value for ab, blk in homs.items()}
    hcomp = {}
    for a, b, c in itertools.product(range(n), repeat=3):
        if (a, b, c) not in hcomps:
            raise ParseError(end.line, end.col, f"missing hcomp {names[a]} {names[b]} {names[c]}")
        blk, tok = hcomps[(a, b, c)]
        fun = blk.value
        if fun.dom != product_category(hom[(b, c)], hom[(a, b)]) or fun.cod != hom[(a, c)]:
            raise ParseError(tok.line, tok.col, "hcomp functor does not run hom(b,c) × hom(a,b) → hom(a,c)")
        hcomp[(a, b, c)] = fun
        refs.append(("hcomp", a, b, c, blk.name))
    value = FinTwoCat(n, hom, hcomp, unit, ob_names=names, check=False)
    _validated(validate_two_cat(value), name)
    return Block("2cat", name, value, tuple(refs))


def _parse_2fun(doc, head, body, end):
    _arity(head, 4, "2fun NAME : 2CAT")
    _expect(head, 2, ":")
    name = head[1].text
    cb = _ref(doc, head[3], "2cat")
    c = cb.value
    ix = {o: k for k, o in enumerate(c.ob_names)}
    on_obj = [None] * c.n_obj
    ones = {ab: [None] * h.n_obj for ab, h in c.hom.items()}
    twos = {ab: [None] * h.n_mor for ab, h in c.hom.items()}
    given = {}
    for toks in body:
        key = toks[0].text
        if key == "ob":
            _arity(toks, 4, "ob A = CAT")
            _expect(toks, 2, "=")
            a = _lookup(ix, toks[1], "object")
            if on_obj[a] is not None:
                raise ParseError(toks[1].line, toks[1].col, "object given twice")
            blk = _ref(doc, toks[3], "cat")
            on_obj[a] = blk.value
            given[("ob", a)] = blk.name
        elif key in ("1cell", "2cell"):
            _arity(toks, 6, f"{key} A B CELL = REF")
            _expect(toks, 4, "=")
            ab = (_lookup(ix, toks[1], "object"), _lookup(ix, toks[2], "object"))
            h = c.hom[ab]
            if key == "1cell":
                x = _lookup({o: k for k, o in enumerate(h.ob_names)}, toks[3], "1-cell")
                if ("1cell", *ab, x) in given:
                    raise ParseError(toks[3].line, toks[3].col, "1-cell given twice")
                blk = _ref(doc, toks[5], "fun")
                ones[ab][x] = blk.value
                given[("1cell", *ab, x)] = blk.name
            else:
                m = _lookup({o: k for k, o in enumerate(h.mor_names)}, toks[3], "2-cell")
                if ("2cell", *ab, m) in given:
                    raise ParseError(toks[3].line, toks[3].col, "2-cell given twice")
                blk = _ref(doc, toks[5], "nat")
                twos[ab][m] = blk.value
                given[("2cell", *ab, m)] = blk.name
        else:
            raise ParseError(toks[0].line, toks[0].col, f"unexpected {key!r} in 2fun block")
    for a in c.objects:
        if on_obj[a] is None:
            raise ParseError(end.line, end.col, f"no category for object {c.ob_names[a]!r}")
        u = c.unit[a]
        if ones[(a, a)][u] is None:
            ones[(a, a)][u] = identity_functor(on_obj[a])
    for (a, b), h in sorted(c.hom.items()):
        for x in h.objects:
            if ones[(a, b)][x] is None:
                raise ParseError(end.line, end.col, f"no functor for 1-cell {h.ob_names[x]!r}")
            k = h.identity[x]
            if twos[(a, b)][k] is None:
                twos[(a, b)][k] = identity_nat(ones[(a, b)][x])
        for m in h.morphisms:
            if twos[(a, b)][m] is None:
                raise ParseError(end.line, end.col, f"no transformation for 2-cell {h.mor_names[m]!r}")
    value = CatValued2Functor(c, on_obj, ones, twos, check=False)
    _validated(validate_two_functor(value), name)
    order = {"ob": 0, "1cell": 1, "2cell": 2}
    refs = [("shape", cb.name)] + [(*k, r) for k, r in sorted(given.items(), key=lambda kv: (order[kv[0][0]], kv[0][1:]))]
    return Block("2fun", name, value, tuple(refs))


def _parse_2nat(doc, head, body, end):
    _arity(head, 6, "2nat NAME : 2FUN => 2FUN")
    _expect(head, 2, ":")
    _expect(head, 4, "=>")
    name = head[1].text
    f = _ref(doc, head[3], "2fun")
    g = _ref(doc, head[5], "2fun")
    index = {o: k for k, o in enumerate(f.value.dom.ob_names)}
    comps = _components(doc, body, index, "fun", "2nat", end, lambda t: _ref(doc, t, "fun"))
    value = TwoNatTrans(f.value, g.value, [blk.value for blk in comps], check=False)
    _validated(validate_two_natural(value), name)
    return Block("2nat", name, value, (f.name, g.name, *(blk.name for blk in comps)))


def _parse_mod(doc, head, body, end):
    _arity(head, 6, "mod NAME : 2NAT => 2NAT")
    _expect(head, 2, ":")
    _expect(head, 4, "=>")
    name = head[1].text
    a = _ref(doc, head[3], "2nat")
    b = _ref(doc, head[5], "2nat")
    index = {o: k for k, o in enumerate(a.value.dom.dom.ob_names)}
    comps = _components(doc, body, index, "nat", "mod", end, lambda t: _ref(doc, t, "nat"))
    value = Modification(a.value, b.value, [blk.value for blk in comps], check=False)
    _validated(validate_modification(value), name)
    return Block("mod", name, value, (a.name, b.name, *(blk.name for blk in comps)))


_PARSE = {
    "cat": _parse_cat, "fun": _parse_fun, "nat": _parse_nat, "2cat": _parse_2cat,
    "2fun": _parse_2fun, "2nat": _parse_2nat, "mod": _parse_mod,
}
