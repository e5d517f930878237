"""Plain-text algebra descriptions.

A file is a list of ``key: value`` headers and indented blocks::

    # the group algebra of C2
    ring: Q
    kind: hopf
    basis: 1 g
    unit: 1
    mul:
      1 1 -> 1
      1 g -> g
      g 1 -> g
      g g -> 1
    comul:
      1 -> 1@1
      g -> g@g
    counit:
      1 -> 1
      g -> 1
    antipode:
      1 -> 1
      g -> g

Kinds: ``algebra``, ``bialgebra``, ``hopf``, ``group`` and ``semigroup``
(both from a ``cayley:`` block of label rows, or ``named: rect_band 2 2 + 1``
for semigroups) and ``module-algebra`` (``algebra:`` and ``hopf:`` file
references plus an ``action:`` block of ``h a -> expr`` lines, or
``action: trivial``).  Missing structure constants are zero.  Terms are
joined with ``+``; a coefficient is written ``c*label``, e.g. ``-1*x`` or
``(1,0)*g``.  Tensor terms use ``left@right``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .algebra import Bialgebra, HopfAlgebra, StructureAlgebra, group_algebra, semigroup_bialgebra
from .errors import HopfIntError, ParseError
from .rings import parse_ring
from .semigroups import FiniteSemigroup, named_semigroup

KINDS = ("algebra", "bialgebra", "hopf", "group", "semigroup", "module-algebra")
BLOCKS = ("mul", "comul", "counit", "antipode", "cayley", "action")


@dataclass
class Description:
    kind: str
    ring: object
    obj: object
    source: str
    semigroup: FiniteSemigroup | None = None


def _split_terms(text):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


class _Parser:
    def __init__(self, text, source):
        self.source = source
        self.headers = {}
        self.blocks = {}
        self.header_lines = {}
        current = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].rstrip() if not raw.lstrip().startswith("#") else ""
            if not line.strip():
                continue
            if raw[0] in " \t":
                if current is None:
                    raise ParseError("indented line outside a block", lineno, source)
                self.blocks[current].append((lineno, line.strip()))
                continue
            if ":" not in line:
                raise ParseError(f"expected 'key: value', got {line.strip()!r}", lineno, source)
            key, value = (s.strip() for s in line.split(":", 1))
            if key in self.headers or key in self.blocks:
                raise ParseError(f"duplicate section {key!r}", lineno, source)
            if key in BLOCKS and not value:
                self.blocks[key] = []
                current = key
            else:
                self.headers[key] = value
                self.header_lines[key] = lineno
                current = None

    def error(self, msg, line=None):
        return ParseError(msg, line, self.source)

    def header(self, key, required=True):
        if key not in self.headers:
            if required:
                raise self.error(f"missing '{key}:' header")
            return None
        return self.headers[key]

    def line_of(self, key):
        return self.header_lines.get(key)


def _label_index(p, labels, lab, lineno):
    try:
        return labels.index(lab)
    except ValueError:
        raise p.error(f"unknown basis label {lab!r}", lineno) from None


def _coef(p, ring, text, lineno):
    try:
        return ring.parse_element(text)
    except HopfIntError as exc:
        raise p.error(f"bad coefficient {text!r} in {ring}: {exc}", lineno) from None


def parse_vector(p, ring, labels, text, lineno):
    """``2*a + 1/2*b`` over ``labels``; ``0`` is the zero vector."""
    v = [ring.zero] * len(labels)
    for term in _split_terms(text):
        if not term:
            raise p.error(f"empty term in {text!r}", lineno)
        if term == "0":
            continue
        if "*" in term:
            coef_text, lab = term.rsplit("*", 1)
            c = _coef(p, ring, coef_text.strip(), lineno)
        elif term.startswith("-"):
            c, lab = ring.neg(ring.one), term[1:]
        else:
            c, lab = ring.one, term
        i = _label_index(p, labels, lab.strip(), lineno)
        v[i] = ring.add(v[i], c)
    return v


def parse_tensor(p, ring, labels, text, lineno):
    n = len(labels)
    m = [[ring.zero] * n for _ in range(n)]
    for term in _split_terms(text):
        if term == "0":
            continue
        if "*" in term:
            coef_text, pair = term.rsplit("*", 1)
            c = _coef(p, ring, coef_text.strip(), lineno)
        else:
            c, pair = ring.one, term
        if "@" not in pair:
            raise p.error(f"tensor term {term!r} needs 'left@right'", lineno)
        a, b = (s.strip() for s in pair.split("@", 1))
        i, j = _label_index(p, labels, a, lineno), _label_index(p, labels, b, lineno)
        m[i][j] = ring.add(m[i][j], c)
    return m


def _arrow(p, line, lineno):
    if "->" not in line:
        raise p.error(f"expected 'lhs -> rhs', got {line!r}", lineno)
    lhs, rhs = (s.strip() for s in line.split("->", 1))
    return lhs.split(), rhs


def _parse_mul(p, ring, labels):
    n = len(labels)
    mul = [[[ring.zero] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for lineno, line in p.blocks.get("mul", []):
        lhs, rhs = _arrow(p, line, lineno)
        if len(lhs) != 2:
            raise p.error("mul lines look like 'a b -> expr'", lineno)
        i, j = (_label_index(p, labels, x, lineno) for x in lhs)
        if (i, j) in seen:
            raise p.error(f"product {lhs[0]} {lhs[1]} given twice", lineno)
        seen.add((i, j))
        mul[i][j] = parse_vector(p, ring, labels, rhs, lineno)
    return mul


def _parse_per_label(p, block, labels, parse_rhs, default):
    out = [default() for _ in labels]
    if block not in p.blocks:
        return None
    for lineno, line in p.blocks[block]:
        lhs, rhs = _arrow(p, line, lineno)
        if len(lhs) != 1:
            raise p.error(f"{block} lines look like 'a -> expr'", lineno)
        out[_label_index(p, labels, lhs[0], lineno)] = parse_rhs(rhs, lineno)
    return out


def _parse_cayley(p, labels):
    rows = p.blocks.get("cayley")
    if rows is None:
        raise p.error("missing 'cayley:' block")
    if len(rows) != len(labels):
        raise p.error(f"cayley block has {len(rows)} rows for {len(labels)} labels")
    table = []
    for lineno, line in rows:
        cells = line.split()
        if len(cells) != len(labels):
            raise p.error(f"cayley row has {len(cells)} entries, expected {len(labels)}", lineno)
        table.append([_label_index(p, labels, c, lineno) for c in cells])
    return table


def _basis(p):
    labels = p.header("basis").split()
    if not labels:
        raise p.error("empty basis", p.line_of("basis"))
    if len(set(labels)) != len(labels):
        raise p.error("duplicate basis labels", p.line_of("basis"))
    return labels


def parse_description(text, source="<string>", base_dir=None):
    p = _Parser(text, source)
    kind = p.header("kind")
    if kind not in KINDS:
        raise p.error(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", p.line_of("kind"))
    try:
        ring = parse_ring(p.header("ring"))
    except ParseError as exc:
        raise p.error(str(exc), p.line_of("ring")) from None

    if kind == "module-algebra":
        return _parse_module_algebra(p, ring, base_dir)

    if kind in ("group", "semigroup"):
        if kind == "semigroup" and "named" in p.headers:
            try:
                S = named_semigroup(p.header("named"))
            except ValueError as exc:
                raise p.error(str(exc), p.line_of("named")) from None
        else:
            labels = _basis(p)
            table = _parse_cayley(p, labels)
            if kind == "group":
                return Description(kind, ring, group_algebra(ring, table, labels), source)
            S = FiniteSemigroup(table, labels)
        return Description(kind, ring, semigroup_bialgebra(ring, S), source, S)

    labels = _basis(p)
    mul = _parse_mul(p, ring, labels)
    unit_text = p.header("unit", required=kind != "algebra")
    unit = None if unit_text is None else parse_vector(p, ring, labels, unit_text, p.line_of("unit"))
    if kind == "algebra":
        return Description(kind, ring, StructureAlgebra(ring, labels, mul, unit), source)

    n = len(labels)
    comul = _parse_per_label(p, "comul", labels,
                             lambda rhs, ln: parse_tensor(p, ring, labels, rhs, ln),
                             lambda: [[ring.zero] * n for _ in range(n)])
    counit = _parse_per_label(p, "counit", labels,
                              lambda rhs, ln: _coef(p, ring, rhs, ln), lambda: ring.zero)
    if comul is None or counit is None:
        raise p.error(f"kind {kind} needs 'comul:' and 'counit:' blocks")
    if kind == "bialgebra":
        return Description(kind, ring, Bialgebra(ring, labels, mul, unit, comul, counit), source)
    antipode = _parse_per_label(p, "antipode", labels,
                                lambda rhs, ln: parse_vector(p, ring, labels, rhs, ln),
                                lambda: [ring.zero] * n)
    if antipode is None:
        raise p.error("kind hopf needs an 'antipode:' block")
    return Description(kind, ring, HopfAlgebra(ring, labels, mul, unit, comul, counit, antipode),
                       source)


def _resolve(base_dir, ref):
    return ref if os.path.isabs(ref) or base_dir is None else os.path.join(base_dir, ref)


def _parse_module_algebra(p, ring, base_dir):
    alg = load_description(_resolve(base_dir, p.header("algebra")))
    hopf = load_description(_resolve(base_dir, p.header("hopf")))
    if alg.ring != ring or hopf.ring != ring:
        raise p.error(f"referenced files must both be over {ring}")
    return build_module_algebra(p, ring, alg, hopf)


def build_module_algebra(p, ring, alg, hopf):
    from .smash import ModuleAlgebra, trivial_module_algebra

    A, H = alg.obj, hopf.obj
    if p.headers.get("action") == "trivial":
        ma = trivial_module_algebra(A, H)
    else:
        if "action" not in p.blocks:
            raise p.error("missing 'action:' block (or 'action: trivial')")
        m = A.rank
        action = [[[ring.zero] * m for _ in range(m)] for _ in range(H.rank)]
        for lineno, line in p.blocks["action"]:
            lhs, rhs = _arrow(p, line, lineno)
            if len(lhs) != 2:
                raise p.error("action lines look like 'h a -> expr'", lineno)
            i = _label_index(p, H.labels, lhs[0], lineno)
            c = _label_index(p, A.labels, lhs[1], lineno)
            col = parse_vector(p, ring, A.labels, rhs, lineno)
            for r in range(m):
                action[i][r][c] = col[r]
        ma = ModuleAlgebra(A, H, action)
    return Description("module-algebra", ring, ma, p.source, hopf.semigroup)


def parse_action_file(path, alg, hopf):
    """A file holding only ``action:`` (the three-file form of the smash command)."""
    with open(path) as fh:
        p = _Parser(fh.read(), path)
    return build_module_algebra(p, alg.ring, alg, hopf)


def load_description(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", None, path) from None
    return parse_description(text, path, os.path.dirname(os.path.abspath(path)))
