"""Textual family specifications such as ``h3(lchain(2)@5, cycle(4)@0, k=3)``.

Grammar::

    spec   := NAME '(' [arg (',' arg)*] ')' ['@' INT]
    arg    := spec | INT | NAME '=' INT

Integers may carry a leading minus sign only where a family accepts one
(none currently do).  Anchors (``@k``) select the attachment vertex of a
child of ``join``, ``h1``, ``h2`` and ``h3``; elsewhere they are rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import families as fam
from .graph import Graph, GraphError, complete_graph, cycle_graph, path_graph, star_graph


class FamilySpecError(GraphError):
    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class FamilySpec:
    name: str
    ints: tuple[int, ...] = ()
    children: tuple["FamilySpec", ...] = ()
    kwargs: tuple[tuple[str, int], ...] = ()
    anchor: Optional[int] = None
    position: int = field(default=0, compare=False, repr=False)

    @property
    def kind(self) -> str:
        return _RULES[self.name].kind

    def __str__(self) -> str:
        parts = [str(c) for c in self.children]
        parts += [str(i) for i in self.ints]
        parts += [f"{k}={v}" for k, v in self.kwargs]
        text = f"{self.name}({', '.join(parts)})"
        if self.anchor is not None:
            text += f"@{self.anchor}"
        return text

    def build(self) -> Graph:
        return _RULES[self.name].build(self)


@dataclass(frozen=True)
class _Rule:
    kind: str
    n_ints: tuple[int, Optional[int]]
    n_children: tuple[int, Optional[int]]
    kwargs: tuple[str, ...]
    build: Callable[[FamilySpec], Graph]
    min_int: int = 0
    anchored_children: bool = False


def _anchored(spec: FamilySpec) -> tuple[Graph, int]:
    g = spec.build()
    anchor = 0 if spec.anchor is None else spec.anchor
    if not 0 <= anchor < g.n:
        raise FamilySpecError(
            f"anchor {anchor} out of range for {spec.name} with {g.n} vertices",
            spec.position,
        )
    return g, anchor


def _kw(spec: FamilySpec, key: str, default: int) -> int:
    return dict(spec.kwargs).get(key, default)


def _wrap(fn: Callable[[FamilySpec], Graph]) -> Callable[[FamilySpec], Graph]:
    def build(spec: FamilySpec) -> Graph:
        try:
            return fn(spec)
        except FamilySpecError:
            raise
        except GraphError as exc:
            raise FamilySpecError(f"{spec.name}: {exc}", spec.position) from None

    return build


def _h3(s: FamilySpec) -> Graph:
    base, *extra = [_anchored(c) for c in s.children]
    return fam.transform_h3(base[0], base[1], _kw(s, "k", 1), extra)


_RULES: dict[str, _Rule] = {
    "empty": _Rule("Empty", (1, 1), (0, 0), (), _wrap(lambda s: Graph.empty(s.ints[0]))),
    "path": _Rule("Path", (1, 1), (0, 0), (), _wrap(lambda s: path_graph(s.ints[0])), 1),
    "cycle": _Rule("Cycle", (1, 1), (0, 0), (), _wrap(lambda s: cycle_graph(s.ints[0])), 3),
    "complete": _Rule(
        "Complete", (1, 1), (0, 0), (), _wrap(lambda s: complete_graph(s.ints[0])), 1
    ),
    "star": _Rule("Star", (1, 1), (0, 0), (), _wrap(lambda s: star_graph(s.ints[0]))),
    "corona": _Rule(
        "Corona", (0, 0), (1, 1), (), _wrap(lambda s: fam.corona_k1(s.children[0].build()))
    ),
    "union": _Rule(
        "DisjointUnion", (0, 0), (1, None), (),
        _wrap(lambda s: fam.disjoint_union([c.build() for c in s.children])),
    ),
    "zykov": _Rule(
        "ZykovSum", (0, 0), (2, 2), (),
        _wrap(lambda s: fam.zykov_sum(s.children[0].build(), s.children[1].build())),
    ),
    "join": _Rule(
        "JoinVertex", (0, 0), (2, None), (),
        _wrap(lambda s: fam.join_vertex([_anchored(c) for c in s.children])),
        anchored_children=True,
    ),
    "lchain": _Rule("LChain", (1, 1), (0, 0), (), _wrap(lambda s: fam.l_chain(s.ints[0]))),
    "wstar": _Rule("WStar", (1, 1), (0, 0), (), _wrap(lambda s: fam.w_star(s.ints[0])), 2),
    "lemma4g1": _Rule(
        "Lemma4G1", (2, 2), (0, 0), (), _wrap(lambda s: fam.lemma4_g1(*s.ints))
    ),
    "lemma4g2": _Rule(
        "Lemma4G2", (2, 2), (0, 0), (), _wrap(lambda s: fam.lemma4_g2(*s.ints))
    ),
    "chainprod": _Rule(
        "ChainProduct", (1, None), (0, 0), (), _wrap(lambda s: fam.chain_product(s.ints)), 1
    ),
    "cycletail": _Rule(
        "CycleWithTail", (1, 1), (0, 0), (), _wrap(lambda s: fam.cycle_with_tail(s.ints[0])), 4
    ),
    "fig22g": _Rule("Fig22G", (0, 0), (0, 0), (), _wrap(lambda s: fam.fig22_g())),
    "primefactor": _Rule(
        "PrimeFactor", (1, 1), (0, 0), (), _wrap(lambda s: fam.prime_factor(s.ints[0])), 1
    ),
    "h1": _Rule(
        "Transform(H1)", (0, 0), (1, 1), (),
        _wrap(lambda s: fam.transform_h1(*_anchored(s.children[0]))),
        anchored_children=True,
    ),
    "h2": _Rule(
        "Transform(H2)", (0, 0), (1, 1), (),
        _wrap(lambda s: fam.transform_h2(*_anchored(s.children[0]))),
        anchored_children=True,
    ),
    "h3": _Rule(
        "Transform(H3)", (0, 0), (1, None), ("k",), _wrap(_h3), anchored_children=True
    ),
}

FAMILY_NAMES = tuple(sorted(_RULES))

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),@=]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                bad = len(text) - len(text[pos:].lstrip())
                raise FamilySpecError(f"unexpected character {text[bad]!r}", bad)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", "", len(self.text))

    def take(self, kind: str, value: Optional[str] = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[0] != "end" else "end of input"
            raise FamilySpecError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def spec(self) -> FamilySpec:
        _, name, pos = self.take("name")
        rule = _RULES.get(name)
        if rule is None:
            raise FamilySpecError(f"unknown family {name!r}", pos)
        self.take("punct", "(")
        ints: list[int] = []
        children: list[FamilySpec] = []
        kwargs: list[tuple[str, int]] = []
        if self.peek()[1] != ")":
            while True:
                self.arg(rule, ints, children, kwargs)
                if self.peek()[1] == ",":
                    self.take("punct", ",")
                    continue
                break
        self.take("punct", ")")
        anchor = None
        if self.peek()[1] == "@":
            _, _, at_pos = self.take("punct", "@")
            _, value, vpos = self.take("int")
            anchor = int(value)
            if anchor < 0:
                raise FamilySpecError("anchor must be non-negative", vpos)
        self.check(rule, name, pos, ints, children, kwargs)
        return FamilySpec(name, tuple(ints), tuple(children), tuple(kwargs), anchor, pos)

    def arg(self, rule: _Rule, ints, children, kwargs) -> None:
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            if kwargs:
                raise FamilySpecError("positional argument after keyword", pos)
            ints.append(int(value))
        elif kind == "name" and self.i + 1 < len(self.tokens) and self.tokens[self.i + 1][1] == "=":
            self.i += 2
            if value not in rule.kwargs:
                raise FamilySpecError(f"unexpected keyword {value!r}", pos)
            if any(k == value for k, _ in kwargs):
                raise FamilySpecError(f"repeated keyword {value!r}", pos)
            _, number, _ = self.take("int")
            kwargs.append((value, int(number)))
        elif kind == "name":
            if kwargs:
                raise FamilySpecError("positional argument after keyword", pos)
            children.append(self.spec())
        else:
            raise FamilySpecError(f"expected an argument, got {value or 'end of input'!r}", pos)

    def check(self, rule: _Rule, name: str, pos: int, ints, children, kwargs) -> None:
        def arity(count: int, bounds: tuple[int, Optional[int]], what: str) -> None:
            lo, hi = bounds
            if count < lo or (hi is not None and count > hi):
                expect = str(lo) if lo == hi else (f"{lo}+" if hi is None else f"{lo}-{hi}")
                raise FamilySpecError(f"{name} takes {expect} {what}, got {count}", pos)

        arity(len(ints), rule.n_ints, "integer argument(s)")
        arity(len(children), rule.n_children, "graph argument(s)")
        for v in ints:
            if v < rule.min_int:
                raise FamilySpecError(f"{name} arguments must be >= {rule.min_int}, got {v}", pos)
        for k, v in kwargs:
            if v < 1:
                raise FamilySpecError(f"{name} keyword {k} must be >= 1, got {v}", pos)
        if not rule.anchored_children:
            for c in children:
                if c.anchor is not None:
                    raise FamilySpecError(f"{name} does not take anchored arguments", c.position)
        if name in ("lemma4g1", "lemma4g2") and not 0 <= ints[1] <= ints[0]:
            raise FamilySpecError(f"{name} needs 0 <= q <= nu", pos)


def parse_family_spec(text: str) -> FamilySpec:
    parser = _Parser(text)
    spec = parser.spec()
    tok = parser.peek()
    if tok[0] != "end":
        raise FamilySpecError(f"unexpected trailing input {tok[1]!r}", tok[2])
    if spec.anchor is not None:
        raise FamilySpecError("anchor only allowed on join or transform arguments", spec.position)
    return spec


def build_family(text: str) -> Graph:
    return parse_family_spec(text).build()
