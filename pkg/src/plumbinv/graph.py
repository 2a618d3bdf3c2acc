"""Resolution (plumbing) graphs with named arrow configurations.

File format (line oriented, ``#`` starts a comment, blank lines ignored)::

    vertex <label> e=<int> [g=<nonneg-int>]
    edge <label> <label>
    curve <name>: <label>=<count> [<label>=<count> ...]

Labels match ``[A-Za-z0-9_]+``.  Vertex declaration order fixes the
coordinate order of every vector and matrix produced downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import GraphParseError, UnknownNameError
from .linalg import is_negative_definite

_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class CurveConfig:
    """Arrow counts of a reduced curve germ: arrows[v] transversal smooth
    branches meet the exceptional curve of vertex v."""

    name: str
    arrows: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.arrows)

    def total(self) -> int:
        return sum(self.arrows)


@dataclass(frozen=True)
class ResolutionGraph:
    labels: tuple[str, ...]
    euler: tuple[int, ...]
    genus: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # index pairs, u < v
    curves: tuple[CurveConfig, ...] = ()

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownNameError(f"unknown vertex label {label!r}") \
                from None

    def curve(self, name: str) -> CurveConfig:
        for c in self.curves:
            if c.name == name:
                return c
        raise UnknownNameError(f"unknown curve {name!r}")

    def valency(self, v: int) -> int:
        return sum(1 for (a, b) in self.edges if v in (a, b))


@dataclass(frozen=True)
class Failure:
    rule: str
    message: str
    element: str


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[Failure, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures


def parse_graph(text: str) -> ResolutionGraph:
    """Parse graph-file contents.

    Raises GraphParseError with a line number on the first syntax or
    reference problem.  Structural validation (tree-ness, definiteness,
    ...) is deferred to validate().
    """
    labels: list[str] = []
    euler: list[int] = []
    genus: list[int] = []
    edges: list[tuple[int, int]] = []
    raw_curves: list[tuple[str, dict[str, int], int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "vertex":
            _parse_vertex(parts[1:], lineno, labels, euler, genus)
        elif kind == "edge":
            _parse_edge(parts[1:], lineno, labels, edges)
        elif kind == "curve":
            rest = line[len("curve"):].strip()
            raw_curves.append(_parse_curve(rest, lineno))
        else:
            raise GraphParseError(f"unknown statement {kind!r}", lineno)

    if not labels:
        raise GraphParseError("no vertices declared")

    curves = []
    seen_names = set()
    for name, arrow_map, lineno in raw_curves:
        if name in seen_names:
            raise GraphParseError(f"duplicate curve name {name!r}", lineno)
        seen_names.add(name)
        arrows = [0] * len(labels)
        for lab, count in arrow_map.items():
            if lab not in labels:
                raise GraphParseError(
                    f"unknown vertex label {lab!r} in curve {name!r}", lineno)
            arrows[labels.index(lab)] = count
        if sum(arrows) == 0:
            raise GraphParseError(
                f"curve {name!r} has no arrows", lineno)
        curves.append(CurveConfig(name, tuple(arrows)))

    return ResolutionGraph(
        labels=tuple(labels),
        euler=tuple(euler),
        genus=tuple(genus),
        edges=tuple(edges),
        curves=tuple(curves),
    )


def _parse_vertex(args, lineno, labels, euler, genus):
    if not args:
        raise GraphParseError("vertex needs a label", lineno)
    label = args[0]
    if not _LABEL_RE.match(label):
        raise GraphParseError(f"bad label {label!r}", lineno)
    if label in labels:
        raise GraphParseError(f"duplicate vertex label {label!r}", lineno)
    e = None
    g = 0
    for opt in args[1:]:
        key, _, val = opt.partition("=")
        if not val:
            raise GraphParseError(f"bad vertex option {opt!r}", lineno)
        try:
            ival = int(val)
        except ValueError:
            raise GraphParseError(f"bad integer {val!r}", lineno) from None
        if key == "e":
            e = ival
        elif key == "g":
            if ival < 0:
                raise GraphParseError("genus must be nonnegative", lineno)
            g = ival
        else:
            raise GraphParseError(f"unknown vertex option {key!r}", lineno)
    if e is None:
        raise GraphParseError(f"vertex {label!r} is missing e=<int>", lineno)
    labels.append(label)
    euler.append(e)
    genus.append(g)


def _parse_edge(args, lineno, labels, edges):
    if len(args) != 2:
        raise GraphParseError("edge needs exactly two labels", lineno)
    idx = []
    for lab in args:
        if lab not in labels:
            raise GraphParseError(f"unknown vertex label {lab!r}", lineno)
        idx.append(labels.index(lab))
    a, b = idx
    if a == b:
        raise GraphParseError("self-loop edge", lineno)
    pair = (min(a, b), max(a, b))
    if pair in edges:
        raise GraphParseError("duplicate edge", lineno)
    edges.append(pair)


def _parse_curve(rest, lineno):
    name, sep, body = rest.partition(":")
    name = name.strip()
    if not sep or not _LABEL_RE.match(name):
        raise GraphParseError("curve syntax is 'curve <name>: v=count ...'",
                              lineno)
    arrow_map: dict[str, int] = {}
    items = body.split()
    if not items:
        raise GraphParseError(f"curve {name!r} has no arrows", lineno)
    for item in items:
        lab, sep2, cnt = item.partition("=")
        if not sep2:
            raise GraphParseError(f"bad arrow item {item!r}", lineno)
        try:
            count = int(cnt)
        except ValueError:
            raise GraphParseError(f"bad arrow count {cnt!r}", lineno) from None
        if count < 0:
            raise GraphParseError("negative arrow count", lineno)
        arrow_map[lab] = arrow_map.get(lab, 0) + count
    return name, arrow_map, lineno


def serialize(g: ResolutionGraph) -> str:
    """Canonical text form; parse(serialize(g)) == g for valid graphs."""
    lines = []
    for lab, e, gen in zip(g.labels, g.euler, g.genus):
        line = f"vertex {lab} e={e}"
        if gen:
            line += f" g={gen}"
        lines.append(line)
    for a, b in g.edges:
        lines.append(f"edge {g.labels[a]} {g.labels[b]}")
    for c in g.curves:
        items = " ".join(
            f"{g.labels[v]}={a}" for v, a in enumerate(c.arrows) if a)
        lines.append(f"curve {c.name}: {items}")
    return "\n".join(lines) + "\n"


def intersection_matrix(g: ResolutionGraph) -> list[list[int]]:
    """Symmetric matrix with euler numbers on the diagonal and a 1 for
    every edge."""
    n = g.n
    m = [[0] * n for _ in range(n)]
    for v in range(n):
        m[v][v] = g.euler[v]
    for a, b in g.edges:
        m[a][b] = 1
        m[b][a] = 1
    return m


def validate(g: ResolutionGraph) -> ValidationReport:
    """Check the hypotheses of the whole pipeline.

    All problems are reported, none raised: connectivity, tree-ness,
    genus zero, exact negative definiteness.
    """
    failures: list[Failure] = []

    n = g.n
    # connectivity
    seen = {0}
    stack = [0]
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        missing = [g.labels[v] for v in range(n) if v not in seen]
        failures.append(Failure(
            "connected", "graph is not connected", ",".join(missing)))

    # tree-ness (only meaningful on a connected graph)
    if len(seen) == n and len(g.edges) != n - 1:
        failures.append(Failure(
            "tree", "graph is connected but contains a cycle",
            f"{len(g.edges)} edges on {n} vertices"))

    for v in range(n):
        if g.genus[v] != 0:
            failures.append(Failure(
                "genus", "nonzero genus not supported", g.labels[v]))

    if not is_negative_definite(intersection_matrix(g)):
        failures.append(Failure(
            "negdef", "intersection matrix is not negative definite", "M"))

    return ValidationReport(tuple(failures))
