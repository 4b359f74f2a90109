"""Edge and arc colorings.

Colors are opaque hashable labels (ints, or strings such as ``"0"`` and
``"0'"``); the palette fixes their order for display and JSON output.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Hashable, Mapping

from .errors import IncompleteColoring
from .graph import Digraph, Graph, edge

Color = Hashable

ZERO = "0"
ZERO_PRIME = "0'"


def color_sort_key(c):
    return (0, c, "") if isinstance(c, int) else (1, 0, str(c))


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    assignment: Mapping[tuple[int, int], Color]
    palette: tuple

    def __init__(self, assignment, palette=None):
        canon = {edge(*e): c for e, c in assignment.items()}
        if palette is None:
            palette = sorted(set(canon.values()), key=color_sort_key)
        palette = tuple(palette)
        stray = set(canon.values()) - set(palette)
        if stray:
            raise ValueError(f"colors {sorted(map(str, stray))} not in palette")
        object.__setattr__(self, "assignment", MappingProxyType(dict(sorted(canon.items()))))
        object.__setattr__(self, "palette", palette)

    def __reduce__(self):
        return (type(self), (dict(self.assignment), self.palette))

    def __getitem__(self, e):
        return self.assignment[edge(*e)]

    def get(self, e, default=None):
        return self.assignment.get(edge(*e), default)

    def __len__(self):
        return len(self.assignment)

    def __eq__(self, other):
        return isinstance(other, EdgeColoring) and dict(self.assignment) == dict(other.assignment)

    def __hash__(self):
        return hash(tuple(self.assignment.items()))

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def used(self) -> list:
        present = set(self.assignment.values())
        return [c for c in self.palette if c in present]

    def check_total(self, g: Graph) -> None:
        missing = [e for e in g.edges if e not in self.assignment]
        if missing:
            raise IncompleteColoring(f"{len(missing)} edges uncolored, e.g. {missing[0]}")
        extra = [e for e in self.assignment if not g.has_edge(*e)]
        if extra:
            raise IncompleteColoring(f"coloring names non-edge {extra[0]}")

    def tally(self, v: int, g: Graph) -> Counter:
        return Counter(self.assignment[edge(v, w)] for w in g.neighbors(v))

    def restricted(self, edges) -> "EdgeColoring":
        keep = {edge(*e) for e in edges}
        return EdgeColoring({e: c for e, c in self.assignment.items() if e in keep}, self.palette)

    def merged(self, other: "EdgeColoring") -> "EdgeColoring":
        pal = list(self.palette) + [c for c in other.palette if c not in self.palette]
        return EdgeColoring({**self.assignment, **other.assignment}, pal)

    def to_json(self) -> dict:
        return {f"{u}-{v}": c for (u, v), c in self.assignment.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Color], palette=None) -> "EdgeColoring":
        out = {}
        for key, c in data.items():
            u, v = key.split("-")
            out[(int(u), int(v))] = c
        return cls(out, palette)


@dataclass(frozen=True, eq=False)
class ArcColoring:
    assignment: Mapping[tuple[int, int], Color]
    palette: tuple

    def __init__(self, assignment, palette=None):
        if palette is None:
            palette = sorted(set(assignment.values()), key=color_sort_key)
        palette = tuple(palette)
        stray = set(assignment.values()) - set(palette)
        if stray:
            raise ValueError(f"colors {sorted(map(str, stray))} not in palette")
        data = {(int(u), int(v)): c for (u, v), c in assignment.items()}
        object.__setattr__(self, "assignment", MappingProxyType(dict(sorted(data.items()))))
        object.__setattr__(self, "palette", palette)

    def __reduce__(self):
        return (type(self), (dict(self.assignment), self.palette))

    def __getitem__(self, a):
        return self.assignment[tuple(a)]

    def __len__(self):
        return len(self.assignment)

    def __eq__(self, other):
        return isinstance(other, ArcColoring) and dict(self.assignment) == dict(other.assignment)

    def __hash__(self):
        return hash(tuple(self.assignment.items()))

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def check_total(self, d: Digraph) -> None:
        missing = [a for a in d.arcs if a not in self.assignment]
        if missing:
            raise IncompleteColoring(f"{len(missing)} arcs uncolored, e.g. {missing[0]}")
        extra = [a for a in self.assignment if not d.has_arc(*a)]
        if extra:
            raise IncompleteColoring(f"coloring names non-arc {extra[0]}")

    def to_json(self) -> dict:
        return {f"{u}>{v}": c for (u, v), c in self.assignment.items()}

    @classmethod
    def from_json(cls, data, palette=None) -> "ArcColoring":
        out = {}
        for key, c in data.items():
            u, v = key.split(">")
            out[(int(u), int(v))] = c
        return cls(out, palette)
