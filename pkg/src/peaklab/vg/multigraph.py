"""Multigraphs of monomials: double partitions, cyclomatic-loop data and flats.

A monomial on n vertices gives a multigraph with an edge {i, j} for every
factor t_ij, u+_ij, u-_ij, v_ij or w_ij (with multiplicity) and a loop at i
for every factor u_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..combinatorics import Partition
from .polynomial import Monomial


@dataclass(frozen=True)
class Component:
    vertices: tuple
    edges: int  # non-loop edges, with multiplicity
    loops: int

    @property
    def beta(self) -> int:
        """Cyclomatic number, counting loops as edges."""
        return self.edges + self.loops - len(self.vertices) + 1


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple = field(default=())  # sorted ((i, j), multiplicity)
    loops: tuple = field(default=())  # sorted (i, multiplicity)

    @classmethod
    def from_monomial(cls, m: Monomial, n: int) -> "Multigraph":
        edges: dict = {}
        loops: dict = {}
        for v, e in m:
            if v[0] == "u":
                loops[v[1]] = loops.get(v[1], 0) + e
            else:
                key = (v[1], v[2])
                edges[key] = edges.get(key, 0) + e
            if max(v[1:]) > n:
                raise ValueError(f"variable {v} exceeds n={n}")
        return cls(n, tuple(sorted(edges.items())), tuple(sorted(loops.items())))

    def components(self) -> list[Component]:
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (i, j), _ in self.edges:
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups: dict = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), []).append(v)
        edge_count: dict = {}
        for (i, _), mult in self.edges:
            r = find(i)
            edge_count[r] = edge_count.get(r, 0) + mult
        loop_count: dict = {}
        for i, mult in self.loops:
            r = find(i)
            loop_count[r] = loop_count.get(r, 0) + mult
        return [
            Component(tuple(vs), edge_count.get(r, 0), loop_count.get(r, 0))
            for r, vs in sorted(groups.items())
        ]

    def double_partition(self) -> tuple[Partition, Partition]:
        comps = self.components()
        plus = Partition(len(c.vertices) for c in comps if c.loops == 0)
        minus = Partition(len(c.vertices) for c in comps if c.loops > 0)
        return plus, minus

    def cl_data(self) -> list[tuple[tuple, int, int]]:
        """(block, beta, loop count) for every connected component."""
        return [(c.vertices, c.beta, c.loops) for c in self.components()]

    def type_a_flat(self) -> tuple:
        """Set partition of the vertices into connected components."""
        return tuple(c.vertices for c in self.components())

    def flat_orbit(self) -> Partition:
        """Type B flat orbit: sizes of loopless components (looped ones join the zero block)."""
        return self.double_partition()[0]

    def is_lightly_looped_forest(self) -> bool:
        return all(c.beta <= 1 and (c.beta == 0 or c.loops == 1) for c in self.components())


def monomial_multigraph(m: Monomial, n: int) -> Multigraph:
    return Multigraph.from_monomial(m, n)


def double_partition(m: Monomial, n: int) -> tuple[Partition, Partition]:
    return Multigraph.from_monomial(m, n).double_partition()


def cl_data(m: Monomial, n: int) -> list:
    return Multigraph.from_monomial(m, n).cl_data()


__all__ = ["Component", "Multigraph", "cl_data", "double_partition", "monomial_multigraph"]
