"""Partition Pauli terms into mutually commuting sets by greedy graph colouring."""
from __future__ import annotations

from dataclasses import dataclass, field

from .pauli import PauliTerm, check_qubit_count, commutes, fuse_terms


@dataclass
class PauliGraph:
    """Anti-commutation graph: vertex ``i`` is ``terms[i]``."""

    terms: list[PauliTerm]
    adjacency: list[set[int]] = field(default_factory=list)

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


@dataclass
class CommutingPartition:
    """Colour classes in order of first use; each class mutually commutes."""

    sets: list[list[PauliTerm]]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    @property
    def n_terms(self) -> int:
        return sum(len(s) for s in self.sets)


def build_graph(terms) -> PauliGraph:
    terms = list(terms)
    check_qubit_count(terms)
    adjacency: list[set[int]] = [set() for _ in terms]
    for i, a in enumerate(terms):
        for j in range(i + 1, len(terms)):
            if not commutes(a.string, terms[j].string):
                adjacency[i].add(j)
                adjacency[j].add(i)
    return PauliGraph(terms, adjacency)


def greedy_color(graph: PauliGraph) -> CommutingPartition:
    """
    Colour vertices in input order, each with the smallest colour not used
    by an already-coloured neighbour.
    """
    colour: list[int] = []
    sets: list[list[PauliTerm]] = []
    for v, term in enumerate(graph.terms):
        taken = {colour[u] for u in graph.adjacency[v] if u < v}
        c = 0
        while c in taken:
            c += 1
        colour.append(c)
        if c == len(sets):
            sets.append([])
        sets[c].append(term)
    return CommutingPartition(sets)


def sequence(partition: CommutingPartition) -> list[PauliTerm]:
    """Concatenate colour classes in order, each sorted lexicographically."""
    out: list[PauliTerm] = []
    for s in partition.sets:
        out.extend(sorted(s, key=lambda t: str(t.string)))
    return out


def partition_terms(terms, fuse: bool = True) -> CommutingPartition:
    """Fuse duplicate strings, build the graph and colour it."""
    terms = fuse_terms(terms) if fuse else list(terms)
    return greedy_color(build_graph(terms))


def sort_sets(partition: CommutingPartition) -> CommutingPartition:
    return CommutingPartition([sorted(s, key=lambda t: str(t.string)) for s in partition.sets])
