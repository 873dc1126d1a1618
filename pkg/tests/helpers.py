"""Shared instance builders and independent brute-force oracles.

The oracles deliberately avoid the library's algorithms: cliques are
checked by full subset enumeration, tuple existence by enumerating every
m-subset of missing edges through the exhaustive verifier.  Expected
values frozen in the test modules were computed with these.
"""

from __future__ import annotations

import random
from itertools import combinations

from cliquecert import (
    CompleteTupleCertificate,
    KUniformHypergraph,
    verify_complete_tuple,
)


def graph(n: int, edges) -> KUniformHypergraph:
    return KUniformHypergraph.from_edges(n, 2, edges)


def cycle_graph(n: int) -> KUniformHypergraph:
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> KUniformHypergraph:
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> KUniformHypergraph:
    return graph(n, combinations(range(n), 2))


def complete_kuniform(n: int, k: int) -> KUniformHypergraph:
    return KUniformHypergraph(n=n, k=k, edges=frozenset(combinations(range(n), k)))


def edgeless(n: int, k: int) -> KUniformHypergraph:
    return KUniformHypergraph(n=n, k=k, edges=frozenset())


def nine_vertex_example() -> KUniformHypergraph:
    """3-uniform on 9 vertices: all triples except three disjoint ones."""
    special = {(0, 1, 2), (3, 4, 5), (6, 7, 8)}
    edges = frozenset(t for t in combinations(range(9), 3) if t not in special)
    return KUniformHypergraph(n=9, k=3, edges=edges)


def random_hypergraph(rng: random.Random, n: int, k: int, p: float) -> KUniformHypergraph:
    edges = frozenset(e for e in combinations(range(n), k) if rng.random() < p)
    return KUniformHypergraph(n=n, k=k, edges=edges)


def relabel(H: KUniformHypergraph, perm: list[int]) -> KUniformHypergraph:
    edges = frozenset(tuple(sorted(perm[v] for v in e)) for e in H.edges)
    return KUniformHypergraph(n=H.n, k=H.k, edges=edges)


def brute_force_max_clique(H: KUniformHypergraph) -> int:
    """Largest clique size by descending subset enumeration (n <= 12)."""
    for size in range(H.n, -1, -1):
        for S in combinations(range(H.n), size):
            if H.is_clique(S):
                return size
    return 0


def brute_force_has_complete_tuple(H: KUniformHypergraph, m: int) -> bool:
    """Existence of a complete m-tuple by enumerating all missing m-subsets."""
    for tuples in combinations(H.missing, m):
        ok, _ = verify_complete_tuple(H, CompleteTupleCertificate(tuples))
        if ok:
            return True
    return False


def missing_inside(H: KUniformHypergraph, S) -> int:
    verts = sorted(S)
    return sum(1 for t in combinations(verts, H.k) if t not in H.edges)
