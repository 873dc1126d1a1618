"""Complete m-tuples of missing edges: verification and exact search.

A complete m-tuple is a family of m pairwise-disjoint missing edges such
that every transversal (one vertex picked from each) forms a clique.  For
k = 2 this is the same thing as an induced K_2(m), the complete
multipartite graph on m parts of size two; ``has_induced_biclique`` is an
independent implementation of that specialization and doubles as a test
oracle for the general search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping, Optional

from .core import Edge, InputFormatError, InternalConsistencyError, KUniformHypergraph

DEFAULT_BUDGET = 10_000_000


class Verdict(enum.Enum):
    FOUND = "found"
    ABSENT = "absent"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class CompleteTupleCertificate:
    """m pairwise-disjoint missing edges whose transversals are all cliques."""

    tuples: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.tuples)

    def to_dict(self) -> dict:
        return {"m": self.m, "tuples": [list(t) for t in self.tuples]}

    @classmethod
    def from_dict(cls, obj: Mapping) -> "CompleteTupleCertificate":
        if not isinstance(obj, Mapping) or "tuples" not in obj:
            raise InputFormatError('certificate document needs a "tuples" field')
        tuples = tuple(tuple(t) for t in obj["tuples"])
        if "m" in obj and obj["m"] != len(tuples):
            raise InputFormatError(f'"m" = {obj["m"]} does not match {len(tuples)} tuples')
        return cls(tuples=tuples)


@dataclass(frozen=True)
class TupleSearchResult:
    """Outcome of the backtracking search.

    ABSENT is a proof: the search space was exhausted without a hit.
    EXHAUSTED means the node budget ran out, so absence is NOT established.
    """

    verdict: Verdict
    certificate: Optional[CompleteTupleCertificate]
    nodes: int


def verify_complete_tuple(
    H: KUniformHypergraph, cert: CompleteTupleCertificate
) -> tuple[bool, Optional[str]]:
    """Check a certificate exhaustively; returns (ok, first violated condition).

    Conditions are checked in order: pairwise disjointness, each tuple being
    a genuine missing edge, then every transversal being a clique (all
    product(tuples) choices, each clique-checked by enumeration).  Arity
    mismatches are argument errors, not False verdicts.
    """
    m = cert.m
    if m < H.k:
        raise ValueError(f"certificate has m = {m} < k = {H.k}")
    for t in cert.tuples:
        if len(t) != H.k or len(set(t)) != H.k:
            raise ValueError(f"tuple {t} is not a {H.k}-subset")
    for i, j in combinations(range(m), 2):
        if set(cert.tuples[i]) & set(cert.tuples[j]):
            return False, f"tuples {cert.tuples[i]} and {cert.tuples[j]} are not disjoint"
    for t in cert.tuples:
        if tuple(sorted(t)) in H.edges:
            return False, f"{t} is not a missing edge"
        if t[-1] >= H.n or t[0] < 0:
            return False, f"{t} has a vertex outside [0, {H.n})"
    for transversal in product(*cert.tuples):
        if not H.is_clique(transversal):
            return False, f"transversal {tuple(sorted(transversal))} is not a clique"
    return True, None


def find_complete_tuple(
    H: KUniformHypergraph, m: int, budget: int = DEFAULT_BUDGET
) -> TupleSearchResult:
    """Backtracking search for a complete m-tuple of missing edges.

    Missing edges are tried in lexicographic order and extended one at a
    time; candidates intersecting a chosen tuple are filtered eagerly, and
    each new tuple is admitted only if the transversal constraints it
    completes (k-subsets drawing k-1 earlier tuples plus the new one) are
    all edges.  The first certificate in this order is the canonical one.

    Every candidate considered costs one node against ``budget``.
    """
    if m < H.k:
        raise ValueError(f"m must be >= k = {H.k}, got {m}")
    k = H.k
    edges = H.edges
    chosen: list[Edge] = []
    nodes = 0
    out_of_budget = False

    def admissible(new: Edge) -> bool:
        # New constraints are exactly the k-subsets of a transversal that
        # include a vertex of `new`: pick k-1 of the chosen tuples, one
        # vertex from each, plus one vertex of `new`.
        if len(chosen) < k - 1:
            return True
        for idxs in combinations(range(len(chosen)), k - 1):
            for pick in product(*(chosen[i] for i in idxs)):
                for t in new:
                    if tuple(sorted(pick + (t,))) not in edges:
                        return False
        return True

    found: list[CompleteTupleCertificate] = []

    def backtrack(cands: list[Edge]) -> bool:
        nonlocal nodes, out_of_budget
        if len(chosen) == m:
            found.append(CompleteTupleCertificate(tuple(chosen)))
            return True
        if len(cands) < m - len(chosen):
            return False
        for idx, tau in enumerate(cands):
            nodes += 1
            if nodes > budget:
                out_of_budget = True
                return False
            if not admissible(tau):
                continue
            chosen.append(tau)
            tset = set(tau)
            rest = [c for c in cands[idx + 1 :] if tset.isdisjoint(c)]
            if backtrack(rest):
                return True
            chosen.pop()
            if out_of_budget:
                return False
        return False

    hit = backtrack(list(H.missing))
    if hit:
        cert = found[0]
        ok, reason = verify_complete_tuple(H, cert)
        if not ok:
            raise InternalConsistencyError(f"search produced an invalid certificate: {reason}", cert)
        return TupleSearchResult(Verdict.FOUND, cert, nodes)
    if out_of_budget:
        return TupleSearchResult(Verdict.EXHAUSTED, None, nodes)
    return TupleSearchResult(Verdict.ABSENT, None, nodes)


def has_induced_biclique(G: KUniformHypergraph, m: int) -> bool:
    """Direct search for an induced K_2(m) in a graph (k = 2 only).

    A 2m-subset W induces K_2(m) exactly when every vertex of W has exactly
    one non-neighbor inside W; the non-adjacency relation is then a perfect
    matching and all cross pairs are edges.  Implemented over vertex
    bitmasks, independently of the tuple backtracking above.
    """
    if G.k != 2:
        raise ValueError(f"induced biclique detection requires k = 2, got k = {G.k}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = G.n
    if 2 * m > n:
        return False
    adj = [0] * n
    for a, b in G.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    full = (1 << n) - 1
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    for W in combinations(range(n), 2 * m):
        mask = 0
        for w in W:
            mask |= 1 << w
        if all((mask & nonadj[w]).bit_count() == 1 for w in W):
            return True
    return False
