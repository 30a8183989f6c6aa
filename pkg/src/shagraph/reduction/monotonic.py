"""Monotonic trees and their matching characterization."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import networkx as nx

from shagraph import logger
from shagraph.config import Settings
from shagraph.decograph.graph import is_tree
from shagraph.exceptions import NotATreeError, VerificationError
from shagraph.reduction.graph import ReductionGraph, nodal_points, nodal_subgraph


@dataclass(frozen=True)
class MonotonicResult:
    """Outcome of :func:`is_monotonic`.

    ``root`` is a working root when ``monotonic`` holds, otherwise the candidate
    with the fewest violations; ``witness`` is its first violating
    ``(parent, child)`` pair.
    """

    monotonic: bool
    root: str | None
    witness: tuple[str, str] | None = None
    violations: int = 0
    reason: str = ""


def _violations(rg: ReductionGraph, root: str) -> list[tuple[str, str]]:
    """``(parent, child)`` pairs where the child's label is not inside the parent's."""
    depth = rg.graph.depths(root)
    bad = []
    for u, p in rg.branches:
        parent, child = (u, p) if depth[u] < depth[p] else (p, u)
        if not rg.context.contained(rg.label(child), rg.label(parent)):
            bad.append((parent, child))
    return bad


def is_monotonic(rg: ReductionGraph, workers: int | None = None) -> MonotonicResult:
    """Search every vertex as root for a tree in which labels shrink from parent to child."""
    if not is_tree(rg.graph):
        return MonotonicResult(False, None, reason="not a tree")
    roots = rg.vertices
    n = workers if workers is not None else Settings().parallel
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            found = list(pool.map(lambda r: _violations(rg, r), roots))
    else:
        found = [_violations(rg, r) for r in roots]
    best = min(range(len(roots)), key=lambda i: (len(found[i]), roots[i]))
    bad = found[best]
    logger.debug("monotonic search: best root %s with %d violations", roots[best], len(bad))
    if not bad:
        return MonotonicResult(True, roots[best])
    return MonotonicResult(False, roots[best], bad[0], len(bad), "label grows away from the root")


@dataclass(frozen=True)
class PsiResult:
    """Injection from nodal points to components through them with the same label."""

    exists: bool
    psi: dict[str, str]
    unmatched: tuple[str, ...] = ()


def psi_injection(rg: ReductionGraph) -> PsiResult:
    """Decide the matching characterization of monotonic trees.

    Raises
    ------
    NotATreeError
        If the reduction graph is not a tree
    VerificationError
        If the answer disagrees with :func:`is_monotonic`
    """
    if not is_tree(rg.graph):
        raise NotATreeError("psi is only defined on trees")
    nodal = nodal_points(rg)
    # integer nodes keep the matching independent of string hashing
    components = sorted(rg.components)
    index = {u: len(nodal) + i for i, u in enumerate(components)}
    admissible = nx.Graph()
    admissible.add_nodes_from(range(len(nodal)), bipartite=0)
    admissible.add_nodes_from(index.values(), bipartite=1)
    for i, p in enumerate(nodal):
        for u in sorted(rg.components_at(p)):
            if rg.context.same_label(rg.points[p], rg.components[u]):
                admissible.add_edge(i, index[u])
    matching = nx.bipartite.hopcroft_karp_matching(admissible, top_nodes=range(len(nodal))) if nodal else {}
    psi = {p: components[matching[i] - len(nodal)] for i, p in enumerate(nodal) if i in matching}
    unmatched = tuple(p for p in nodal if p not in psi)
    result = PsiResult(not unmatched, psi, unmatched)
    monotonic = is_monotonic(rg).monotonic
    if result.exists != monotonic:
        raise VerificationError(
            "matching and root search disagree",
            {"psi_exists": result.exists, "monotonic": monotonic, "nodal_vertices": len(nodal_subgraph(rg).vertices)},
        )
    return result
