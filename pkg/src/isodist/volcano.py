"""l-isogeny graphs on a censused isogeny class, and what they prove.

Vertices are the j-invariants of one ordinary class I(t, p); edges are roots
of the classical modular polynomial Phi_l(X, j) that stay inside the class,
counted with multiplicity.  Components of such a graph are volcanoes: leveled
graphs whose level i holds exactly the curves whose endomorphism order has
conductor with l-adic valuation i.  Levels are recovered structurally (floor
vertices are the degree-1 ones, everything else by distance to the floor), so
the census comparison against class numbers stays an independent check.

Self-loop / multi-edge convention: a root of multiplicity m contributes m
edges, and a self-loop counts once per root multiplicity (so a ramified
horizontal self-loop adds 1 to the horizontal degree).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

from ._modpoly_data import PHI
from .census import IsogenyClassSummary
from .errors import UnsupportedLevelError, VerificationError
from .finitefield import kronecker, roots_mod_p
from .quadforms import _factorize

__all__ = [
    "supported_levels",
    "phi_coefficients",
    "phi_mod_p",
    "neighbors",
    "VolcanoComponent",
    "components",
    "build_component",
    "classify_rings",
    "classify_census",
    "StructureReport",
    "verify_structure",
    "to_dot",
]


def supported_levels() -> tuple[int, ...]:
    return tuple(sorted(PHI))


@lru_cache(maxsize=None)
def phi_coefficients(ell: int) -> tuple[tuple[int, ...], ...]:
    """Full (ell+2) x (ell+2) integer coefficient matrix of Phi_ell(X, Y)."""
    if ell not in PHI:
        raise UnsupportedLevelError(
            f"no embedded modular polynomial for l = {ell}; have {supported_levels()}"
        )
    deg = ell + 1
    matrix = [[0] * (deg + 1) for _ in range(deg + 1)]
    for (i, k), text in PHI[ell].items():
        value = int(text)
        matrix[i][k] = value
        matrix[k][i] = value
    return tuple(tuple(row) for row in matrix)


@lru_cache(maxsize=4096)
def phi_mod_p(ell: int, p: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(v % p for v in row) for row in phi_coefficients(ell))


def neighbors(j: int, ell: int, field, restrict=None) -> Counter:
    """Multiset of roots of Phi_ell(X, j) over F_p, optionally restricted.

    With restrict = j_set of an ordinary class over a prime field, the result
    is exactly the multiset of l-isogeny edges out of j inside that class.
    """
    p = int(field)
    if ell == p:
        raise ValueError("isogeny degree l must differ from the characteristic p")
    matrix = phi_mod_p(ell, p)
    j %= p
    jpow = [1]
    for _ in range(ell + 1):
        jpow.append(jpow[-1] * j % p)
    f = tuple(sum(row[k] * jpow[k] for k in range(ell + 2)) % p for row in matrix)
    out: Counter = Counter()
    for root, mult in roots_mod_p(f, p):
        if restrict is None or root in restrict:
            out[root] = mult
    return out


@dataclass
class VolcanoComponent:
    """One connected component of the class-restricted l-isogeny graph."""

    ell: int
    p: int
    vertices: tuple[int, ...]
    adjacency: dict[int, Counter]
    level_of: dict[int, int]
    depth: int
    contains_special_j: bool

    def level_sizes(self) -> tuple[int, ...]:
        sizes = [0] * (self.depth + 1)
        for level in self.level_of.values():
            sizes[level] += 1
        return tuple(sizes)

    def degree(self, j: int) -> int:
        return sum(self.adjacency[j].values())


def _partition(summary: IsogenyClassSummary, ell: int) -> list[tuple[list[int], dict[int, Counter]]]:
    """Connected components (vertex list, adjacency) of the restricted graph."""
    j_set = summary.j_set
    seen: set[int] = set()
    comps = []
    for seed in sorted(j_set):
        if seed in seen:
            continue
        queue = deque([seed])
        seen.add(seed)
        verts: list[int] = []
        adj: dict[int, Counter] = {}
        while queue:
            u = queue.popleft()
            verts.append(u)
            adj[u] = neighbors(u, ell, summary.p, restrict=j_set)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append((sorted(verts), adj))
    return comps


def _assign_levels(verts, adj, depth: int, context: str) -> dict[int, int]:
    """Levels from the graph alone: floor = degree-1 vertices, then BFS up."""
    if depth == 0:
        return {u: 0 for u in verts}
    floor = [u for u in verts if sum(adj[u].values()) == 1]
    if not floor:
        raise VerificationError(f"no floor vertices in {context}")
    dist = {u: 0 for u in floor}
    queue = deque(floor)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    levels = {}
    for u in verts:
        if u not in dist or not 0 <= depth - dist[u] <= depth:
            raise VerificationError(f"inconsistent level assignment in {context}")
        levels[u] = depth - dist[u]
    if any(levels[u] != depth for u in floor) or min(levels.values()) != 0:
        raise VerificationError(f"levels do not span the volcano in {context}")
    return levels


def _special_js(p: int) -> frozenset[int]:
    return frozenset({0, 1728 % p})


def components(summary: IsogenyClassSummary, ell: int) -> list[VolcanoComponent]:
    """All volcano components of the class at l, with levels assigned."""
    p = summary.p
    depth = _valuation(summary.decomposition.v, ell)
    special = _special_js(p)
    out = []
    for verts, adj in _partition(summary, ell):
        context = f"I({summary.t},{p}) at l={ell}, component of j={verts[0]}"
        levels = _assign_levels(verts, adj, depth, context)
        out.append(
            VolcanoComponent(
                ell=ell,
                p=p,
                vertices=tuple(verts),
                adjacency=adj,
                level_of=levels,
                depth=depth,
                contains_special_j=any(j in special for j in verts),
            )
        )
    return out


def build_component(seed: int, ell: int, summary: IsogenyClassSummary) -> VolcanoComponent:
    if seed not in summary.j_set:
        raise ValueError(f"j = {seed} is not in the class I({summary.t},{summary.p})")
    for comp in components(summary, ell):
        if seed in comp.level_of:
            return comp
    raise AssertionError("unreachable: component partition must cover the class")


def _valuation(n: int, ell: int) -> int:
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def classify_rings(summary: IsogenyClassSummary) -> dict[int, int]:
    """Conductor of End for every j in the class, from volcano levels.

    v_l(f) comes from the l-volcano for each prime l | v; the conductor is the
    product of the prime powers.  Fills summary.ring_of.
    """
    v = summary.decomposition.v
    conductor = {j: 1 for j in summary.j_set}
    for ell in sorted(_factorize(v)):
        for comp in components(summary, ell):
            for j, level in comp.level_of.items():
                conductor[j] *= ell**level
    if any(v % f for f in conductor.values()):
        raise VerificationError(
            f"classified conductor does not divide v = {v} in I({summary.t},{summary.p})"
        )
    summary.ring_of = conductor
    return conductor


def classify_census(result, strict: bool = True) -> list[int]:
    """Fill ring_of for every class of a census result.

    With strict=False, classes needing a modular polynomial beyond the
    embedded levels are left unclassified and their traces returned (first
    possible at p = 631, where v = 29 occurs).
    """
    skipped = []
    for t in sorted(result.classes):
        try:
            classify_rings(result.classes[t])
        except UnsupportedLevelError:
            if strict:
                raise
            skipped.append(t)
    return skipped


@dataclass
class StructureReport:
    """Structure-theorem checks for one component."""

    p: int
    t: int
    ell: int
    surface_j: int
    depth: int
    level_sizes: tuple[int, ...]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_structure(component: VolcanoComponent, summary: IsogenyClassSummary) -> StructureReport:
    """Check the volcano structure theorem on a component without special j.

    Surface vertices carry 1 + (D_K|l) horizontal and, when the volcano has
    positive depth, l - (D_K|l) descending edges; deeper vertices have a
    unique ascending edge, no horizontal ones, and l descending edges above
    the floor; the floor has no descending edges.
    """
    if component.contains_special_j:
        raise ValueError("structure assertions require a component without j = 0 or 1728")
    ell = component.ell
    d = component.depth
    sym = kronecker(summary.decomposition.fundamental, ell)
    violations: list[str] = []
    for u in component.vertices:
        i = component.level_of[u]
        asc = horiz = desc = 0
        for w, mult in component.adjacency[u].items():
            delta = component.level_of[w] - i
            if delta == -1:
                asc += mult
            elif delta == 0:
                horiz += mult
            elif delta == 1:
                desc += mult
            else:
                violations.append(f"j={u}: edge skips levels ({i} -> {component.level_of[w]})")
        if i == 0:
            want_h = 1 + sym
            want_d = ell - sym if d > 0 else 0
            if (asc, horiz, desc) != (0, want_h, want_d):
                violations.append(
                    f"j={u} (surface): edges asc/horiz/desc = {(asc, horiz, desc)}, "
                    f"want (0, {want_h}, {want_d})"
                )
        else:
            want_d = ell if i < d else 0
            if (asc, horiz, desc) != (1, 0, want_d):
                violations.append(
                    f"j={u} (level {i}): edges asc/horiz/desc = {(asc, horiz, desc)}, "
                    f"want (1, 0, {want_d})"
                )
        if i < d and component.degree(u) != ell + 1:
            violations.append(f"j={u} (level {i}): degree {component.degree(u)} != {ell + 1}")
    sizes = component.level_sizes()
    if d > 0:
        if sizes[1] != (ell - sym) * sizes[0]:
            violations.append(f"level sizes {sizes}: |V_1| != (l - (D_K|l)) |V_0|")
        for i in range(1, d):
            if sizes[i + 1] != ell * sizes[i]:
                violations.append(f"level sizes {sizes}: |V_{i+1}| != l |V_{i}|")
    return StructureReport(
        p=summary.p,
        t=summary.t,
        ell=ell,
        surface_j=min(u for u in component.vertices if component.level_of[u] == 0),
        depth=d,
        level_sizes=sizes,
        violations=tuple(violations),
    )


def to_dot(component: VolcanoComponent, summary: IsogenyClassSummary) -> str:
    """DOT digraph with conductor labels and edge types."""
    if summary.ring_of is None:
        classify_rings(summary)
    lines = [f'digraph "I({summary.t},{summary.p})_l{component.ell}" {{']
    for u in component.vertices:
        lines.append(f'  "{u}" [label="j={u}/f={summary.ring_of[u]}"];')
    for u in component.vertices:
        for w in sorted(component.adjacency[u]):
            mult = component.adjacency[u][w]
            delta = component.level_of[w] - component.level_of[u]
            kind = "horizontal" if delta == 0 else ("descending" if delta == 1 else "ascending")
            for _ in range(mult):
                lines.append(f'  "{u}" -> "{w}" [type="{kind}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
