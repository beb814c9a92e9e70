"""Linear-time bottom-up computations on cotrees.

For a cograph given by its cotree, the minimum separating-set size can be
computed by a single fold: every step combines two summaries (value plus two
boolean properties of the child's minimum separating sets) in O(1).  The
properties are

  emp:  every minimum separating set leaves a vertex with empty signature;
  univ: every minimum separating set has a vertex dominated by the whole set
        (for the "ld" flavor that vertex must lie outside the set).

The closed-form combination rules are table-driven below, one entry per
flavor and node kind, so that the two-leaf special cases stay isolated: the
"id" flavor needs univ(single ⊕ single) = True and the "old" flavor needs
emp(single ⋈ single) = True, both forced by the literal definitions and
cross-checked exhaustively against the subset-enumeration oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import OpenTwinsPresent, TwinsPresent, all_min_sets, min_set
from .graph import Graph, Disconnected
from .models import (
    Cotree,
    CotreeNode,
    JOIN,
    Leaf,
    UNION,
    all_cotrees,
    cotree_to_graph,
    validate_cotree,
)
from .verify import ProblemKind

__all__ = [
    "CographSummary",
    "NotValidated",
    "NoOldSolution",
    "WitnessUnavailable",
    "sep_id_dp",
    "sep_ld_dp",
    "sep_old_dp",
    "gamma_id_cograph",
    "gamma_ld_cograph",
    "gamma_old_cograph",
    "dim_cograph",
    "enable_old_dp",
    "witness_cograph",
    "graph_has_isolated_vertex",
]


class NotValidated(Exception):
    """The open-locating recurrence was used before its validation gate ran."""


class NoOldSolution(Exception):
    """The graph has a vertex of degree 0, so no total dominating set exists."""


class WitnessUnavailable(Exception):
    """No verified witness could be produced for this cotree."""


@dataclass(frozen=True)
class CographSummary:
    """Separating-set size and property flags for one cograph."""

    k: int
    emp: bool
    univ: bool
    n: int


# -- flag rule tables ---------------------------------------------------------
#
# Internal state per subtree: (k, emp, univ, n, special, isolated) where
# `special` marks subtrees containing a universal vertex and `isolated` ones
# containing a vertex of degree 0; both exist only to drive the twin gates.
# All rules treat a 1-vertex subtree (n == 1) specially exactly where the
# definitions demand it.


def _id_union(a, b):
    k = a[0] + b[0] + (1 if a[1] and b[1] else 0)
    emp = a[1] or b[1]
    if a[3] == 1 and b[3] == 1:
        univ = True  # two isolated vertices: each singleton set covers itself
    elif a[3] == 1:
        univ = b[2] and not b[1]
    elif b[3] == 1:
        univ = a[2] and not a[1]
    else:
        univ = False
    return k, emp, univ


def _id_join(a, b):
    k = a[0] + b[0] + (1 if a[2] and b[2] else 0)
    univ = a[2] or b[2]
    if a[3] == 1:
        emp = b[1] and not b[2]
    elif b[3] == 1:
        emp = a[1] and not a[2]
    else:
        emp = False
    return k, emp, univ


def _ld_union(a, b):
    k = a[0] + b[0] + (1 if a[1] and b[1] else 0)
    emp = a[1] or b[1]
    if a[3] == 1:
        univ = b[2] and not b[1]
    elif b[3] == 1:
        univ = a[2] and not a[1]
    else:
        univ = False
    return k, emp, univ


def _ld_join(a, b):
    k = a[0] + b[0] + (1 if a[2] and b[2] else 0)
    univ = a[2] or b[2]
    if a[3] == 1:
        emp = b[1] and not b[2]
    elif b[3] == 1:
        emp = a[1] and not a[2]
    else:
        emp = False
    return k, emp, univ


def _old_union(a, b):
    k = a[0] + b[0] + (1 if a[1] and b[1] else 0)
    emp = a[1] or b[1]
    if a[3] == 1:
        univ = b[2] and not b[1]
    elif b[3] == 1:
        univ = a[2] and not a[1]
    else:
        univ = False
    return k, emp, univ


def _old_join(a, b):
    k = a[0] + b[0] + (1 if a[2] and b[2] else 0)
    univ = a[2] or b[2]
    if a[3] == 1 and b[3] == 1:
        emp = True  # adjacent pair: each singleton set misses its own vertex
    elif a[3] == 1:
        emp = b[1] and not b[2]
    elif b[3] == 1:
        emp = a[1] and not a[2]
    else:
        emp = False
    return k, emp, univ


_STEPS = {
    ("id", UNION): _id_union,
    ("id", JOIN): _id_join,
    ("ld", UNION): _ld_union,
    ("ld", JOIN): _ld_join,
    ("old", UNION): _old_union,
    ("old", JOIN): _old_join,
}


def _fold(t: Cotree, flavor: str) -> tuple[int, bool, bool, int, bool, bool]:
    """Iterative post-order fold; n-ary nodes are combined left to right.

    Raises TwinsPresent / OpenTwinsPresent as soon as a join (union) step
    would merge two parts that both contain a universal (isolated) vertex,
    which is exactly when the compiled graph has closed (open) twins.
    """
    validate_cotree(t)
    union_step = _STEPS[(flavor, UNION)]
    join_step = _STEPS[(flavor, JOIN)]
    check_closed = flavor == "id"
    check_open = flavor == "old"

    done: dict[int, tuple[int, bool, bool, int, bool, bool]] = {}
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Leaf):
            done[id(node)] = (0, True, True, 1, True, True)
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children)
            continue
        step = union_step if node.kind == UNION else join_step
        acc = done[id(node.children[0])]
        for child in node.children[1:]:
            b = done[id(child)]
            if node.kind == JOIN:
                if check_closed and acc[4] and b[4]:
                    raise TwinsPresent("cotree joins two parts with universal vertices")
                special = acc[4] or b[4]
                isolated = False
            else:
                if check_open and acc[5] and b[5]:
                    raise OpenTwinsPresent("cotree unites two parts with isolated vertices")
                special = False
                isolated = acc[5] or b[5]
            k, emp, univ = step(acc, b)
            acc = (k, emp, univ, acc[3] + b[3], special, isolated)
        done[id(node)] = acc
    return done[id(t)]


def sep_id_dp(t: Cotree) -> CographSummary:
    """Minimum closed-signature separating-set size of a twin-free cograph."""
    k, emp, univ, n, _, _ = _fold(t, "id")
    return CographSummary(k, emp, univ, n)


def sep_ld_dp(t: Cotree) -> CographSummary:
    """Minimum size of a set separating the vertices outside it (any cograph)."""
    k, emp, univ, n, _, _ = _fold(t, "ld")
    return CographSummary(k, emp, univ, n)


def gamma_id_cograph(t: Cotree) -> int:
    """Minimum identifying-code size: the separating value, plus one repair
    vertex exactly when every minimum separating set leaves a hole."""
    s = sep_id_dp(t)
    return s.k + (1 if s.emp else 0)


def gamma_ld_cograph(t: Cotree) -> int:
    """Minimum locating-dominating set size via the same repair rule."""
    s = sep_ld_dp(t)
    return s.k + (1 if s.emp else 0)


def dim_cograph(t: Cotree) -> int:
    """Metric dimension of a connected cograph.

    Connected cographs have diameter at most 2, where resolving sets and
    separating sets coincide, so this is the plain separating value.
    """
    if isinstance(t, CotreeNode) and t.kind != JOIN:
        raise Disconnected("cotree root is a union: graph is disconnected")
    return sep_ld_dp(t).k


def graph_has_isolated_vertex(t: Cotree) -> bool:
    """True when the compiled graph has a vertex with no neighbours.

    In a canonical cotree an isolated vertex is exactly a leaf hanging
    directly under a union root (joins give every vertex a neighbour).
    """
    if isinstance(t, Leaf):
        return True
    if t.kind == JOIN:
        return False
    return any(isinstance(c, Leaf) for c in t.children)


# -- open flavor: validation gate ---------------------------------------------

_OLD_GATE_PASSED = False


def enable_old_dp(max_leaves: int = 9) -> None:
    """Run the open-flavor recurrence against the oracle before allowing it.

    Checks every open-twin-free cograph with up to `max_leaves` vertices:
    value and both flags must match the subset-enumeration oracle exactly.
    """
    global _OLD_GATE_PASSED
    if _OLD_GATE_PASSED:
        return
    from .exact import emp_univ_oracle

    for n in range(1, max_leaves + 1):
        for t in all_cotrees(n):
            g = cotree_to_graph(t)
            try:
                oracle = min_set(g, ProblemKind.SEP_OLD)
            except OpenTwinsPresent:
                continue
            k, emp, univ, _, _, _ = _fold(t, "old")
            o_emp, o_univ = emp_univ_oracle(g, "old")
            if (k, emp, univ) != (oracle.size, o_emp, o_univ):
                raise NotValidated(
                    f"open recurrence disagrees with oracle on n={n}: "
                    f"dp=({k},{emp},{univ}) oracle=({oracle.size},{o_emp},{o_univ})"
                )
    _OLD_GATE_PASSED = True


def sep_old_dp(t: Cotree) -> CographSummary:
    """Open-signature analog of sep_id_dp; gated behind enable_old_dp()."""
    if not _OLD_GATE_PASSED:
        raise NotValidated("call enable_old_dp() before using the open recurrence")
    k, emp, univ, n, _, _ = _fold(t, "old")
    return CographSummary(k, emp, univ, n)


def gamma_old_cograph(t: Cotree) -> int:
    """Minimum open locating-dominating set size of an open-twin-free cograph."""
    if graph_has_isolated_vertex(t):
        raise NoOldSolution("a degree-0 vertex cannot be totally dominated")
    s = sep_old_dp(t)
    return s.k + (1 if s.emp else 0)


# -- witness reconstruction ---------------------------------------------------


def _node_summaries(t: Cotree, flavor: str):
    """Recursive fold that keeps the per-node fold states for the witness pass."""
    step_u = _STEPS[(flavor, UNION)]
    step_j = _STEPS[(flavor, JOIN)]

    def rec(node: Cotree):
        if isinstance(node, Leaf):
            return (0, True, True, 1)
        states = [rec(c) for c in node.children]
        step = step_u if node.kind == UNION else step_j
        acc = states[0]
        for b in states[1:]:
            k, emp, univ = step(acc, b)
            acc = (k, emp, univ, acc[3] + b[3])
        return acc

    return rec


class _WitnessBuilder:
    """Bottom-up assembly of a canonical minimum separating set.

    The carried set always satisfies, on its node's induced subgraph:
    it separates, has the fold's size, dominates everything when emp is
    False, and has no vertex dominated by the whole set when univ is False.
    Where the constructive case analysis cannot satisfy these side
    conditions, the builder falls back to enumerating minimum sets of the
    induced subgraph and never returns an unverified set.
    """

    def __init__(self, g: Graph, flavor: str):
        self.g = g
        self.flavor = flavor
        self.step_u = _STEPS[(flavor, UNION)]
        self.step_j = _STEPS[(flavor, JOIN)]

    # Signatures restricted to the subtree's vertex set.
    def _sig(self, verts: frozenset[int], cand: frozenset[int], v: int) -> frozenset[int]:
        return (self.g.adj[v] & verts & cand) | ({v} if v in cand else frozenset())

    def _separates(self, verts: frozenset[int], cand: frozenset[int]) -> bool:
        seen = {}
        for v in sorted(verts):
            if self.flavor == "ld" and v in cand:
                continue
            key = self._sig(verts, cand, v)
            if key in seen:
                return False
            seen[key] = v
        return True

    def _empty_sig_vertices(self, verts: frozenset[int], cand: frozenset[int]) -> list[int]:
        return sorted(
            v for v in verts if v not in cand and not (self.g.adj[v] & cand & verts)
        )

    def _covered_vertices(self, verts: frozenset[int], cand: frozenset[int]) -> list[int]:
        out = []
        for v in sorted(verts):
            if self.flavor == "ld" and v in cand:
                continue
            closed = (self.g.adj[v] & verts) | {v}
            if cand <= closed:
                out.append(v)
        return out

    def _canonical(self, verts, cand, state) -> bool:
        k, emp, univ, _ = state
        if len(cand) != k or not self._separates(verts, cand):
            return False
        if not emp and self._empty_sig_vertices(verts, cand):
            return False
        if not univ and self._covered_vertices(verts, cand):
            return False
        return True

    def _oracle_fallback(self, verts, state) -> frozenset[int]:
        order = sorted(verts)
        index = {v: i for i, v in enumerate(order)}
        sub = Graph(
            len(order),
            [
                (index[u], index[v])
                for u in order
                for v in self.g.adj[u]
                if v in verts and u < v
            ],
        )
        kind = {"id": ProblemKind.SEP_ID, "ld": ProblemKind.SEP_LD}[self.flavor]
        for cand in all_min_sets(sub, kind):
            lifted = frozenset(order[i] for i in cand)
            if self._canonical(verts, lifted, state):
                return lifted
        raise WitnessUnavailable("no minimum separating set meets the side conditions")

    def build(self, node: Cotree) -> tuple[frozenset[int], tuple, frozenset[int]]:
        """Returns (vertices, fold state, witness) for the subtree."""
        if isinstance(node, Leaf):
            return frozenset([node.vertex]), (0, True, True, 1), frozenset()
        step = self.step_u if node.kind == UNION else self.step_j
        verts, state, cand = self.build(node.children[0])
        for child in node.children[1:]:
            bverts, bstate, bcand = self.build(child)
            nverts = verts | bverts
            nstate = step(state, bstate) + (state[3] + bstate[3],)
            base = cand | bcand
            bumped = nstate[0] == state[0] + bstate[0] + 1
            candidates = []
            if not bumped:
                candidates.append(base)
            elif node.kind == UNION:
                for u in self._empty_sig_vertices(nverts, base):
                    candidates.append(base | {u})
            else:
                colliders = self._covered_vertices(nverts, base)
                if self.flavor == "ld":
                    for u in colliders:
                        candidates.append(base | {u})
                else:
                    for w in sorted(nverts):
                        hits = sum(
                            1
                            for u in colliders
                            if w == u or (w in self.g.adj[u] and w in nverts)
                        )
                        if hits == 1:
                            candidates.append(base | {w})
            chosen = None
            for c in candidates:
                if self._canonical(nverts, c, nstate):
                    chosen = c
                    break
            if chosen is None:
                chosen = self._oracle_fallback(nverts, nstate)
            verts, state, cand = nverts, nstate, chosen
        return verts, state, cand


def witness_cograph(t: Cotree, kind: ProblemKind) -> frozenset[int]:
    """A verified minimum solution set assembled along the cotree.

    Supports IC and LD (separating witness plus the single repair vertex when
    needed), RS on connected cographs, and the raw SEP_ID / SEP_LD witnesses.
    """
    from . import verify

    flavor_kind = {
        ProblemKind.IC: ("id", True),
        ProblemKind.SEP_ID: ("id", False),
        ProblemKind.LD: ("ld", True),
        ProblemKind.SEP_LD: ("ld", False),
        ProblemKind.RS: ("ld", False),
    }
    if kind not in flavor_kind:
        raise ValueError(f"witness reconstruction does not support {kind}")
    flavor, repair = flavor_kind[kind]
    summary = sep_id_dp(t) if flavor == "id" else sep_ld_dp(t)
    if kind is ProblemKind.RS and isinstance(t, CotreeNode) and t.kind != JOIN:
        raise Disconnected("cotree root is a union: graph is disconnected")
    g = cotree_to_graph(t)
    builder = _WitnessBuilder(g, flavor)
    verts, state, cand = builder.build(t)
    if repair and summary.emp:
        holes = builder._empty_sig_vertices(verts, cand)
        if len(holes) != 1:
            raise WitnessUnavailable("expected exactly one undominated vertex")
        cand = cand | {holes[0]}
    if not verify.check(g, cand, kind):
        raise WitnessUnavailable(f"assembled set failed the {kind} verifier")
    expected = summary.k + (1 if repair and summary.emp else 0)
    if len(cand) != expected:
        raise WitnessUnavailable("assembled set has the wrong size")
    return cand
