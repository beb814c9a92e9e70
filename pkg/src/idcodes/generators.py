"""Extremal family generators.

Every generator returns an :class:`ExtremalInstance` and validates it on the
spot: the compiled graph has the claimed order, the claimed solution passes
the matching verifier, and when a diameter is claimed it is recomputed.
Generation therefore never hands out an unchecked construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import verify
from .cograph import sep_id_dp, sep_ld_dp, witness_cograph
from .graph import (
    Disconnected,
    Graph,
    bipartition,
    diameter as graph_diameter,
    is_connected,
)
from .models import (
    Cotree,
    CotreeNode,
    IntervalModel,
    JOIN,
    Leaf,
    PermutationModel,
    UNION,
    canonicalize,
    interval_graph,
    is_unit_model,
    model_to_graph,
    normalized_segments,
    permutation_graph,
)
from .verify import ProblemKind

__all__ = [
    "GeneratorError",
    "ExtremalInstance",
    "ext_interval_ic",
    "ext_interval_old",
    "ext_interval_ld",
    "ext_interval_md",
    "ext_unit_ic",
    "ext_unit_old",
    "ext_unit_ld",
    "ext_unit_md",
    "ext_perm_ic",
    "ext_perm_old",
    "ext_perm_ld",
    "ext_perm_md",
    "ext_bipperm_ic",
    "ext_bipperm_old",
    "ext_bipperm_ld",
    "ext_bipperm_md",
    "ext_cograph_id",
    "ext_cograph_ld",
    "FAMILIES",
    "generate",
]

Model = Union[Graph, IntervalModel, PermutationModel, Leaf, CotreeNode]


class GeneratorError(Exception):
    pass


@dataclass(frozen=True)
class ExtremalInstance:
    """A constructed model together with its claimed solution and parameters."""

    model: Model
    solution: frozenset[int]
    kind: ProblemKind
    claimed_n: int
    claimed_k: int
    family: str
    claimed_d: Optional[int] = None
    graph: Optional[Graph] = field(compare=False, default=None)  # set by _validated

    def manifest_line(self) -> str:
        d = str(self.claimed_d) if self.claimed_d is not None else "-"
        sol = ",".join(str(v) for v in sorted(self.solution))
        return (
            f"{self.family} {self.kind.value} {self.claimed_k} {d} "
            f"{self.claimed_n} solution={sol}"
        )


def _validated(
    model: Model,
    solution,
    kind: ProblemKind,
    claimed_n: int,
    claimed_k: int,
    family: str,
    claimed_d: Optional[int] = None,
) -> ExtremalInstance:
    g = model_to_graph(model)
    solution = frozenset(solution)
    if g.n != claimed_n:
        raise GeneratorError(f"{family}: built {g.n} vertices, claimed {claimed_n}")
    if len(solution) != claimed_k:
        raise GeneratorError(f"{family}: solution size {len(solution)} != {claimed_k}")
    if not verify.check(g, solution, kind):
        raise GeneratorError(f"{family}: claimed solution fails the {kind} verifier")
    if claimed_d is not None:
        d = graph_diameter(g)
        if d != claimed_d:
            raise GeneratorError(f"{family}: diameter {d} != claimed {claimed_d}")
    return ExtremalInstance(
        model, solution, kind, claimed_n, claimed_k, family, claimed_d, g
    )


# -- interval families --------------------------------------------------------


def _interval_staircase(k: int) -> tuple[list[tuple[Fraction, Fraction]], list[int]]:
    """All intervals ]i,j[ with 1 <= i < j <= k+1; returns model rows and the
    indices of the unit steps ]i,i+1[."""
    rows = []
    code = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 2):
            if j == i + 1:
                code.append(len(rows))
            rows.append((Fraction(i), Fraction(j)))
    return rows, code


def ext_interval_ic(k: int) -> ExtremalInstance:
    """Interval graph on k(k+1)/2 vertices with an identifying code of size k."""
    if k < 1:
        raise GeneratorError("k must be at least 1")
    rows, code = _interval_staircase(k)
    model = IntervalModel(rows)
    return _validated(
        model, code, ProblemKind.IC, k * (k + 1) // 2, k, "interval-ic"
    )


def ext_interval_old(k: int) -> ExtremalInstance:
    """Same order as ext_interval_ic with an open locating-dominating set.

    Consecutive solution steps are paired up so that each has a solution
    neighbour.  Each pair boundary point 2p is widened into a gap
    ]2p, 2p+1/2[ that no other family interval enters, and the two steps of
    the pair are extended into that gap to overlap there; every other
    intersection of the family is unchanged.
    """
    if k < 2 or k % 2:
        raise GeneratorError("k must be even and at least 2")
    pair_points = {2 * p for p in range(1, k // 2 + 1) if 2 * p <= k}
    half = Fraction(1, 2)

    def start(m: int) -> Fraction:
        return Fraction(m) + (half if m in pair_points else 0)

    rows: list[tuple[Fraction, Fraction]] = []
    code: list[int] = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 2):
            if j == i + 1:
                code.append(len(rows))
                if i % 2 == 1:  # first of its pair: reach into the gap at i+1
                    rows.append((start(i), Fraction(i + 1) + Fraction(3, 8)))
                else:  # second of its pair: start inside the gap at i
                    rows.append((Fraction(i) + Fraction(1, 8), Fraction(j)))
            else:
                rows.append((start(i), Fraction(j)))
    model = IntervalModel(rows)
    return _validated(
        model, code, ProblemKind.OLD, k * (k + 1) // 2, k, "interval-old"
    )


def ext_interval_ld(k: int) -> ExtremalInstance:
    """Interval graph on k(k+3)/2 vertices: the staircase plus one copy of
    each solution interval."""
    if k < 1:
        raise GeneratorError("k must be at least 1")
    rows, code = _interval_staircase(k)
    rows.extend(rows[idx] for idx in code)
    model = IntervalModel(rows)
    return _validated(
        model, code, ProblemKind.LD, k * (k + 3) // 2, k, "interval-ld"
    )


def _interval_md_rows(k: int, cols: int) -> list[list[tuple[Fraction, Fraction]]]:
    """Braided rows I[i][j] = ](j-1)L+i, jL+1/2+i[ with L = k/2+1."""
    half_k = k // 2
    big_l = half_k + 1
    half = Fraction(1, 2)
    return [
        [
            (Fraction((j - 1) * big_l + i), Fraction(j * big_l) + half + i)
            for j in range(1, cols + 1)
        ]
        for i in range(1, half_k + 1)
    ]


def _build_interval_md(k: int, cols: int) -> tuple[IntervalModel, list[int], int]:
    """Interval braid with filler pockets; returns (model, solution, n)."""
    half_k = k // 2
    grid = _interval_md_rows(k, cols)
    rows: list[tuple[Fraction, Fraction]] = []
    index = {}
    for i in range(half_k):
        for j in range(cols):
            index[(i, j)] = len(rows)
            rows.append(grid[i][j])
    solution = [index[(i, 0)] for i in range(half_k)] + [
        index[(i, cols - 1)] for i in range(half_k)
    ]
    base_sorted = sorted(range(len(rows)), key=lambda v: rows[v][0])
    fillers: list[tuple[Fraction, Fraction]] = []
    for i in range(half_k):
        for j in range(2, cols - 1):  # pockets after I[i][j], 1-based j
            r_end = grid[i][j - 1][1]
            following = [v for v in base_sorted if rows[v][0] > r_end]
            if len(following) < half_k + 1:
                continue  # incomplete pocket: skip rather than trim
            succ = following[: half_k + 1]
            window_lo, window_hi = r_end, rows[succ[0]][0]
            start = (window_lo + window_hi) / 2
            ends = [(start + window_hi) / 2]
            ends.extend(
                (rows[succ[s - 1]][0] + rows[succ[s]][0]) / 2
                for s in range(1, half_k + 1)
            )
            fillers.extend((start, e) for e in ends)
    model = IntervalModel(rows + fillers)
    return model, solution, len(rows) + len(fillers)


def ext_interval_md(k: int, d: int) -> ExtremalInstance:
    """Interval graph of diameter d with a resolving set of size k.

    Order grows like d*k^2: k/2 braided rows of d intervals plus k/2+1 short
    fillers behind every interior interval that has enough successors.
    """
    if k < 2 or k % 2:
        raise GeneratorError("k must be even and at least 2")
    if d < 2:
        raise GeneratorError("d must be at least 2")
    if k == 2:
        # A single row is a plain path; use d+1 intervals so the diameter is d.
        rows = [(Fraction(3 * m, 4), Fraction(3 * m, 4) + 1) for m in range(d + 1)]
        model = IntervalModel(rows)
        return _validated(
            model, [0, d], ProblemKind.RS, d + 1, 2, "interval-md", claimed_d=d
        )
    for cols in (d, d - 1, d + 1):
        if cols < 2:
            continue
        model, solution, n = _build_interval_md(k, cols)
        g = interval_graph(model)
        if graph_diameter(g) == d:
            return _validated(
                model, solution, ProblemKind.RS, n, k, "interval-md", claimed_d=d
            )
    raise GeneratorError(f"interval-md: no braid width gives diameter {d} for k={k}")


# -- unit interval families ---------------------------------------------------


def _unit_path(n: int, step: Fraction) -> list[tuple[Fraction, Fraction]]:
    return [(step * m, step * m + 1) for m in range(n)]


def ext_unit_ic(k: int) -> ExtremalInstance:
    """Path on 2k-1 unit intervals; every other interval forms the code."""
    if k < 1:
        raise GeneratorError("k must be at least 1")
    model = IntervalModel(_unit_path(2 * k - 1, Fraction(1, 2)))
    code = list(range(0, 2 * k - 1, 2))
    inst = _validated(model, code, ProblemKind.IC, 2 * k - 1, k, "unit-ic")
    assert is_unit_model(model)
    return inst


def ext_unit_old(k: int) -> ExtremalInstance:
    """Path on 3k-1 unit intervals plus k pendant intervals, solution 2k.

    Pendant i must meet exactly path intervals 3i and 3i+1 (0-based), which
    forces uneven spacing: consecutive starts differ by 1/4 inside a solution
    pair and by 3/4 elsewhere.
    """
    if k < 1:
        raise GeneratorError("k must be at least 1")
    starts: list[Fraction] = []
    pos = Fraction(0)
    for m in range(3 * k - 1):
        starts.append(pos)
        pos += Fraction(3, 4)
    rows = [(s, s + 1) for s in starts]
    solution = [m for m in range(3 * k - 1) if m % 3 != 2]
    for i in range(k):
        q = starts[3 * i] + Fraction(1, 4)
        rows.append((q, q + 1))
    model = IntervalModel(rows)
    inst = _validated(model, solution, ProblemKind.OLD, 4 * k - 1, 2 * k, "unit-old")
    assert is_unit_model(model)
    return inst


def ext_unit_ld(k: int) -> ExtremalInstance:
    """Path on 2k-1 unit intervals plus a copy of each code interval."""
    if k < 1:
        raise GeneratorError("k must be at least 1")
    rows = _unit_path(2 * k - 1, Fraction(1, 2))
    code = list(range(0, 2 * k - 1, 2))
    rows.extend(rows[idx] for idx in code)
    model = IntervalModel(rows)
    inst = _validated(model, code, ProblemKind.LD, 3 * k - 1, k, "unit-ld")
    assert is_unit_model(model)
    return inst


def ext_unit_md(k: int, d: int) -> ExtremalInstance:
    """k-th power of a path on k*d+1 vertices: diameter d, resolving set of
    the first k vertices.  Interval m is ]m/(k+1), m/(k+1)+1[, making two
    vertices adjacent exactly when their indices differ by at most k."""
    if k < 1 or d < 1:
        raise GeneratorError("k and d must be at least 1")
    step = Fraction(1, k + 1)
    model = IntervalModel(_unit_path(k * d + 1, step))
    inst = _validated(
        model, range(k), ProblemKind.RS, k * d + 1, k, "unit-md", claimed_d=d
    )
    assert is_unit_model(model)
    return inst


# -- permutation families -----------------------------------------------------


def _zigzag_path_segments(k: int) -> list[tuple[int, int]]:
    """Permutation segments inducing the path u_0 - u_1 - ... - u_{k-1}."""
    segs = []
    for j in range(k):
        if j % 2 == 0:
            segs.append((3 * j, 3 * j - 4))
        else:
            segs.append((3 * j - 4, 3 * j))
    return segs


def _config_based_family(k: int, kind: ProblemKind, family: str) -> ExtremalInstance:
    """One non-solution segment per realizable top-gap/bottom-gap cell.

    The solution induces a path.  A cell (i, j) stands for a segment whose
    top lies in the i-th gap of the solution's top order and bottom in the
    j-th gap of the bottom order; its neighbourhood within the solution is
    determined by the cell alone.  Cells are grouped by that neighbourhood
    and one representative per admissible group is realized.
    """
    if k < 3:
        raise GeneratorError("k must be at least 3")
    code = _zigzag_path_segments(k)
    tops = sorted(t for t, _ in code)
    bots = sorted(b for _, b in code)
    trank = {t: r for r, t in enumerate(tops)}  # rank 0..k-1
    brank = {b: r for r, b in enumerate(bots)}

    def cell_nbhd(i: int, j: int) -> frozenset[int]:
        # Solution member x crosses cell (i, j) iff exactly one of its ranks
        # is passed: top rank <= i-1 ... encoded with gap semantics below.
        out = []
        for idx, (t, b) in enumerate(code):
            top_passed = trank[t] < i  # cell top lies right of x's top
            bot_passed = brank[b] < j
            if top_passed != bot_passed:
                out.append(idx)
        return frozenset(out)

    open_sigs = []
    closed_sigs = []
    gph = permutation_graph(PermutationModel(normalized_segments(code).segments))
    for v in range(k):
        open_sigs.append(frozenset(gph.adj[v]))
        closed_sigs.append(frozenset(gph.adj[v]) | {v})

    groups: dict[frozenset[int], tuple[int, int]] = {}
    for i in range(k + 1):
        for j in range(k + 1):
            sig = cell_nbhd(i, j)
            if sig not in groups:
                groups[sig] = (i, j)

    banned: set[frozenset[int]] = {frozenset()}
    if kind is ProblemKind.IC:
        banned.update(closed_sigs)
    elif kind is ProblemKind.OLD:
        banned.update(open_sigs)
    cells = sorted(cell for sig, cell in groups.items() if sig not in banned)

    # Realize one segment per kept cell: place tops/bottoms inside their gaps.
    positions: list[tuple[Fraction, Fraction]] = [
        (Fraction(t), Fraction(b)) for t, b in code
    ]
    per_top_gap: dict[int, int] = {}
    per_bot_gap: dict[int, int] = {}
    for i, j in cells:
        per_top_gap[i] = per_top_gap.get(i, 0) + 1
        per_bot_gap[j] = per_bot_gap.get(j, 0) + 1
    top_seen: dict[int, int] = {}
    bot_seen: dict[int, int] = {}

    def gap_position(ranks: list[int], gap: int, seq: int, total: int) -> Fraction:
        lo = Fraction(ranks[gap - 1]) if gap > 0 else Fraction(ranks[0] - 2)
        hi = Fraction(ranks[gap]) if gap < len(ranks) else Fraction(ranks[-1] + 2)
        return lo + (hi - lo) * Fraction(seq + 1, total + 1)

    for i, j in cells:
        si = top_seen[i] = top_seen.get(i, -1) + 1
        sj = bot_seen[j] = bot_seen.get(j, -1) + 1
        positions.append(
            (
                gap_position(tops, i, si, per_top_gap[i]),
                gap_position(bots, j, sj, per_bot_gap[j]),
            )
        )

    model = normalized_segments(positions)
    n = k + len(cells)
    expected = k * k + k - 2 if kind is ProblemKind.LD else k * k - 2
    if n != expected:
        raise GeneratorError(f"{family}: built n={n}, expected {expected}")
    return _validated(model, range(k), kind, n, k, family)


def ext_perm_ic(k: int) -> ExtremalInstance:
    """Permutation graph on k^2-2 vertices with an identifying code of size k."""
    return _config_based_family(k, ProblemKind.IC, "perm-ic")


def ext_perm_old(k: int) -> ExtremalInstance:
    """Permutation graph on k^2-2 vertices with an OLD set of size k."""
    if k % 2:
        raise GeneratorError("k must be even")
    return _config_based_family(k, ProblemKind.OLD, "perm-old")


def ext_perm_ld(k: int) -> ExtremalInstance:
    """Permutation graph on k^2+k-2 vertices with an LD set of size k."""
    return _config_based_family(k, ProblemKind.LD, "perm-ld")


# -- braided paths (permutation diagrams) --------------------------------------


def _braid_positions(k: int, cols: int) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
    """Segment positions for k/2 translated paths with `cols` vertices each.

    Vertex (a, j): path a in 1..k/2, position j in 1..cols.  Odd positions
    slope upward, even ones downward; (a, j) meets (a', j+1) iff a' <= a.
    """
    half_k = k // 2
    big_c = max(k, 4)
    v_off = big_c - 1
    half = Fraction(1, 2)
    out = {}
    for a in range(1, half_k + 1):
        for j in range(1, cols + 1):
            if j % 2 == 1:
                p = Fraction(big_c * ((j - 1) // 2) + 2 * (a - 1))
                out[(a, j)] = (p, p - 1)
            else:
                q = Fraction(big_c * ((j - 2) // 2) + 2 * (a - 1))
                out[(a, j)] = (q - 1, q + v_off + half)
    return out


def _build_perm_md(k: int, cols: int, with_fillers: bool):
    """Braid plus (optionally) up to k/2+2 pocket segments per consecutive
    pair (a, 2j), (a, 2j+1); returns (model, solution indices, n).

    A pocket's segments put their bottoms in the empty window between the
    pair's bottom points; their tops sweep the gaps between consecutive
    braid tops starting at the top of the preceding path vertex (a, 2j-1),
    each gap giving a different crossing pattern.  A candidate is kept only
    when (a) its neighbours are pairwise within distance 2, so no existing
    shortest path changes, and (b) its distance vector to the solution is
    new; this keeps the whole instance resolving by construction.
    """
    half_k = k // 2
    pos = _braid_positions(k, cols)
    order = [(a, j) for a in range(1, half_k + 1) for j in range(1, cols + 1)]
    index = {v: i for i, v in enumerate(order)}
    positions = [pos[v] for v in order]
    solution = [index[(a, 1)] for a in range(1, half_k + 1)] + [
        index[(a, cols)] for a in range(1, half_k + 1)
    ]
    if not with_fillers:
        return normalized_segments(positions), solution, len(positions)

    from .graph import all_pairs_distances
    from .models import permutation_graph as _pgraph

    base_graph = _pgraph(normalized_segments(positions))
    dist = all_pairs_distances(base_graph)
    adj = [set(base_graph.adj[v]) for v in range(base_graph.n)]
    vectors = {tuple(dist[x][v] for x in solution) for v in range(base_graph.n)}
    vec_of = [tuple(dist[x][v] for x in solution) for v in range(base_graph.n)]

    def crosses(p1, p2) -> bool:
        return (p1[0] - p2[0]) * (p1[1] - p2[1]) < 0

    def within_two(u: int, w: int) -> bool:
        return u == w or w in adj[u] or bool(adj[u] & adj[w])

    all_tops = sorted(t for t, _ in positions)
    target = half_k + 2
    pockets = [
        (a, j) for a in range(1, half_k + 1) for j in range(1, (cols - 1) // 2 + 1)
    ]
    for p_rank, (a, j) in enumerate(pockets):
        down_b = pos[(a, 2 * j)][1]
        up_b = pos[(a, 2 * j + 1)][1]
        lo, hi = min(down_b, up_b), max(down_b, up_b)
        anchor = pos[(a, 2 * j - 1)][0]
        start = all_tops.index(anchor)
        seq = all_tops[start:] + [all_tops[-1] + 2]
        frac = Fraction(p_rank + 1, len(pockets) + 1)
        accepted = 0
        for s in range(len(seq) - 1):
            if accepted == target:
                break
            t_f = seq[s] + (seq[s + 1] - seq[s]) * frac
            b_f = lo + (hi - lo) * Fraction(accepted + 1, target + 1)
            cand = (t_f, b_f)
            nbrs = [w for w, p in enumerate(positions) if crosses(cand, p)]
            if not nbrs:
                continue
            if any(
                not within_two(u, w) for i, u in enumerate(nbrs) for w in nbrs[i + 1 :]
            ):
                continue
            vec = tuple(
                1 + min(vec_of[w][xi] for w in nbrs) for xi in range(len(solution))
            )
            if vec in vectors:
                continue
            new_id = len(positions)
            positions.append(cand)
            adj.append(set(nbrs))
            for w in nbrs:
                adj[w].add(new_id)
            vectors.add(vec)
            vec_of.append(vec)
            accepted += 1
    return normalized_segments(positions), solution, len(positions)


def _cocktail_party_model(pairs: int) -> tuple[PermutationModel, list[int]]:
    """Join of `pairs` two-vertex independent sets; one vertex per pair resolves."""
    positions = []
    for i in range(pairs):
        rev = pairs - 1 - i
        positions.append((Fraction(2 * i), Fraction(2 * rev)))
        positions.append((Fraction(2 * i + 1), Fraction(2 * rev + 1)))
    return normalized_segments(positions), list(range(0, 2 * pairs, 2))


def ext_perm_md(k: int, d: int) -> ExtremalInstance:
    """Permutation graph of diameter d, resolving set of size k, order ~ d*k^2."""
    if k < 2 or k % 2:
        raise GeneratorError("k must be even and at least 2")
    if d < 2:
        raise GeneratorError("d must be at least 2")
    if d == 2 and k >= 4:
        # No braid width reaches diameter 2; use the join of k point pairs.
        model, solution = _cocktail_party_model(k)
        return _validated(
            model, solution, ProblemKind.RS, 2 * k, k, "perm-md", claimed_d=2
        )
    last_err = None
    for cols in (d, d - 1, d + 1, d - 2):
        if cols < 2:
            continue
        model, solution, n = _build_perm_md(k, cols, with_fillers=True)
        g = permutation_graph(model)
        try:
            if graph_diameter(g) == d and verify.is_resolving_set(g, solution):
                return _validated(
                    model, solution, ProblemKind.RS, n, k, "perm-md", claimed_d=d
                )
        except Disconnected as exc:  # skip widths that fall apart
            last_err = exc
    raise GeneratorError(f"perm-md: no braid width works for k={k}, d={d} ({last_err})")


def ext_bipperm_md(k: int, d: int) -> ExtremalInstance:
    """Bipartite permutation graph of diameter d with a resolving set of size
    k: the plain braid, whose width is tuned so the diameter comes out exact."""
    if k < 2 or k % 2:
        raise GeneratorError("k must be even and at least 2")
    if d < 2:
        raise GeneratorError("d must be at least 2")
    if d == 2 and k >= 4:
        # A diameter-2 bipartite graph is complete bipartite; drop one vertex
        # per side from the solution.
        side = (k + 2) // 2
        model = _bipperm_from_intervals(side, [(0, side - 1)] * side)
        solution = list(range(side - 1)) + list(range(side, 2 * side - 1))
        return _validated(
            model, solution, ProblemKind.RS, k + 2, k, "bipperm-md", claimed_d=2
        )
    for cols in (d, d - 1, d + 1, d + 2, d - 2):
        if cols < 2:
            continue
        model, solution, n = _build_perm_md(k, cols, with_fillers=False)
        g = permutation_graph(model)
        if not is_connected(g) or bipartition(g) is None:
            continue
        if graph_diameter(g) == d and verify.is_resolving_set(g, solution):
            return _validated(
                model, solution, ProblemKind.RS, n, k, "bipperm-md", claimed_d=d
            )
    raise GeneratorError(f"bipperm-md: no braid width works for k={k}, d={d}")


# -- bipartite permutation families (neighbourhood-based) ----------------------


def _bipperm_from_intervals(
    a_count: int, b_nbhds: list[tuple[int, int]]
) -> PermutationModel:
    """Diagram for a bipartite graph whose B-side neighbourhoods are intervals
    of consecutive A-positions.  Vertices: 0..a_count-1 are the A side in
    order, then one B vertex per (lo, hi) pair in sorted order."""
    order = sorted(range(len(b_nbhds)), key=lambda i: b_nbhds[i])
    his = [b_nbhds[i][1] for i in order]
    if any(his[i] > his[i + 1] for i in range(len(his) - 1)):
        raise GeneratorError("B-side neighbourhoods are nested; no diagram")
    positions: list[tuple[Fraction, Fraction]] = [
        (Fraction(i), Fraction(i)) for i in range(a_count)
    ]
    m = len(order)
    slots: list[tuple[Fraction, Fraction]] = [None] * m
    for rank, i in enumerate(order):
        lo, hi = b_nbhds[i]
        eps = Fraction(rank + 1, m + 1)
        slots[i] = (Fraction(hi) + eps, Fraction(lo) - 1 + eps)
    positions.extend(slots)
    return normalized_segments(positions)


def ext_bipperm_ld(k: int) -> ExtremalInstance:
    """Odd path with a pendant on every even vertex: order 3k-1, LD set k."""
    if k < 1:
        raise GeneratorError("k must be at least 1")
    # A side: the k even path vertices.  B side: odd path vertices + pendants.
    b_nbhds = [(m, m + 1) for m in range(k - 1)]  # odd spine vertices
    b_nbhds += [(m, m) for m in range(k)]  # pendants
    model = _bipperm_from_intervals(k, b_nbhds)
    solution = range(k)
    return _validated(model, solution, ProblemKind.LD, 3 * k - 1, k, "bipperm-ld")


def ext_bipperm_ic(k: int) -> ExtremalInstance:
    """Odd path plus one vertex per three consecutive even vertices: order
    3k-3, identifying code of size k."""
    if k < 3:
        raise GeneratorError("k must be at least 3")
    b_nbhds = [(m, m + 1) for m in range(k - 1)]  # odd spine vertices
    b_nbhds += [(m, m + 2) for m in range(k - 2)]  # triple vertices
    model = _bipperm_from_intervals(k, b_nbhds)
    solution = range(k)
    return _validated(model, solution, ProblemKind.IC, 3 * k - 3, k, "bipperm-ic")


def ext_bipperm_old(k: int) -> ExtremalInstance:
    """Path on k vertices, all of them in the solution, with pendants attached
    to every vertex except the second and the second-to-last: order 2k-2.

    Requires k >= 4: an exhaustive check over the 4-vertex bipartite graphs
    shows none admits an open locating-dominating set of size 3, so no
    instance with n = 2k-2 exists at k = 3.
    """
    if k < 4:
        raise GeneratorError("k must be at least 4")
    pendant_hosts = [v for v in range(k) if v not in (1, k - 2)]
    # A side: even path vertices and pendants of odd ones; order them along
    # the spine so B-side neighbourhoods stay consecutive.
    a_order: list[tuple[str, int]] = []
    for v in range(0, k, 2):
        if v - 1 in pendant_hosts and v - 1 >= 0:
            a_order.append(("pendant", v - 1))
        a_order.append(("spine", v))
    if k % 2 == 0 and k - 1 in pendant_hosts:
        a_order.append(("pendant", k - 1))
    a_pos = {tag: i for i, tag in enumerate(a_order)}
    b_order: list[tuple[str, int]] = [("spine", v) for v in range(1, k, 2)]
    b_order += [("pendant", v) for v in pendant_hosts if v % 2 == 0]
    b_nbhds = []
    for role, v in b_order:
        if role == "pendant":
            b_nbhds.append((a_pos[("spine", v)], a_pos[("spine", v)]))
        else:
            lo = a_pos[("spine", v - 1)]
            hi = a_pos[("spine", v + 1)] if v + 1 < k else lo
            if ("pendant", v) in a_pos:
                lo = min(lo, a_pos[("pendant", v)])
                hi = max(hi, a_pos[("pendant", v)])
            b_nbhds.append((lo, hi))
    model = _bipperm_from_intervals(len(a_order), b_nbhds)
    # Solution: the spine vertices, located in the combined numbering
    # (A side keeps its order, B vertex i becomes len(a_order) + i).
    spine = [i for i, (role, _) in enumerate(a_order) if role == "spine"]
    spine += [
        len(a_order) + i for i, (role, _) in enumerate(b_order) if role == "spine"
    ]
    return _validated(model, spine, ProblemKind.OLD, 2 * k - 2, k, "bipperm-old")


# -- cograph families ----------------------------------------------------------


def _shift(t: Cotree, offset: int) -> Cotree:
    if isinstance(t, Leaf):
        return Leaf(t.vertex + offset)
    return CotreeNode(t.kind, tuple(_shift(c, offset) for c in t.children))


def _compose(kind: str, left: Cotree, left_n: int, right: Cotree) -> Cotree:
    return canonicalize(CotreeNode(kind, (left, _shift(right, left_n))))


def _indep(n: int) -> Cotree:
    if n == 1:
        return Leaf(0)
    return CotreeNode(UNION, tuple(Leaf(v) for v in range(n)))


def _clique(n: int) -> Cotree:
    if n == 1:
        return Leaf(0)
    return CotreeNode(JOIN, tuple(Leaf(v) for v in range(n)))


def _cograph_id_tree(n: int, variant: int) -> Cotree:
    bases = {
        (3, 2): _indep(3),
        (3, 3): _compose(JOIN, Leaf(0), 1, _indep(2)),  # star = P3
        (4, 2): _indep(4),
        (4, 3): _compose(JOIN, _indep(2), 2, _indep(2)),  # C4
    }
    if (n, variant) in bases:
        return bases[(n, variant)]
    if variant == 1 and n >= 6:
        return _compose(JOIN, _indep(3), 3, _cograph_id_tree(n - 3, 2))
    if variant == 2 and n >= 5:
        return _compose(UNION, Leaf(0), 1, _cograph_id_tree(n - 1, 4))
    if variant == 3 and n >= 5:
        return _compose(JOIN, Leaf(0), 1, _cograph_id_tree(n - 1, 4))
    if variant == 4 and n >= 4:
        return _compose(UNION, Leaf(0), 1, _cograph_id_tree(n - 1, 3))
    raise GeneratorError(f"cograph-id: ({n}, variant {variant}) is unreachable")


_ID_CLAIMS = {1: lambda n: (n + 2 + 1) // 2, 2: lambda n: (n + 1 + 1) // 2,
              3: lambda n: (n + 1 + 1) // 2, 4: lambda n: (n + 1) // 2}
_ID_FLAGS = {1: (False, False), 2: (True, False), 3: (False, True), 4: (True, True)}


def ext_cograph_id(n: int, variant: int) -> ExtremalInstance:
    """Twin-free cograph families meeting the half-order separating bound.

    Variant profiles: 1 neither property, 2 only the undominated-vertex
    property, 3 only the covered-vertex property, 4 both.
    """
    if variant not in (1, 2, 3, 4):
        raise GeneratorError("variant must be 1..4")
    t = _cograph_id_tree(n, variant)
    s = sep_id_dp(t)
    want_k = _ID_CLAIMS[variant](n)
    want_flags = _ID_FLAGS[variant]
    if (s.k, s.emp, s.univ) != (want_k, *want_flags):
        raise GeneratorError(
            f"cograph-id({n},{variant}): dp says {(s.k, s.emp, s.univ)}, "
            f"claimed {(want_k, *want_flags)}"
        )
    witness = witness_cograph(t, ProblemKind.SEP_ID)
    return _validated(t, witness, ProblemKind.SEP_ID, n, s.k, f"cograph-id-v{variant}")


def _cograph_ld_tree(n: int, variant: int) -> Cotree:
    bases = {
        (2, 2): _indep(2),
        (2, 3): _clique(2),
        (3, 2): _indep(3),
        (3, 3): _clique(3),
        (4, 2): _compose(UNION, _indep(2), 2, _clique(2)),
        (4, 3): _compose(JOIN, Leaf(0), 1, _compose(UNION, Leaf(0), 1, _clique(2))),
    }
    if (n, variant) in bases:
        return bases[(n, variant)]
    if variant == 1 and n >= 4:
        return _compose(UNION, _clique(2), 2, _cograph_ld_tree(n - 2, 3))
    if variant == 2 and n >= 5:
        return _compose(UNION, Leaf(0), 1, _cograph_ld_tree(n - 1, 1))
    if variant == 3 and n >= 5:
        return _compose(JOIN, Leaf(0), 1, _cograph_ld_tree(n - 1, 1))
    if variant == 4 and n >= 3:
        return _compose(UNION, Leaf(0), 1, _cograph_ld_tree(n - 1, 3))
    raise GeneratorError(f"cograph-ld: ({n}, variant {variant}) is unreachable")


_LD_CLAIMS = {1: lambda n: (n + 2 + 2) // 3, 2: lambda n: (n + 1 + 2) // 3,
              3: lambda n: (n + 1 + 2) // 3, 4: lambda n: (n + 2) // 3}
_LD_FLAGS = {1: (False, False), 2: (True, False), 3: (False, True), 4: (True, True)}


def ext_cograph_ld(n: int, variant: int) -> ExtremalInstance:
    """Cograph families meeting the third-order separating bound (LD flavor)."""
    if variant not in (1, 2, 3, 4):
        raise GeneratorError("variant must be 1..4")
    t = _cograph_ld_tree(n, variant)
    s = sep_ld_dp(t)
    want_k = _LD_CLAIMS[variant](n)
    want_flags = _LD_FLAGS[variant]
    if (s.k, s.emp, s.univ) != (want_k, *want_flags):
        raise GeneratorError(
            f"cograph-ld({n},{variant}): dp says {(s.k, s.emp, s.univ)}, "
            f"claimed {(want_k, *want_flags)}"
        )
    witness = witness_cograph(t, ProblemKind.SEP_LD)
    return _validated(t, witness, ProblemKind.SEP_LD, n, s.k, f"cograph-ld-v{variant}")


# -- registry for the CLI -----------------------------------------------------

FAMILIES = {
    "interval-ic": (ext_interval_ic, ("k",)),
    "interval-old": (ext_interval_old, ("k",)),
    "interval-ld": (ext_interval_ld, ("k",)),
    "interval-md": (ext_interval_md, ("k", "d")),
    "unit-ic": (ext_unit_ic, ("k",)),
    "unit-old": (ext_unit_old, ("k",)),
    "unit-ld": (ext_unit_ld, ("k",)),
    "unit-md": (ext_unit_md, ("k", "d")),
    "perm-ic": (ext_perm_ic, ("k",)),
    "perm-old": (ext_perm_old, ("k",)),
    "perm-ld": (ext_perm_ld, ("k",)),
    "perm-md": (ext_perm_md, ("k", "d")),
    "bipperm-ic": (ext_bipperm_ic, ("k",)),
    "bipperm-old": (ext_bipperm_old, ("k",)),
    "bipperm-ld": (ext_bipperm_ld, ("k",)),
    "bipperm-md": (ext_bipperm_md, ("k", "d")),
    "cograph-id": (ext_cograph_id, ("n", "variant")),
    "cograph-ld": (ext_cograph_ld, ("n", "variant")),
}


def generate(family: str, **params) -> ExtremalInstance:
    """Build a named family instance; raises GeneratorError for bad input."""
    if family not in FAMILIES:
        raise GeneratorError(f"unknown family {family!r}")
    fn, names = FAMILIES[family]
    missing = [p for p in names if p not in params]
    if missing:
        raise GeneratorError(f"{family} needs parameters {names}")
    return fn(**{p: params[p] for p in names})
