"""Brute-force ground truth by exhaustive graph generation.

Edge-labeled series-parallel graphs are grown from 2-cycles by series and
parallel extensions over every label subset, their matroids are
canonicalized by basis sets, and counts per (ground size, rank) are read
off the resulting catalog.  Everything here is independent of the closed
formulas, which is the point: the two routes validate each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

HARD_CAP = 8
DEFAULT_MAX_N = 6


@dataclass(frozen=True)
class LabeledMultigraph:
    """A multigraph on vertices 0..vertex_count-1 with distinctly labeled edges.

    Loops are permitted only in the one-edge base case; every graph with at
    least two edges produced here is 2-connected.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, label)

    def labels(self) -> frozenset[int]:
        return frozenset(lab for _, _, lab in self.edges)


@dataclass(frozen=True)
class MatroidSignature:
    """Canonical matroid on ground set {1..ground_size}: the sorted basis masks.

    Bit i of a mask stands for element i + 1.  Signature equality is matroid
    equality.
    """

    ground_size: int
    rank: int
    bases: tuple[int, ...]


@dataclass(frozen=True)
class CatalogEntry:
    sig: MatroidSignature
    simple: bool


def single_edge(label: int) -> LabeledMultigraph:
    return LabeledMultigraph(2, ((0, 1, label),))


def single_loop(label: int) -> LabeledMultigraph:
    return LabeledMultigraph(1, ((0, 0, label),))


def two_cycle(label_a: int, label_b: int) -> LabeledMultigraph:
    return LabeledMultigraph(2, ((0, 1, label_a), (0, 1, label_b)))


def extend(g: LabeledMultigraph, new_label: int) -> list[LabeledMultigraph]:
    """All one-step series and parallel extensions of g using new_label.

    Parallel: duplicate each edge with the new label.  Series: subdivide
    each edge, with both assignments of the old and new label to the two
    halves.  One-edge graphs are terminal and yield nothing.
    """
    if new_label in g.labels():
        raise ValueError(f"label {new_label} already used")
    if len(g.edges) < 2:
        return []
    out = []
    for u, v, _lab in g.edges:
        out.append(LabeledMultigraph(g.vertex_count, g.edges + ((u, v, new_label),)))
    for idx, (u, v, lab) in enumerate(g.edges):
        w = g.vertex_count
        rest = g.edges[:idx] + g.edges[idx + 1:]
        for first, second in ((lab, new_label), (new_label, lab)):
            out.append(
                LabeledMultigraph(w + 1, rest + ((u, w, first), (w, v, second)))
            )
    return out


def _spanning_tree_masks(g: LabeledMultigraph, positions: dict[int, int]) -> list[int]:
    # Masks (over normalized element positions) of all spanning trees of g.
    nv = g.vertex_count
    size = nv - 1
    masks = []
    for subset in combinations(range(len(g.edges)), size):
        parent = list(range(nv))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        acyclic = True
        for ei in subset:
            u, v, _ = g.edges[ei]
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            mask = 0
            for ei in subset:
                mask |= 1 << positions[g.edges[ei][2]]
            masks.append(mask)
    return masks


def _is_connected(g: LabeledMultigraph) -> bool:
    if g.vertex_count <= 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for u, v, _ in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def signature(g: LabeledMultigraph) -> MatroidSignature:
    """Matroid of a connected graph: bases are its spanning-tree label sets."""
    if not _is_connected(g):
        raise ValueError("signature expects a connected graph")
    labels = sorted(g.labels())
    positions = {lab: i for i, lab in enumerate(labels)}
    masks = _spanning_tree_masks(g, positions)
    return MatroidSignature(len(labels), g.vertex_count - 1, tuple(sorted(masks)))


def rank_of_subset(m: MatroidSignature, subset_mask: int) -> int:
    """Matroid rank of a subset, as the best overlap with any basis."""
    return max((b & subset_mask).bit_count() for b in m.bases)


def is_simple(m: MatroidSignature) -> bool:
    """True iff the matroid has no loops and no parallel pairs."""
    n = m.ground_size
    singles = [rank_of_subset(m, 1 << i) for i in range(n)]
    if any(r == 0 for r in singles):
        return False
    for i, j in combinations(range(n), 2):
        if rank_of_subset(m, (1 << i) | (1 << j)) == 1:
            return False
    return True


def _closure_final_sigs(n: int, dedup_levels: bool) -> set[MatroidSignature]:
    # Breadth-first closure over label subsets: level m holds graphs whose
    # label set is some m-subset of [n]; each level is generated from the
    # previous one by extending with every absent label.
    all_labels = range(1, n + 1)
    if dedup_levels:
        level: dict = {}
        for a, b in combinations(all_labels, 2):
            g = two_cycle(a, b)
            level[(g.labels(), signature(g))] = g
        for _size in range(2, n):
            nxt: dict = {}
            for g in level.values():
                used = g.labels()
                for lab in all_labels:
                    if lab not in used:
                        for h in extend(g, lab):
                            key = (h.labels(), signature(h))
                            if key not in nxt:
                                nxt[key] = h
            level = nxt
        return {sig for (_labels, sig) in level.keys()}
    graphs = [two_cycle(a, b) for a, b in combinations(all_labels, 2)]
    for _size in range(2, n):
        nxt_list = []
        for g in graphs:
            used = g.labels()
            for lab in all_labels:
                if lab not in used:
                    nxt_list.extend(extend(g, lab))
        graphs = nxt_list
    return {signature(g) for g in graphs}


_CATALOG: dict[int, tuple[CatalogEntry, ...]] = {}


def enumerate_connected(n: int, *, dedup_levels: bool = True) -> tuple[CatalogEntry, ...]:
    """Catalog of all series-parallel matroids on ground set {1..n}.

    With dedup_levels=True (the default) graphs are deduplicated by matroid
    signature at every level, which is sound because both extension moves
    act on the matroid at a chosen element; dedup_levels=False keeps every
    generated graph and deduplicates only at the end, as a much slower
    certification of that optimization.
    """
    if n < 1:
        raise ValueError("enumerate_connected needs n >= 1")
    if n > HARD_CAP:
        raise ValueError(f"enumeration capped at n = {HARD_CAP}, got {n}")
    if dedup_levels and n in _CATALOG:
        return _CATALOG[n]
    if n == 1:
        sigs = {
            MatroidSignature(1, 0, (0,)),  # single loop
            MatroidSignature(1, 1, (1,)),  # single coloop
        }
    else:
        sigs = _closure_final_sigs(n, dedup_levels)
    entries = tuple(
        CatalogEntry(sig, is_simple(sig))
        for sig in sorted(sigs, key=lambda s: (s.rank, s.bases))
    )
    if dedup_levels:
        _CATALOG[n] = entries
    return entries


def connected_counts(n: int) -> tuple[list[int], list[int]]:
    """Per-rank counts over the catalog: (all connected, simple connected)."""
    c_row = [0] * (n + 1)
    e_row = [0] * (n + 1)
    for entry in enumerate_connected(n):
        c_row[entry.sig.rank] += 1
        if entry.simple:
            e_row[entry.sig.rank] += 1
    return c_row, e_row


def set_partitions(items: list) -> Iterator[list[list]]:
    """Yield all set partitions of `items` as lists of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        yield part + [[first]]


@lru_cache(maxsize=None)
def _block_rank_vectors(b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # (all, simple-only) counts per rank for connected matroids on b elements
    all_v = [0] * (b + 1)
    simple_v = [0] * (b + 1)
    for entry in enumerate_connected(b):
        all_v[entry.sig.rank] += 1
        if entry.simple:
            simple_v[entry.sig.rank] += 1
    return tuple(all_v), tuple(simple_v)


def quasi_counts(n: int) -> tuple[list[int], list[int]]:
    """Counts of (all, simple) quasi series-parallel matroids on [n] by rank.

    Sums over set partitions of [n]: each block carries any connected
    series-parallel matroid on its elements (simple ones only for the
    simple count), and ranks add over blocks.  n = 0 gives the empty
    matroid, counted once at rank 0.
    """
    if n < 0:
        raise ValueError("quasi_counts needs n >= 0")
    if n > HARD_CAP:
        raise ValueError(f"enumeration capped at n = {HARD_CAP}, got {n}")
    if n == 0:
        return [1], [1]
    a_row = [0] * (n + 1)
    s_row = [0] * (n + 1)
    for part in set_partitions(list(range(1, n + 1))):
        conv_a = [1]
        conv_s = [1]
        for block in part:
            vec_a, vec_s = _block_rank_vectors(len(block))
            conv_a = _convolve(conv_a, vec_a)
            conv_s = _convolve(conv_s, vec_s)
        for r, v in enumerate(conv_a):
            a_row[r] += v
        for r, v in enumerate(conv_s):
            s_row[r] += v
    return a_row, s_row


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def direct_sum(m1: MatroidSignature, m2: MatroidSignature) -> MatroidSignature:
    """Direct sum: bases are unions of one basis from each summand."""
    n = m1.ground_size + m2.ground_size
    shift = m1.ground_size
    bases = tuple(
        sorted(b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases)
    )
    return MatroidSignature(n, m1.rank + m2.rank, bases)


# ---------------------------------------------------------------------------
# excluded-minor characterization
# ---------------------------------------------------------------------------

def _k4_signature() -> MatroidSignature:
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    g = LabeledMultigraph(4, tuple((u, v, i + 1) for i, (u, v) in enumerate(edges)))
    return signature(g)


def _canonical_bases(bases: tuple[int, ...], size: int) -> tuple[int, ...]:
    # Minimum over all ground-set bijections of the sorted basis masks.
    import itertools

    best = None
    for perm in itertools.permutations(range(size)):
        mapped = tuple(
            sorted(
                sum(1 << perm[i] for i in range(size) if b >> i & 1)
                for b in bases
            )
        )
        if best is None or mapped < best:
            best = mapped
    return best


_MK4_CANON: tuple[int, ...] | None = None


def _mk4_canon() -> tuple[int, ...]:
    global _MK4_CANON
    if _MK4_CANON is None:
        _MK4_CANON = _canonical_bases(_k4_signature().bases, 6)
    return _MK4_CANON


def _has_u24_minor(m: MatroidSignature) -> bool:
    n = m.ground_size
    if n < 4:
        return False

    def rk(mask: int) -> int:
        return rank_of_subset(m, mask)

    for quad in combinations(range(n), 4):
        tmask = sum(1 << i for i in quad)
        rest = [i for i in range(n) if not tmask >> i & 1]
        pair_masks = [(1 << a) | (1 << b) for a, b in combinations(quad, 2)]
        for bits in range(1 << len(rest)):
            kmask = sum(1 << rest[i] for i in range(len(rest)) if bits >> i & 1)
            rk_k = rk(kmask)
            if rk(tmask | kmask) - rk_k != 2:
                continue
            if all(rk(p | kmask) - rk_k == 2 for p in pair_masks):
                return True
    return False


def _has_mk4_minor(m: MatroidSignature) -> bool:
    n = m.ground_size
    if n < 6:
        return False

    def rk(mask: int) -> int:
        return rank_of_subset(m, mask)

    target = _mk4_canon()
    for six in combinations(range(n), 6):
        tmask = sum(1 << i for i in six)
        rest = [i for i in range(n) if not tmask >> i & 1]
        for bits in range(1 << len(rest)):
            kmask = sum(1 << rest[i] for i in range(len(rest)) if bits >> i & 1)
            rk_k = rk(kmask)
            if rk(tmask | kmask) - rk_k != 3:
                continue
            minor_bases = []
            for triple in combinations(six, 3):
                bmask = sum(1 << i for i in triple)
                if rk(bmask | kmask) - rk_k == 3:
                    minor_bases.append(bmask)
            if len(minor_bases) != 16:
                continue
            pos = {e: i for i, e in enumerate(six)}
            local = tuple(
                sorted(
                    sum(1 << pos[i] for i in range(n) if b >> i & 1)
                    for b in minor_bases
                )
            )
            if _canonical_bases(local, 6) == target:
                return True
    return False


def minor_check(m: MatroidSignature) -> bool:
    """True iff the matroid has no minor equal to the rank-2 uniform matroid
    on four elements or to the cycle matroid of the complete graph on four
    vertices.  Every series-parallel matroid and every direct sum of them
    must pass."""
    if m.ground_size > HARD_CAP:
        raise ValueError(f"minor_check capped at ground size {HARD_CAP}")
    return not _has_u24_minor(m) and not _has_mk4_minor(m)


def check_basis_exchange(m: MatroidSignature, rng: random.Random, trials: int = 40) -> bool:
    """Randomized spot check of the basis-exchange axiom."""
    bases = m.bases
    base_set = set(bases)
    for _ in range(trials):
        b1 = rng.choice(bases)
        b2 = rng.choice(bases)
        out_bits = b1 & ~b2
        if not out_bits:
            continue
        candidates = [i for i in range(m.ground_size) if out_bits >> i & 1]
        e = rng.choice(candidates)
        stripped = b1 & ~(1 << e)
        in_bits = b2 & ~b1
        swaps = [i for i in range(m.ground_size) if in_bits >> i & 1]
        if not any(stripped | (1 << f) in base_set for f in swaps):
            return False
    return True


# ---------------------------------------------------------------------------
# catalog dump
# ---------------------------------------------------------------------------

def _render_basis(mask: int) -> str:
    labels = [str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1]
    return "".join(labels) if labels else "-"


def dump_catalog(max_n: int) -> str:
    """One matroid per line: `n rank simple_flag basis1,basis2,...`.

    Bases are sorted label strings; the empty basis renders as `-`.
    """
    lines = []
    for n in range(1, max_n + 1):
        for entry in enumerate_connected(n):
            bases = ",".join(_render_basis(b) for b in entry.sig.bases)
            lines.append(f"{n} {entry.sig.rank} {int(entry.simple)} {bases}")
    return "\n".join(lines) + "\n"
