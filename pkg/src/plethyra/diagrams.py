"""The partition algebra and the two-parameter ramified partition algebra.

Diagrams are canonical set-partitions of r northern and s southern
vertices; southern vertices are stored as r+1 .. r+s.  Parameters are
never substituted during composition: products carry their delta
exponents symbolically, so the same kernel serves every parameter value
including zero.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import NamedTuple

from plethyra.partitions import (
    canonical_set_partition,
    coarsenings,
    is_coarser,
    line_set_partitions,
    mobius,
    std_tableaux_count,
)


class PartitionDiagram:
    """An (r, s)-set-partition in canonical block form."""

    __slots__ = ("r", "s", "blocks")

    def __init__(self, r: int, s: int, blocks):
        self.r = r
        self.s = s
        self.blocks = canonical_set_partition(blocks)
        seen = [v for b in self.blocks for v in b]
        if sorted(seen) != list(range(1, r + s + 1)):
            raise ValueError(
                f"blocks must partition 1..{r + s}: got {self.blocks}"
            )

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, r: int) -> "PartitionDiagram":
        return cls(r, r, [(i, r + i) for i in range(1, r + 1)])

    @classmethod
    def from_permutation(cls, perm) -> "PartitionDiagram":
        """Diagram of a permutation given in one-line form (1-based images)."""
        r = len(perm)
        return cls(r, r, [(i, r + perm[i - 1]) for i in range(1, r + 1)])

    @classmethod
    def p_gen(cls, r: int, i: int) -> "PartitionDiagram":
        """The generator with singletons at northern and southern position i."""
        blocks = [(k, r + k) for k in range(1, r + 1) if k != i]
        return cls(r, r, blocks + [(i,), (r + i,)])

    @classmethod
    def pp_gen(cls, r: int, i: int, j: int) -> "PartitionDiagram":
        """The generator joining positions i and j through one block."""
        blocks = [(k, r + k) for k in range(1, r + 1) if k not in (i, j)]
        return cls(r, r, blocks + [(i, j, r + i, r + j)])

    @classmethod
    def parse(cls, text: str, r: int | None = None, s: int | None = None):
        """Parse "{1,2,4,2',5'}|{3}|{1'}" with primes marking southern vertices."""
        groups = []
        for chunk in text.replace(" ", "").split("|"):
            chunk = chunk.strip("{}")
            if not chunk:
                continue
            groups.append([v for v in chunk.split(",") if v])
        north = [int(v) for g in groups for v in g if not v.endswith("'")]
        south = [int(v[:-1]) for g in groups for v in g if v.endswith("'")]
        r = max(north, default=0) if r is None else r
        s = max(south, default=0) if s is None else s
        blocks = []
        for g in groups:
            blocks.append(
                tuple(
                    int(v[:-1]) + r if v.endswith("'") else int(v)
                    for v in g
                )
            )
        return cls(r, s, blocks)

    # -- presentation --------------------------------------------------

    def format(self) -> str:
        bits = []
        for block in self.blocks:
            labels = [str(v) if v <= self.r else f"{v - self.r}'" for v in block]
            bits.append("{" + ",".join(labels) + "}")
        return "|".join(bits)

    def __repr__(self):
        return f"PartitionDiagram({self.r},{self.s}: {self.format()})"

    # -- structure ------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, PartitionDiagram)
            and (self.r, self.s, self.blocks) == (other.r, other.s, other.blocks)
        )

    def __hash__(self):
        return hash((self.r, self.s, self.blocks))

    def is_propagating(self, block) -> bool:
        return any(v <= self.r for v in block) and any(v > self.r for v in block)

    def propagating_blocks(self):
        return [b for b in self.blocks if self.is_propagating(b)]

    def propagating_data(self):
        """Number of propagating blocks and the induced permutation.

        Propagating blocks are ranked by northern minima; the permutation
        (one-line form) sends rank i to the rank of the block's southern
        minimum.
        """
        props = self.propagating_blocks()
        by_north = sorted(props, key=lambda b: min(v for v in b if v <= self.r))
        south_minima = sorted(min(v for v in b if v > self.r) for b in props)
        rank = {v: i + 1 for i, v in enumerate(south_minima)}
        perm = tuple(rank[min(v for v in b if v > self.r)] for b in by_north)
        return len(props), perm

    def reflect(self) -> "PartitionDiagram":
        """Reflection through the horizontal axis (the * anti-involution)."""
        flip = lambda v: v + self.s if v <= self.r else v - self.r
        return PartitionDiagram(
            self.s, self.r, [tuple(flip(v) for v in b) for b in self.blocks]
        )

    def relabel_north(self, perm) -> "PartitionDiagram":
        """Apply a permutation (one-line form) to the northern labels."""
        move = lambda v: perm[v - 1] if v <= self.r else v
        return PartitionDiagram(
            self.r, self.s, [tuple(move(v) for v in b) for b in self.blocks]
        )

    def coarser_diagrams(self):
        """All diagrams whose set-partition is coarser, self included."""
        return [
            PartitionDiagram(self.r, self.s, blocks)
            for blocks in coarsenings(self.blocks)
        ]


class ScaledDiagram(NamedTuple):
    """A diagram with symbolic parameter exponents.

    Plain partition-diagram products carry a single parameter in
    ``exp_out``; ramified products use both slots.
    """

    diagram: object
    exp_in: int
    exp_out: int


class _UnionFind:
    def __init__(self, n):
        self.up = list(range(n))

    def find(self, x):
        while self.up[x] != x:
            self.up[x] = self.up[self.up[x]]
            x = self.up[x]
        return x

    def union(self, x, y):
        self.up[self.find(x)] = self.find(y)


def _merge(top_blocks, bot_blocks, k, r, s):
    """Concatenate block structures: top (k, r) over bottom (r, s).

    Vertices 0..k-1 north, k..k+r-1 middle, k+r..k+r+s-1 south.  Returns
    (result blocks over 1..k+s, number of pure-middle components).
    """
    uf = _UnionFind(k + r + s)
    for block in top_blocks:
        vs = [v - 1 if v <= k else k + (v - k) - 1 for v in block]
        for a, b in zip(vs, vs[1:]):
            uf.union(a, b)
    for block in bot_blocks:
        vs = [k + v - 1 if v <= r else k + r + (v - r) - 1 for v in block]
        for a, b in zip(vs, vs[1:]):
            uf.union(a, b)
    comps = {}
    for v in range(k + r + s):
        comps.setdefault(uf.find(v), []).append(v)
    blocks, loops = [], 0
    for comp in comps.values():
        outer = [v for v in comp if v < k or v >= k + r]
        if not outer:
            loops += 1
            continue
        blocks.append(
            tuple(v + 1 if v < k else k + (v - (k + r)) + 1 for v in outer)
        )
    return blocks, loops


def compose(d1: PartitionDiagram, d2: PartitionDiagram) -> ScaledDiagram:
    """Product d1 * d2: concatenate d1 above d2 and remove middle loops."""
    if d1.s != d2.r:
        raise ValueError(f"size mismatch: ({d1.r},{d1.s}) * ({d2.r},{d2.s})")
    blocks, loops = _merge(d1.blocks, d2.blocks, d1.r, d1.s, d2.s)
    return ScaledDiagram(PartitionDiagram(d1.r, d2.s, blocks), 0, loops)


# ---------------------------------------------------------------------------
# Orbit basis.


def orbit_expand(d: PartitionDiagram) -> dict:
    """Coefficients of d_Lambda in the orbit basis: 1 on every coarsening."""
    return {coarse: 1 for coarse in d.coarser_diagrams()}


def orbit_collapse(x: PartitionDiagram) -> dict:
    """Coefficients of x_Lambda in the diagram basis, by Moebius inversion."""
    return {
        coarse: mobius(x.blocks, coarse.blocks)
        for coarse in x.coarser_diagrams()
    }


def cell_action(v: PartitionDiagram, d: PartitionDiagram):
    """Right action of d on a module basis diagram v with k propagating blocks.

    Returns None when the product drops below k propagating blocks;
    otherwise (delta exponent, untwisting permutation tau, canonical
    diagram with identity permutation).
    """
    k = v.r
    count, perm = v.propagating_data()
    if count != k or perm != tuple(range(1, k + 1)):
        raise ValueError("v must have k propagating blocks and trivial permutation")
    scaled = compose(v, d)
    result = scaled.diagram
    new_count, tau = result.propagating_data()
    if new_count < k:
        return None
    canonical = result.relabel_north(tau)
    return scaled.exp_out, tau, canonical


# ---------------------------------------------------------------------------
# Ramified diagrams.


class RamifiedDiagram:
    """A pair (inner, outer) of (r, s)-set-partitions with inner refining outer."""

    __slots__ = ("inner", "outer")

    def __init__(self, inner: PartitionDiagram, outer: PartitionDiagram):
        if (inner.r, inner.s) != (outer.r, outer.s):
            raise ValueError("inner and outer must have matching sizes")
        if not is_coarser(inner.blocks, outer.blocks):
            raise ValueError("inner set-partition must refine the outer one")
        self.inner = inner
        self.outer = outer

    @property
    def r(self):
        return self.inner.r

    @property
    def s(self):
        return self.inner.s

    @classmethod
    def from_blocks(cls, r, s, inner_blocks, outer_blocks):
        return cls(PartitionDiagram(r, s, inner_blocks), PartitionDiagram(r, s, outer_blocks))

    @classmethod
    def diagonal(cls, d: PartitionDiagram) -> "RamifiedDiagram":
        """The embedding d -> (d, d) of the one-parameter algebra."""
        return cls(d, d)

    @classmethod
    def parse(cls, text: str):
        inner_text, outer_text = text.split("@")
        inner = PartitionDiagram.parse(inner_text)
        outer = PartitionDiagram.parse(
            outer_text, r=inner.r, s=inner.s
        )
        return cls(inner, outer)

    def format(self) -> str:
        return f"{self.inner.format()}@{self.outer.format()}"

    def __repr__(self):
        return f"RamifiedDiagram({self.r},{self.s}: {self.format()})"

    def __eq__(self, other):
        return (
            isinstance(other, RamifiedDiagram)
            and (self.inner, self.outer) == (other.inner, other.outer)
        )

    def __hash__(self):
        return hash((self.inner, self.outer))


def ramified_compose(r1: RamifiedDiagram, r2: RamifiedDiagram) -> ScaledDiagram:
    """Compose inner and outer independently, recording both exponents."""
    if r1.s != r2.r:
        raise ValueError("size mismatch in ramified product")
    inner = compose(r1.inner, r2.inner)
    outer = compose(r1.outer, r2.outer)
    return ScaledDiagram(
        RamifiedDiagram(inner.diagram, outer.diagram),
        inner.exp_out,
        outer.exp_out,
    )


def propagating_index(rd: RamifiedDiagram) -> tuple:
    """Inner propagating counts per outer propagating block, sorted weakly
    decreasing; zero entries mark outer blocks with no inner propagating pair."""
    inner_props = rd.inner.propagating_blocks()
    index = []
    for block in rd.outer.blocks:
        if not rd.outer.is_propagating(block):
            continue
        members = set(block)
        index.append(sum(1 for ib in inner_props if set(ib) <= members))
    return tuple(sorted(index, reverse=True))


# ---------------------------------------------------------------------------
# The poset of propagating indices.

DEFAULT_THETA_BOUND = 6


def theta_elements(r: int) -> list:
    """All propagating indices realizable on r strands."""
    out = []
    for zeros in range(r + 1):
        for total in range(r - zeros + 1):
            for positive in _positive_partitions(total):
                if sum(positive) + zeros <= r:
                    out.append(positive + (0,) * zeros)
    return sorted(set(out), key=lambda t: (len(t), t), reverse=True)


@functools.lru_cache(maxsize=None)
def _positive_partitions(n):
    from plethyra.partitions import partitions_of

    return partitions_of(n)


def _theta_covers(theta) -> set:
    """Indices directly below theta: decrement an entry, merge two entries,
    or drop from (0) to the empty index."""
    out = set()
    n = len(theta)
    for i in range(n):
        if theta[i] >= 1:
            cand = theta[:i] + (theta[i] - 1,) + theta[i + 1:]
            out.add(tuple(sorted(cand, reverse=True)))
    for i in range(n):
        for j in range(i + 1, n):
            merged = [theta[k] for k in range(n) if k not in (i, j)]
            merged.append(theta[i] + theta[j])
            out.add(tuple(sorted(merged, reverse=True)))
    if theta == (0,):
        out.add(())
    return out


def theta_poset(r: int, bound: int = DEFAULT_THETA_BOUND):
    """Elements of Theta_r with the order relation as a dict of down-sets.

    Returns (elements, strictly_below) where strictly_below[t] is the set
    of indices strictly smaller than t in the transitive closure.
    """
    if r > bound:
        raise ValueError(f"theta_poset bound exceeded: r = {r} > {bound}")
    elements = theta_elements(r)
    element_set = set(elements)
    below = {}

    def descend(t):
        if t in below:
            return below[t]
        acc = set()
        for cov in _theta_covers(t):
            if cov in element_set:
                acc.add(cov)
                acc |= descend(cov)
        below[t] = acc
        return acc

    for t in elements:
        descend(t)
    return elements, below


def theta_leq(t1, t2, r: int, bound: int = DEFAULT_THETA_BOUND) -> bool:
    _, below = theta_poset(r, bound)
    return t1 == t2 or t1 in below[t2]


# ---------------------------------------------------------------------------
# Canonical elements.


def e_theta(theta, r: int) -> RamifiedDiagram:
    """The quasi-idempotent diagram attached to a propagating index.

    Block j spans max(a_j, 1) consecutive positions on both rows, holding
    a_j vertical inner pairs (inner singletons when a_j = 0); leftover
    positions are outer singletons.
    """
    width = sum(max(a, 1) for a in theta)
    if width > r:
        raise ValueError(f"index {theta} needs {width} strands, only r = {r}")
    inner, outer = [], []
    pos = 0
    for a in theta:
        w = max(a, 1)
        cols = list(range(pos + 1, pos + w + 1))
        outer.append(tuple(cols + [r + c for c in cols]))
        if a == 0:
            inner.extend([(cols[0],), (r + cols[0],)])
        else:
            inner.extend((c, r + c) for c in cols)
        pos += w
    for c in range(pos + 1, r + 1):
        outer.extend([(c,), (r + c,)])
        inner.extend([(c,), (r + c,)])
    return RamifiedDiagram.from_blocks(r, r, inner, outer)


def wreath_diagram(sigmas, pi, a: int, b: int) -> RamifiedDiagram:
    """The ramified (ab, ab)-diagram of (sigma_1, ..., sigma_b; pi).

    Outer block j joins northern positions (j-1)a+1 .. ja to the southern
    positions of block pi(j); inner pairs send (j-1)a+i to
    (pi(j)-1)a + sigma_j(i).  Permutations are one-line, 1-based.
    """
    if len(sigmas) != b or any(len(s) != a for s in sigmas):
        raise ValueError("need b permutations of a letters")
    if sorted(pi) != list(range(1, b + 1)):
        raise ValueError("pi must be a permutation of 1..b")
    r = a * b
    inner, outer = [], []
    for j in range(1, b + 1):
        north = [(j - 1) * a + i for i in range(1, a + 1)]
        south = [r + (pi[j - 1] - 1) * a + i for i in range(1, a + 1)]
        outer.append(tuple(north + south))
        for i in range(1, a + 1):
            inner.append(((j - 1) * a + i, r + (pi[j - 1] - 1) * a + sigmas[j - 1][i - 1]))
    return RamifiedDiagram.from_blocks(r, r, inner, outer)


def horizontal_concat(r1: RamifiedDiagram, r2: RamifiedDiagram) -> RamifiedDiagram:
    """Place r2 to the right of r1, relabelling its vertices."""

    def shift(d: PartitionDiagram, dr: int, ds: int, new_r: int):
        out = []
        for block in d.blocks:
            out.append(
                tuple(
                    v + dr if v <= d.r else new_r + (v - d.r) + ds
                    for v in block
                )
            )
        return out

    r = r1.r + r2.r
    s = r1.s + r2.s
    inner = shift(r1.inner, 0, 0, r) + shift(r2.inner, r1.r, r1.s, r)
    outer = shift(r1.outer, 0, 0, r) + shift(r2.outer, r1.r, r1.s, r)
    return RamifiedDiagram.from_blocks(r, s, inner, outer)


def v_xy(x: int, y: int) -> RamifiedDiagram:
    """Single-outer-block elementary diagram with x inner pairs and y
    southern inner singletons; (max(1,x), x+y)-sized for (x,y) != (0,0)."""
    if (x, y) == (0, 0):
        raise ValueError("v_xy undefined at (0, 0)")
    r = max(1, x)
    s = x + y
    inner = [(i, r + i) for i in range(1, x + 1)]
    if x == 0:
        inner.append((1,))
    inner.extend((r + j,) for j in range(x + 1, s + 1))
    outer = [tuple(range(1, r + 1)) + tuple(range(r + 1, r + s + 1))]
    return RamifiedDiagram.from_blocks(r, s, inner, outer)


def v_empty(y: int) -> RamifiedDiagram:
    """The (0, y) elementary diagram: one outer block of southern singletons."""
    inner = [(j,) for j in range(1, y + 1)]
    outer = [tuple(range(1, y + 1))]
    return RamifiedDiagram.from_blocks(0, y, inner, outer)


def v_elementary(gamma, epsilon, a: int = 0) -> RamifiedDiagram:
    """The diagram v_{gamma, epsilon} by horizontal concatenation.

    gamma may contain zeros (each zero contributes a pair-only or
    singleton block depending on a); epsilon parts become non-propagating
    blocks.
    """
    pieces = [v_xy(a, g) for g in gamma]
    pieces += [v_empty(e) for e in epsilon]
    if not pieces:
        return RamifiedDiagram.from_blocks(0, 0, [], [])
    out = pieces[0]
    for piece in pieces[1:]:
        out = horizontal_concat(out, piece)
    return out


# ---------------------------------------------------------------------------
# Depth radical, depth quotient basis, and types.


class DiagramType(NamedTuple):
    gamma: tuple  # propagating type, zeros allowed when inner pairs exist
    epsilon: tuple  # non-propagating type, all parts >= 2


def _rectangular_index(rd: RamifiedDiagram):
    index = propagating_index(rd)
    if index and len(set(index)) > 1:
        raise ValueError(f"diagram has non-rectangular propagating index {index}")
    a = index[0] if index else 0
    return a, len(index)


def is_depth_radical(rd: RamifiedDiagram) -> bool:
    """True when the inner partition joins two southern vertices or the
    outer partition has a southern singleton block."""
    _rectangular_index(rd)
    r = rd.r
    for block in rd.inner.blocks:
        if sum(1 for v in block if v > r) >= 2:
            return True
    for block in rd.outer.blocks:
        if len(block) == 1 and block[0] > r:
            return True
    return False


def type_of(rd: RamifiedDiagram) -> DiagramType:
    """Propagating and non-propagating type of a depth-quotient diagram."""
    r = rd.r
    gamma, eps = [], []
    inner_by_vertex = {}
    for block in rd.inner.blocks:
        for v in block:
            inner_by_vertex[v] = block
    for block in rd.outer.blocks:
        south = [v for v in block if v > r]
        if rd.outer.is_propagating(block):
            singles = sum(
                1 for v in south if inner_by_vertex[v] == (v,)
            )
            gamma.append(singles)
        else:
            eps.append(len(south))
    return DiagramType(
        tuple(sorted(gamma, reverse=True)), tuple(sorted(eps, reverse=True))
    )


def v0_basis(r: int, a: int, b: int) -> list:
    """Canonical basis diagrams of the depth quotient V^0_r(a^b).

    Diagrams are (ab, r)-ramified ((b, r) when a = 0) with propagating
    index (a^b), no inner southern pairs, no outer southern singletons,
    identity block permutations.
    """
    if a == 0:
        need = b
    else:
        need = a * b
    if need > r:
        raise ValueError(f"v0_basis needs {need} <= r = {r}")
    k = b if a == 0 else a * b
    out = []
    for partition in line_set_partitions(r):
        blocks = list(partition)
        if len(blocks) < b:
            continue
        min_prop_size = max(a, 1)
        for prop_idx in itertools.combinations(range(len(blocks)), b):
            prop = [blocks[i] for i in prop_idx]
            rest = [blocks[i] for i in range(len(blocks)) if i not in prop_idx]
            if any(len(bl) < min_prop_size for bl in prop):
                continue
            if any(len(bl) < 2 for bl in rest):
                continue
            prop = sorted(prop, key=lambda bl: bl[0])  # identity outer permutation
            pair_menus = [itertools.combinations(bl, a) for bl in prop]
            for pairing in itertools.product(*pair_menus):
                inner, outer = [], []
                for j, bl in enumerate(prop):
                    if a == 0:
                        norths = [j + 1]
                    else:
                        norths = [j * a + i for i in range(1, a + 1)]
                    outer.append(tuple(norths) + tuple(k + v for v in bl))
                    paired = sorted(pairing[j])
                    for north, v in zip(norths, paired):
                        inner.append((north, k + v))
                    if a == 0:
                        inner.append((norths[0],))
                    inner.extend((k + v,) for v in bl if v not in paired)
                for bl in rest:
                    outer.append(tuple(k + v for v in bl))
                    inner.extend((k + v,) for v in bl)
                out.append(RamifiedDiagram.from_blocks(k, r, inner, outer))
    return out


def dq_dimension_check(r: int, beta) -> tuple:
    """Diagrammatic vs character-side dimension of the depth quotient.

    Diagrammatic: f^beta times the number of basis diagrams of
    V^0_r(0^|beta|).  Formula: sum over kappa of rc(empty^beta, kappa)
    weighted by f^kappa.
    """
    from plethyra.coefficients import ramified_branching
    from plethyra.partitions import partitions_of

    beta = tuple(beta)
    diagrammatic = std_tableaux_count(beta) * len(v0_basis(r, 0, sum(beta)))
    formula = sum(
        ramified_branching((), beta, kappa) * std_tableaux_count(kappa)
        for kappa in partitions_of(r)
    )
    return diagrammatic, formula
