"""Finite relations on the alphabet [r] and their decision procedures.

A relation U is a set of ordered pairs of letters, stored as one bitmask row
per letter (``rows[x-1]`` has bit ``y-1`` set iff x U y).  The module decides
transitivity, strict total orders, bipartitional relations (with witness
extraction), kappa-extensions and kappa-extensibility, computes the
kappa-closure, and converts between relations and the (f, g) parametrization
of the relations below a fixed total order.

A relation S is a kappa-extension of U when U is contained in S and, for all
letters x, y, z:  x U y and not(z U y)  imply  x S z and not(z S x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

INF = math.inf  # g-map value larger than every letter


@dataclass(frozen=True, slots=True)
class Relation:
    """Relation on [size]; ``rows[x-1]`` is the bitmask of {y : x U y}."""

    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.size}")
        if len(self.rows) != self.size:
            raise ValueError("row count does not match alphabet size")
        full = (1 << self.size) - 1
        for row in self.rows:
            if row & ~full:
                raise ValueError("row bitmask exceeds alphabet size")

    @classmethod
    def from_pairs(cls, r: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        """Relation containing exactly the listed pairs (duplicates allowed)."""
        rows = [0] * r
        for x, y in pairs:
            if not (1 <= x <= r and 1 <= y <= r):
                raise ValueError(f"pair ({x},{y}) outside alphabet [{r}]")
            rows[x - 1] |= 1 << (y - 1)
        return cls(r, tuple(rows))

    @classmethod
    def from_mask(cls, r: int, mask: int) -> "Relation":
        """Relation from an r*r-bit mask; bit (x-1)*r + (y-1) is the pair (x,y)."""
        if not 0 <= mask < 1 << (r * r):
            raise ValueError("mask out of range")
        full = (1 << r) - 1
        return cls(r, tuple((mask >> (x * r)) & full for x in range(r)))

    @property
    def mask(self) -> int:
        m = 0
        for x, row in enumerate(self.rows):
            m |= row << (x * self.size)
        return m

    def contains(self, x: int, y: int) -> bool:
        return bool((self.rows[x - 1] >> (y - 1)) & 1)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """All pairs of the relation, sorted."""
        out = []
        for x in range(1, self.size + 1):
            row = self.rows[x - 1]
            for y in range(1, self.size + 1):
                if (row >> (y - 1)) & 1:
                    out.append((x, y))
        return tuple(out)

    def column(self, y: int) -> int:
        """Bitmask of {x : x U y}."""
        bit = 1 << (y - 1)
        col = 0
        for x in range(self.size):
            if self.rows[x] & bit:
                col |= 1 << x
        return col

    def transpose(self) -> "Relation":
        return Relation(self.size, tuple(self.column(y) for y in range(1, self.size + 1)))

    def count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def _binop(self, other: "Relation", op) -> "Relation":
        if self.size != other.size:
            raise ValueError("alphabet size mismatch")
        return Relation(self.size, tuple(op(a, b) for a, b in zip(self.rows, other.rows)))

    def __or__(self, other: "Relation") -> "Relation":
        return self._binop(other, lambda a, b: a | b)

    def __and__(self, other: "Relation") -> "Relation":
        return self._binop(other, lambda a, b: a & b)

    def __sub__(self, other: "Relation") -> "Relation":
        return self._binop(other, lambda a, b: a & ~b)

    def issubset(self, other: "Relation") -> bool:
        if self.size != other.size:
            raise ValueError("alphabet size mismatch")
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def to_json_dict(self) -> dict:
        return {"size": self.size, "pairs": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Relation":
        """Load the {"size": r, "pairs": [[x,y],...]} form; duplicates rejected."""
        try:
            r = int(data["size"])
            raw = data["pairs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed relation JSON: {exc}") from exc
        pairs = [(int(x), int(y)) for x, y in raw]
        if len(set(pairs)) != len(pairs):
            raise ValueError("duplicate pairs in relation JSON")
        return cls.from_pairs(r, pairs)


@dataclass(frozen=True, slots=True)
class Bipartition:
    """Ordered blocks (B_1, ..., B_k) of [r] with one bit beta per block.

    The associated relation has x U y iff the block of x precedes the block
    of y, or x and y share a block whose bit is 1.
    """

    blocks: tuple[tuple[int, ...], ...]
    betas: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.blocks) != len(self.betas):
            raise ValueError("one beta bit per block required")
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if tuple(sorted(block)) != block:
                raise ValueError("block letters must be sorted")
            if seen & set(block):
                raise ValueError("blocks overlap")
            seen |= set(block)
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError("blocks must partition [r]")
        for b in self.betas:
            if b not in (0, 1):
                raise ValueError("beta bits must be 0 or 1")

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def to_json_dict(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "betas": list(self.betas)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Bipartition":
        try:
            blocks = tuple(tuple(sorted(int(x) for x in b)) for b in data["blocks"])
            betas = tuple(int(b) for b in data["betas"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed bipartition JSON: {exc}") from exc
        return cls(blocks, betas)


@dataclass(frozen=True, slots=True)
class GMap:
    """A permutation f of [r] and a map g: [r] -> [r] u {INF} with g(y) > y.

    Pairs (f, g) parametrize exactly the relations U such that the total
    order {(x,y) : f(x) > f(y)} is a kappa-extension of U, via
    x U y  iff  f(x) >= g(f(y)).
    """

    f: tuple[int, ...]
    g: tuple[int | float, ...]

    def __post_init__(self) -> None:
        r = len(self.f)
        if sorted(self.f) != list(range(1, r + 1)):
            raise ValueError("f is not a permutation of [r]")
        if len(self.g) != r:
            raise ValueError("g must be defined on all of [r]")
        for y, gy in enumerate(self.g, start=1):
            if gy != INF and (not isinstance(gy, int) or not 1 <= gy <= r):
                raise ValueError(f"g({y}) must lie in [r] or be INF")
            if not gy > y:
                raise ValueError(f"g({y}) = {gy} must exceed {y}")

    @property
    def size(self) -> int:
        return len(self.f)


def natural_order(r: int) -> Relation:
    """The strict natural order: (x, y) iff x > y."""
    # row of letter x+1 keeps bits 0..x-1, i.e. all smaller letters
    return Relation(r, tuple(((1 << r) - 1) >> (r - x) for x in range(r)))


def empty_relation(r: int) -> Relation:
    return Relation(r, (0,) * r)


def full_relation(r: int) -> Relation:
    return Relation(r, ((1 << r) - 1,) * r)


def is_transitive(u: Relation) -> bool:
    """True iff x U y and y U z always imply x U z."""
    rows = u.rows
    for x in range(u.size):
        rx = rows[x]
        m = rx
        while m:
            y = (m & -m).bit_length() - 1
            m &= m - 1
            if rows[y] & ~rx:
                return False
    return True


def is_total_order(s: Relation) -> bool:
    """True iff S is a strict total order on [r].

    Checks irreflexivity, antisymmetry, totality and transitivity.
    """
    r = s.size
    rows = s.rows
    for x in range(r):
        if (rows[x] >> x) & 1:
            return False
    for x in range(r):
        for y in range(x + 1, r):
            fwd = (rows[x] >> y) & 1
            bwd = (rows[y] >> x) & 1
            if fwd == bwd:  # both (not total) or neither (not antisymmetric)
                return False
    return is_transitive(s)


def is_bipartitional(u: Relation) -> bool:
    """True iff U is transitive and x U y, not(z U y) always imply x U z."""
    if not is_transitive(u):
        return False
    r = u.size
    full = (1 << r) - 1
    rows = u.rows
    cols = [u.column(y) for y in range(1, r + 1)]
    for x in range(r):
        m = rows[x]
        while m:
            y = (m & -m).bit_length() - 1
            m &= m - 1
            if (~cols[y] & full) & ~rows[x]:
                return False
    return True


def relation_from_bipartition(b: Bipartition) -> Relation:
    """The relation determined by ordered blocks and their beta bits."""
    r = b.size
    block_of = {}
    for l, block in enumerate(b.blocks):
        for x in block:
            block_of[x] = l
    rows = [0] * r
    for x in range(1, r + 1):
        for y in range(1, r + 1):
            lx, ly = block_of[x], block_of[y]
            if lx < ly or (lx == ly and b.betas[lx] == 1):
                rows[x - 1] |= 1 << (y - 1)
    return Relation(r, tuple(rows))


def extract_bipartition(u: Relation) -> Bipartition:
    """The unique ordered-block witness of a bipartitional relation.

    Letters with identical row and column bitmasks form a block; blocks are
    ordered by how many letters outside the block they dominate, which is
    strictly decreasing along the block order.
    """
    if not is_bipartitional(u):
        raise ValueError("relation is not bipartitional")
    r = u.size
    cols = [u.column(y) for y in range(1, r + 1)]
    groups: dict[tuple[int, int], list[int]] = {}
    for x in range(1, r + 1):
        groups.setdefault((u.rows[x - 1], cols[x - 1]), []).append(x)
    members = list(groups.values())

    def dominated_outside(block: list[int]) -> int:
        block_mask = 0
        for x in block:
            block_mask |= 1 << (x - 1)
        return (u.rows[block[0] - 1] & ~block_mask).bit_count()

    # the dominated count is strictly decreasing along the block order, so
    # the minimum-element tiebreak never fires; it pins determinism anyway
    members.sort(key=lambda g: (-dominated_outside(g), min(g)))
    blocks = tuple(tuple(sorted(g)) for g in members)
    betas = tuple(1 if u.contains(g[0], g[0]) else 0 for g in blocks)
    return Bipartition(blocks, betas)


def is_kappa_extension(s: Relation, u: Relation) -> bool:
    """True iff U is contained in S and x U y, not(z U y) force x S z, not(z S x)."""
    if s.size != u.size:
        raise ValueError("alphabet size mismatch")
    if not u.issubset(s):
        return False
    r = u.size
    full = (1 << r) - 1
    cols_u = [u.column(y) for y in range(1, r + 1)]
    cols_s = [s.column(y) for y in range(1, r + 1)]
    for x in range(r):
        m = u.rows[x]
        while m:
            y = (m & -m).bit_length() - 1
            m &= m - 1
            zs = ~cols_u[y] & full  # every z with not(z U y)
            if zs & ~s.rows[x]:  # some z with not(x S z)
                return False
            if zs & cols_s[x]:  # some z with z S x
                return False
    return True


def is_kappa_extensible(u: Relation) -> bool:
    """True iff U admits a kappa-extension.

    Equivalent to: U is transitive and there is no quadruple x, y, z, t with
    x U y, not(z U y), not(x U t), z U t.  The quadruple scan is a direct
    O(r**4) loop; r stays small by design.
    """
    if not is_transitive(u):
        return False
    r = u.size
    letters = range(1, r + 1)
    for x in letters:
        for y in letters:
            if not u.contains(x, y):
                continue
            for z in letters:
                if u.contains(z, y):
                    continue
                for t in letters:
                    if u.contains(z, t) and not u.contains(x, t):
                        return False
    return True


def kappa_closure(u: Relation) -> Relation:
    """U together with every pair (x, y) witnessed by some z: x U z, not(y U z).

    Defined for arbitrary U; it is the smallest kappa-extension exactly when
    U is kappa-extensible.
    """
    r = u.size
    full = (1 << r) - 1
    rows = list(u.rows)
    for x in range(r):
        for y in range(r):
            if u.rows[x] & ~u.rows[y] & full:
                rows[x] |= 1 << y
    return Relation(r, tuple(rows))


def order_from_ranks(ranks: Sequence[int]) -> Relation:
    """The total order {(x, y) : ranks[x-1] > ranks[y-1]} for a ranking of [r]."""
    r = len(ranks)
    if sorted(ranks) != list(range(1, r + 1)):
        raise ValueError("ranks must be a permutation of [r]")
    rows = [0] * r
    for x in range(r):
        for y in range(r):
            if ranks[x] > ranks[y]:
                rows[x] |= 1 << y
    return Relation(r, tuple(rows))


def gmap_to_relation(m: GMap) -> Relation:
    """The relation {(x, y) : f(x) >= g(f(y))}; INF values contribute nothing."""
    r = m.size
    rows = [0] * r
    for x in range(1, r + 1):
        for y in range(1, r + 1):
            if m.f[x - 1] >= m.g[m.f[y - 1] - 1]:
                rows[x - 1] |= 1 << (y - 1)
    return Relation(r, tuple(rows))


def relation_to_gmap(u: Relation, s: Relation) -> GMap:
    """Recover the (f, g) parameters of U below the total order S.

    f ranks letters by S from the bottom (x S y iff f(x) > f(y)) and
    g(b) is the least f-value among {f(x) : x U y} for the letter y of rank
    b, or INF when y has no U-predecessor.  Requires S to be a total order
    and a kappa-extension of U; the map then inverts gmap_to_relation.
    """
    if not is_total_order(s):
        raise ValueError("S is not a total order")
    if not is_kappa_extension(s, u):
        raise ValueError("S is not a kappa-extension of U")
    r = s.size
    f = tuple(1 + s.rows[x].bit_count() for x in range(r))
    by_rank = [0] * r
    for x in range(1, r + 1):
        by_rank[f[x - 1] - 1] = x
    g: list[int | float] = []
    for b in range(1, r + 1):
        y = by_rank[b - 1]
        preds = [f[x - 1] for x in range(1, r + 1) if u.contains(x, y)]
        g.append(min(preds) if preds else INF)
    return GMap(f, tuple(g))


# ---------------------------------------------------------------------------
# Named relation families


def u_k(r: int, k: int) -> Relation:
    """{(x, y) : x >= y + k}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Relation.from_pairs(
        r, [(x, y) for x in range(1, r + 1) for y in range(1, r + 1) if x >= y + k]
    )


def v_k(r: int, k: int) -> Relation:
    """{(x, y) : y + k > x > y}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Relation.from_pairs(
        r, [(x, y) for x in range(1, r + 1) for y in range(1, r + 1) if y + k > x > y]
    )


def u_ab(r: int, a: Iterable[int], b: Iterable[int]) -> Relation:
    """{(x, y) : x in A, y in B, x > y}."""
    sa, sb = _subset(r, a), _subset(r, b)
    return Relation.from_pairs(r, [(x, y) for x in sa for y in sb if x > y])


def s_ab(r: int, a: Iterable[int], b: Iterable[int]) -> Relation:
    """A-letters above all non-A letters and ordered by > among themselves.

    The second subset does not enter the definition; it is kept so the three
    u_ab/s_ab/s_prime_ab builders share a signature.
    """
    sa = _subset(r, a)
    _subset(r, b)
    pairs = [(x, y) for x in sa for y in range(1, r + 1) if y not in sa]
    pairs += [(x, y) for x in sa for y in sa if x > y]
    return Relation.from_pairs(r, pairs)


def s_prime_ab(r: int, a: Iterable[int], b: Iterable[int]) -> Relation:
    """s_ab completed to a total order by comparing non-A letters with >."""
    sa = _subset(r, a)
    extra = [
        (x, y)
        for x in range(1, r + 1)
        for y in range(1, r + 1)
        if x not in sa and y not in sa and x > y
    ]
    return s_ab(r, a, b) | Relation.from_pairs(r, extra)


def divides(r: int) -> Relation:
    """{(x, y) : x divides y} on [r]."""
    return Relation.from_pairs(
        r, [(x, y) for x in range(1, r + 1) for y in range(1, r + 1) if y % x == 0]
    )


def set_alphabet_relations(
    sets: Sequence[Iterable[int]],
) -> tuple[Relation, Relation, Relation]:
    """Encode disjoint integer sets as letters 1..len(sets); return (U, V, S).

    With B, B' the sets at positions x, y:
      (x, y) in U  iff  min(B) >  max(B'),
      (x, y) in V  iff  max(B') >= min(B) > min(B'),
      (x, y) in S  iff  min(B) >  min(B').
    """
    blocks = [sorted(set(int(v) for v in s)) for s in sets]
    if not blocks:
        raise ValueError("need at least one set")
    seen: set[int] = set()
    for blk in blocks:
        if not blk:
            raise ValueError("empty set in collection")
        if seen & set(blk):
            raise ValueError("sets must be mutually disjoint")
        seen |= set(blk)
    r = len(blocks)
    u_pairs, v_pairs, s_pairs = [], [], []
    for x in range(1, r + 1):
        for y in range(1, r + 1):
            mn_x = blocks[x - 1][0]
            mn_y, mx_y = blocks[y - 1][0], blocks[y - 1][-1]
            if mn_x > mx_y:
                u_pairs.append((x, y))
            if mx_y >= mn_x > mn_y:
                v_pairs.append((x, y))
            if mn_x > mn_y:
                s_pairs.append((x, y))
    return (
        Relation.from_pairs(r, u_pairs),
        Relation.from_pairs(r, v_pairs),
        Relation.from_pairs(r, s_pairs),
    )


def _subset(r: int, letters: Iterable[int]) -> set[int]:
    out = set(int(x) for x in letters)
    for x in out:
        if not 1 <= x <= r:
            raise ValueError(f"letter {x} outside alphabet [{r}]")
    return out
