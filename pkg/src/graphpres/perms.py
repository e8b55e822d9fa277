"""Permutations and multiplication tables of finite permutation groups.

Everything here is exact and immutable; group elements are referred to by
their index in a deterministically ordered element list.
"""

from __future__ import annotations

from typing import Iterable, Sequence

CLOSURE_LIMIT = 100_000


class ClosureLimitError(RuntimeError):
    """Raised when a breadth-first closure exceeds its element limit."""


class Perm:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection of 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    @staticmethod
    def identity(degree: int) -> Perm:
        return Perm(range(degree))

    @staticmethod
    def transposition(degree: int, i: int, j: int) -> Perm:
        images = list(range(degree))
        images[i], images[j] = j, i
        return Perm(images)

    @staticmethod
    def from_cycle(degree: int, points: Sequence[int]) -> Perm:
        images = list(range(degree))
        pts = list(points)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
        return Perm(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Perm) -> Perm:
        return perm_compose(self, other)

    def inverse(self) -> Perm:
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Perm(images)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = perm_compose(p, self)
            n += 1
        return n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            k = self.images[start]
            while k != start:
                cyc.append(k)
                seen[k] = True
                k = self.images[k]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "Perm(id/%d)" % self.degree
        return "Perm(%s)" % "".join("(%s)" % " ".join(map(str, c)) for c in cyc)


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Left-action composition: (p*q)(i) = p(q(i))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    qi = q.images
    pi = p.images
    return Perm(pi[j] for j in qi)


class FiniteGroupTable:
    """A finite group given by its ordered element list and product table.

    Element 0 is always the identity.  `mul[i][j]` is the index of
    elements[i] * elements[j], and `inv[i]` the index of the inverse.
    """

    def __init__(self, elements: Sequence[Perm], gen_indices: Sequence[int] = ()):
        self.elements = list(elements)
        if not self.elements or not self.elements[0].is_identity():
            raise ValueError("element 0 must be the identity")
        self.index = {p: i for i, p in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        n = len(self.elements)
        by_images = {p.images: i for i, p in enumerate(self.elements)}
        self.mul = []
        for p in self.elements:
            pi = p.images
            row = []
            for q in self.elements:
                try:
                    row.append(by_images[tuple(pi[k] for k in q.images)])
                except KeyError:
                    raise ValueError("element set is not closed under products")
            self.mul.append(row)
        self.inv = [0] * n
        for i, p in enumerate(self.elements):
            self.inv[i] = by_images[p.inverse().images]
        self.gen_indices = tuple(gen_indices)

    @property
    def order(self) -> int:
        return len(self.elements)

    def product(self, i: int, j: int) -> int:
        return self.mul[i][j]

    def inverse(self, i: int) -> int:
        return self.inv[i]

    def word_product(self, indices: Iterable[int]) -> int:
        acc = 0
        for i in indices:
            acc = self.mul[acc][i]
        return acc

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def element_order(self, i: int) -> int:
        n, k = 1, i
        while k != 0:
            k = self.mul[k][i]
            n += 1
        return n

    def is_subgroup(self, indices: Iterable[int]) -> bool:
        s = set(indices)
        if 0 not in s:
            return False
        return all(self.mul[a][b] in s for a in s for b in s)

    def subgroup_closure(self, gens: Iterable[int]) -> tuple[int, ...]:
        """Indices of the subgroup generated, in increasing order."""
        found = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul[a][g]
                    if b not in found:
                        found.add(b)
                        nxt.append(b)
            frontier = nxt
        return tuple(sorted(found))


def generate_closure(gens: Sequence[Perm], limit: int = CLOSURE_LIMIT) -> FiniteGroupTable:
    """Breadth-first closure of a nonempty generating set of equal degree.

    Element order is deterministic: identity first, then BFS layers with the
    generators applied on the right in their given order.
    """
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must have equal degree")
    identity = Perm.identity(degree)
    elements = [identity]
    seen = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = perm_compose(p, g)
                if q not in seen:
                    if len(elements) >= limit:
                        raise ClosureLimitError(f"closure exceeded {limit} elements")
                    seen[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
        frontier = nxt
    gen_indices = [seen[g] for g in gens]
    return FiniteGroupTable(elements, gen_indices)


def left_cosets(table: FiniteGroupTable, subgroup: Iterable[int],
                within: Iterable[int] | None = None) -> tuple[int, ...]:
    """Least-index representatives of the left cosets g*S.

    `within` restricts to cosets of S inside a subgroup containing S;
    by default, the whole group.  The identity always represents S itself.
    """
    sub = sorted(set(subgroup))
    if not table.is_subgroup(sub):
        raise ValueError("subgroup is not closed")
    ambient = sorted(set(within)) if within is not None else range(table.order)
    assigned: set[int] = set()
    reps = []
    for g in ambient:
        if g in assigned:
            continue
        reps.append(g)
        for s in sub:
            assigned.add(table.mul[g][s])
    return tuple(reps)
