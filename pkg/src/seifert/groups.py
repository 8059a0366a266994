"""Finite groups as explicit multiplication tables.

A group of order m is a tuple of m rows of m element indices with the
identity at index 0; ``table[g][h]`` is the product g*h.  Construction
validates the whole structure (Latin square, identity, inverses,
associativity), which is cheap at the orders this library works with.

Text format: the order on the first line, then one table row per line as
space separated indices.  Constructor strings build standard groups:
``cyclic:n`` and ``product:spec1,spec2`` (specs nest, the product reads
its two operands recursively).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = len(self.table)
        if m == 0:
            raise ValueError("a group needs at least the identity element")
        for row in self.table:
            if len(row) != m:
                raise ValueError("multiplication table must be square")
            for v in row:
                if not 0 <= v < m:
                    raise ValueError(f"table entry {v} out of range")
        for i in range(m):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("index 0 must be the identity")
            if len(set(self.table[i])) != m:
                raise ValueError(f"row {i} is not a permutation")
            if len({self.table[j][i] for j in range(m)}) != m:
                raise ValueError(f"column {i} is not a permutation")
        for g in range(m):
            for h in range(m):
                gh = self.table[g][h]
                for k in range(m):
                    if self.table[gh][k] != self.table[g][self.table[h][k]]:
                        raise ValueError(
                            f"associativity fails at ({g},{h},{k})")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inverse(self, g: int) -> int:
        return self.table[g].index(0)

    def element_order(self, g: int) -> int:
        k, acc = 1, g
        while acc != 0:
            acc = self.table[acc][g]
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines.extend(" ".join(str(v) for v in row) for row in self.table)
        return "\n".join(lines) + "\n"


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with element k at index k.

    >>> cyclic_group(3).table
    ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    """
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n))
                             for i in range(n)))


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Componentwise product; (i, j) lives at index i*|b| + j."""
    nb = b.order
    size = a.order * nb
    table = []
    for g in range(size):
        row = []
        for h in range(size):
            i = a.mul(g // nb, h // nb)
            j = b.mul(g % nb, h % nb)
            row.append(i * nb + j)
        table.append(tuple(row))
    return FiniteGroup(tuple(table))


def parse_group_text(text: str) -> FiniteGroup:
    """Read the order-then-rows text format."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty group file")
    try:
        m = int(lines[0])
    except ValueError:
        raise ValueError(f"group file: bad order line {lines[0]!r}") from None
    if len(lines) != m + 1:
        raise ValueError(f"group file: expected {m} table rows, got {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        try:
            row = tuple(int(v) for v in ln.split())
        except ValueError:
            raise ValueError(f"group file: bad table row {ln!r}") from None
        table.append(row)
    return FiniteGroup(tuple(table))


def group_from_constructor(spec: str) -> FiniteGroup:
    """Build a group from ``cyclic:n`` / ``product:spec1,spec2`` text."""
    group, rest = _read_constructor(spec.strip())
    if rest:
        raise ValueError(f"trailing text in group constructor: {rest!r}")
    return group


def _read_constructor(text: str) -> tuple[FiniteGroup, str]:
    if text.startswith("cyclic:"):
        rest = text[len("cyclic:"):]
        digits = 0
        while digits < len(rest) and rest[digits].isdigit():
            digits += 1
        if digits == 0:
            raise ValueError(f"cyclic: expects an integer in {text!r}")
        return cyclic_group(int(rest[:digits])), rest[digits:]
    if text.startswith("product:"):
        first, rest = _read_constructor(text[len("product:"):])
        if not rest.startswith(","):
            raise ValueError(f"product: expects two operands in {text!r}")
        second, rest = _read_constructor(rest[1:])
        return direct_product(first, second), rest
    raise ValueError(f"unknown group constructor {text!r}")


@dataclass(frozen=True)
class GroupMap:
    """A map between groups given by the image of every source element."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source.order:
            raise ValueError("need one image per source element")
        for v in self.images:
            if not 0 <= v < self.target.order:
                raise ValueError(f"image {v} out of range")


def is_homomorphism(f: GroupMap) -> bool:
    """Exhaustive check of f(gh) = f(g)f(h) over all pairs."""
    for g in f.source.elements():
        for h in f.source.elements():
            if f.images[f.source.mul(g, h)] != f.target.mul(f.images[g], f.images[h]):
                return False
    return True


def is_injective(f: GroupMap) -> bool:
    return len(set(f.images)) == f.source.order
