"""Seifert symbols over orientable total spaces.

A closed orientable Seifert fibered space with orientable base is written
here as ``(g, o1 | (q1,p1), ..., (qn,pn))`` and one with nonorientable base
as ``(g+1, n2 | ...)``, where the first entry counts handles for class o1
and crosscaps for class n2.  Each pair ``(q, p)`` is a filled boundary
fiber with coprime invariants and ``q >= 1``; pairs with ``q = 1`` carry no
exceptional fiber and only shift the obstruction class.

The normalized form of a symbol keeps the pairs with ``q > 1`` reduced to
``0 < p < q``, sorted, and folds everything that was carried out of range
into a single integer ``b``, the obstruction class.  Two symbols of the
same class and genus describe the same fibered space up to fiber
preserving equivalence exactly when their normalized forms agree, which is
what :func:`equivalent` tests.

>>> str(normalize(parse_symbol("(0,o1|(3,4))")).expand())
'(0,o1|(3,1),(1,1))'
>>> equivalent(parse_symbol("(0,o1|(2,1),(1,1))"), parse_symbol("(0,o1|(2,3))"))
True
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd


class Orientability(Enum):
    """Base surface class of a symbol: ``O1`` orientable, ``N2`` not.

    Both classes carry an orientable total space; the split follows the
    standard o1/n2 naming for Seifert invariants.
    """

    O1 = "o1"
    N2 = "n2"


@dataclass(frozen=True, order=True)
class SeifertPair:
    """One filled fiber ``(q, p)`` with ``q >= 1`` and ``gcd(q, p) = 1``."""

    q: int
    p: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"pair ({self.q},{self.p}): q must be >= 1")
        if gcd(self.q, self.p) != 1:
            raise ValueError(f"pair ({self.q},{self.p}): q and p must be coprime")

    def __str__(self):
        return f"({self.q},{self.p})"


@dataclass(frozen=True)
class SeifertSymbol:
    """A symbol as written, before any normalization."""

    genus: int
    orientability: Orientability
    pairs: tuple[SeifertPair, ...]

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        # n2 counts crosscaps, so the class needs at least one
        if self.orientability is Orientability.N2 and self.genus < 1:
            raise ValueError("class n2 requires genus >= 1")

    def __str__(self):
        body = ",".join(str(pr) for pr in self.pairs)
        return f"({self.genus},{self.orientability.value}|{body})"


@dataclass(frozen=True)
class NormalizedSymbol:
    """Normalized form: sorted exceptional pairs plus obstruction class b.

    Every exceptional pair satisfies ``q > 1`` and ``0 < p < q``; the
    serialization re-expands to a plain symbol with a trailing ``(1, b)``.
    """

    genus: int
    orientability: Orientability
    exceptional: tuple[SeifertPair, ...]
    b: int

    def __post_init__(self):
        for pr in self.exceptional:
            if pr.q <= 1 or not 0 < pr.p < pr.q:
                raise ValueError(f"exceptional pair {pr} is not in normal range")
        if tuple(sorted(self.exceptional)) != self.exceptional:
            raise ValueError("exceptional pairs must be sorted")

    def expand(self) -> SeifertSymbol:
        """The expanded symbol, exceptional pairs then ``(1, b)``."""
        pairs = self.exceptional + (SeifertPair(1, self.b),)
        return SeifertSymbol(self.genus, self.orientability, pairs)

    def __str__(self):
        return str(self.expand())


class SymbolSyntaxError(ValueError):
    """Raised on malformed symbol text; ``position`` is a 0-based index."""

    def __init__(self, position: int, message: str):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


class _SymbolParser:
    # Tiny recursive-descent reader.  Whitespace is skipped everywhere, so
    # positions reported in errors index the original text.

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str):
        if self._peek() != ch:
            raise SymbolSyntaxError(self.pos, f"expected '{ch}'")
        self.pos += 1

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self._peek() == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise SymbolSyntaxError(start, "expected an integer")
        return int(self.text[start:self.pos])

    def _orientability(self) -> Orientability:
        self._skip_ws()
        for cls in Orientability:
            token = cls.value
            if self.text[self.pos:self.pos + len(token)] == token:
                self.pos += len(token)
                return cls
        raise SymbolSyntaxError(self.pos, "expected class 'o1' or 'n2'")

    def _pair(self) -> SeifertPair:
        start = self.pos
        self._expect("(")
        q = self._int()
        self._expect(",")
        p = self._int()
        self._expect(")")
        try:
            return SeifertPair(q, p)
        except ValueError as exc:
            raise SymbolSyntaxError(start, str(exc)) from None

    def parse(self) -> SeifertSymbol:
        start = self.pos
        self._expect("(")
        genus = self._int()
        self._expect(",")
        cls = self._orientability()
        self._expect("|")
        pairs = []
        if self._peek() != ")":
            pairs.append(self._pair())
            while self._peek() == ",":
                self.pos += 1
                pairs.append(self._pair())
        self._expect(")")
        self._skip_ws()
        if self.pos != len(self.text):
            raise SymbolSyntaxError(self.pos, "trailing input after symbol")
        try:
            return SeifertSymbol(genus, cls, tuple(pairs))
        except ValueError as exc:
            raise SymbolSyntaxError(start, str(exc)) from None


def parse_symbol(text: str) -> SeifertSymbol:
    """Parse ``(genus,class|(q,p),...)`` text, whitespace insensitive.

    >>> parse_symbol(" ( 1 , n2 | ( 2 , 1 ) ) ")
    SeifertSymbol(genus=1, orientability=<Orientability.N2: 'n2'>, pairs=(SeifertPair(q=2, p=1),))
    """
    return _SymbolParser(text).parse()


def total_sum(symbol: SeifertSymbol) -> Fraction:
    """Exact sum of p/q over all pairs, invariant under normalization.

    >>> total_sum(parse_symbol("(0,o1|(2,1),(3,2),(1,1))"))
    Fraction(13, 6)
    """
    return sum((Fraction(pr.p, pr.q) for pr in symbol.pairs), Fraction(0))


def normalize(symbol: SeifertSymbol) -> NormalizedSymbol:
    """Reduce every pair into normal range, folding carries into b.

    A pair (q, p) with q > 1 becomes (q, p mod q) and the integer part
    (p - p mod q)/q moves into b; pairs with q = 1 dissolve into b
    entirely.  The total sum is preserved exactly.
    """
    b = 0
    exceptional = []
    for pr in symbol.pairs:
        if pr.q == 1:
            b += pr.p
            continue
        r = pr.p % pr.q
        # gcd(q, p) = 1 with q > 1 rules out r = 0
        b += (pr.p - r) // pr.q
        exceptional.append(SeifertPair(pr.q, r))
    return NormalizedSymbol(symbol.genus, symbol.orientability,
                            tuple(sorted(exceptional)), b)


def obstruction_class(symbol: SeifertSymbol) -> int:
    """The integer b of the normalized form.

    >>> obstruction_class(parse_symbol("(0,o1|(3,4),(3,5))"))
    2
    """
    return normalize(symbol).b


def equivalent(a: SeifertSymbol, b: SeifertSymbol) -> bool:
    """Fiber preserving equivalence at fixed genus and class.

    True exactly when genus and class agree and the normalized forms
    coincide (same exceptional multiset, same obstruction class; the two
    together pin the exact total sum).  Symbols of different genus or
    class are never reported equivalent.
    """
    if (a.genus, a.orientability) != (b.genus, b.orientability):
        return False
    return normalize(a) == normalize(b)


def orientable_double_cover(symbol: SeifertSymbol) -> SeifertSymbol:
    """The orientable-base double cover of a class n2 symbol.

    ``(g+1, n2 | (q1,p1), ..., (qn,pn))`` is covered by
    ``(g, o1 | (q1,p1), (q1,p1), ..., (qn,pn), (qn,pn))``: one handle
    fewer than there were crosscaps, every pair listed twice, adjacent.

    >>> str(orientable_double_cover(parse_symbol("(1,n2|(2,1))")))
    '(0,o1|(2,1),(2,1))'
    """
    if symbol.orientability is not Orientability.N2:
        raise ValueError("orientable_double_cover expects a class n2 symbol")
    doubled = []
    for pr in symbol.pairs:
        doubled.append(pr)
        doubled.append(pr)
    return SeifertSymbol(symbol.genus - 1, Orientability.O1, tuple(doubled))


def _halved(pairs: tuple[SeifertPair, ...]) -> tuple[SeifertPair, ...] | None:
    # Literal doubling patterns invert exactly: adjacent (a,a,b,b,...)
    # and block (a,b,...,a,b,...).
    if len(pairs) % 2:
        return None
    n = len(pairs) // 2
    if all(pairs[2 * i] == pairs[2 * i + 1] for i in range(n)):
        return pairs[0::2]
    if pairs[:n] == pairs[n:]:
        return pairs[:n]
    return None


def base_quotient(symbol: SeifertSymbol) -> SeifertSymbol | None:
    """Invert :func:`orientable_double_cover` when possible.

    For a class o1 symbol whose pair list is literally doubled the halved
    class n2 symbol is returned exactly.  Otherwise the normalized form is
    inspected: if the exceptional multiset is a doubled multiset and the
    obstruction class is even, a quotient is assembled from the halves
    (its cover is equivalent, not necessarily equal, to the input).
    Returns None when no quotient exists.

    >>> str(base_quotient(parse_symbol("(0,o1|(2,1),(2,1))")))
    '(1,n2|(2,1))'
    >>> base_quotient(parse_symbol("(0,o1|(2,1),(3,1))")) is None
    True
    """
    if symbol.orientability is not Orientability.O1:
        raise ValueError("base_quotient expects a class o1 symbol")
    half = _halved(symbol.pairs)
    if half is not None:
        return SeifertSymbol(symbol.genus + 1, Orientability.N2, half)
    norm = normalize(symbol)
    counts = Counter(norm.exceptional)
    if norm.b % 2 or any(c % 2 for c in counts.values()):
        return None
    halves: list[SeifertPair] = []
    for pr in sorted(counts):
        halves.extend([pr] * (counts[pr] // 2))
    if norm.b != 0:
        halves.append(SeifertPair(1, norm.b // 2))
    return SeifertSymbol(symbol.genus + 1, Orientability.N2, tuple(halves))
