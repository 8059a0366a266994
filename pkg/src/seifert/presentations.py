"""Fundamental group presentations read off a Seifert symbol.

Generators follow a fixed naming order: handle generators a1, b1, ...,
then the crosscap generators x (and y when the crosscap count is even),
then one c per listed pair, then the regular fiber t.  Relator words are
stored with commutators expanded, so ``[a, t]`` appears as
``a t a^-1 t^-1``.  The class n2 templates split on the parity of
``g = genus - 1``, the handle count of the orientable base the symbol
double covers.

A word is a tuple of (generator index, exponent) syllables, freely
reduced at the syllable level; :func:`word` builds one from raw
syllables.  Text export writes each relator in ``c1^2*t`` form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .symbols import Orientability, SeifertSymbol

Syllable = tuple[int, int]


def word(*syllables: Syllable) -> tuple[Syllable, ...]:
    """Merge adjacent same-generator syllables and drop zero exponents.

    >>> word((0, 1), (0, 1), (1, -1), (1, 1))
    ((0, 2),)
    """
    out: list[Syllable] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


def _commutator(a: int, b: int) -> tuple[Syllable, ...]:
    return word((a, 1), (b, 1), (a, -1), (b, -1))


@dataclass(frozen=True)
class Presentation:
    """Finitely presented group: generator names and relator words."""

    generators: tuple[str, ...]
    relators: tuple[tuple[Syllable, ...], ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        for rel in self.relators:
            for i, (gen, exp) in enumerate(rel):
                if not 0 <= gen < len(self.generators):
                    raise ValueError(f"relator uses unknown generator {gen}")
                if exp == 0:
                    raise ValueError("zero exponent in relator")
                if i and rel[i - 1][0] == gen:
                    raise ValueError("relator is not freely reduced")

    def format_word(self, rel: tuple[Syllable, ...]) -> str:
        if not rel:
            return "1"
        parts = []
        for gen, exp in rel:
            name = self.generators[gen]
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return "*".join(parts)

    def export_text(self) -> str:
        """Generator list on the first line, then one relator per line."""
        lines = [" ".join(self.generators)]
        lines.extend(self.format_word(rel) for rel in self.relators)
        return "\n".join(lines)


def _named(count: int, stem: str) -> list[str]:
    return [f"{stem}{i + 1}" for i in range(count)]


def _assemble(generators: list[str], relators: list[tuple[Syllable, ...]]) -> Presentation:
    # The surface relator degenerates to the empty word for (0,o1|); empty
    # relators say nothing and are dropped.
    return Presentation(tuple(generators), tuple(r for r in relators if r))


def _handle_names(handles: int) -> list[str]:
    names = []
    for i in range(handles):
        names.append(f"a{i + 1}")
        names.append(f"b{i + 1}")
    return names


def pi1_nonorientable(symbol: SeifertSymbol) -> Presentation:
    """Fundamental group of a class n2 symbol.

    With ``g = genus - 1`` handles on the covered base, the generators are
    a1, b1, ..., x (plus y when g is odd), c1..cn, t.  The fiber t
    commutes with the handle and c generators, x conjugates it to its
    inverse, y commutes with it, each pair imposes ``cj^qj t^pj`` and the
    base surface imposes its boundary word.
    """
    if symbol.orientability is not Orientability.N2:
        raise ValueError("pi1_nonorientable expects a class n2 symbol")
    g = symbol.genus - 1
    n = len(symbol.pairs)
    handles = g // 2
    names = _handle_names(handles) + ["x"]
    odd = g % 2 == 1
    if odd:
        names.append("y")
    names += _named(n, "c")
    names.append("t")

    x = names.index("x")
    t = len(names) - 1
    c0 = x + (2 if odd else 1)
    relators: list[tuple[Syllable, ...]] = []
    for i in range(handles):
        relators.append(_commutator(2 * i, t))        # [a_i, t]
        relators.append(_commutator(2 * i + 1, t))    # [b_i, t]
    for j in range(n):
        relators.append(_commutator(c0 + j, t))
    relators.append(word((x, 1), (t, 1), (x, -1), (t, 1)))   # x t x^-1 = t^-1
    if odd:
        y = x + 1
        relators.append(_commutator(y, t))                   # y t y^-1 = t
    for j, pr in enumerate(symbol.pairs):
        relators.append(word((c0 + j, pr.q), (t, pr.p)))
    surface = [(c0 + j, 1) for j in range(n)]
    for i in range(handles):
        surface.extend(_commutator(2 * i, 2 * i + 1))
    if odd:
        surface.extend(word((x, 1), (y, 1), (x, -1), (y, 1)))
    else:
        surface.append((x, -2))
    relators.append(word(*surface))
    return _assemble(names, relators)


def pi1_orientable(symbol: SeifertSymbol) -> Presentation:
    """Fundamental group of a class o1 symbol.

    Generators a1, b1, ..., ag, bg, c1..cn, t; the fiber is central, each
    pair imposes ``cj^qj t^pj`` and the base imposes
    ``c1..cn [a1,b1]..[ag,bg]``.
    """
    if symbol.orientability is not Orientability.O1:
        raise ValueError("pi1_orientable expects a class o1 symbol")
    g = symbol.genus
    n = len(symbol.pairs)
    names = _handle_names(g) + _named(n, "c") + ["t"]
    c0 = 2 * g
    t = len(names) - 1
    relators: list[tuple[Syllable, ...]] = []
    for i in range(g):
        relators.append(_commutator(2 * i, t))
        relators.append(_commutator(2 * i + 1, t))
    for j in range(n):
        relators.append(_commutator(c0 + j, t))
    for j, pr in enumerate(symbol.pairs):
        relators.append(word((c0 + j, pr.q), (t, pr.p)))
    surface = [(c0 + j, 1) for j in range(n)]
    for i in range(g):
        surface.extend(_commutator(2 * i, 2 * i + 1))
    relators.append(word(*surface))
    return _assemble(names, relators)


def orbifold_pi1(symbol: SeifertSymbol) -> Presentation:
    """Base orbifold group: the fiber quotiented away.

    Same generators without t; fiber commutators disappear, each filling
    relator loses its t tail, the surface relator is unchanged.
    """
    if symbol.orientability is Orientability.N2:
        g = symbol.genus - 1
        handles = g // 2
        odd = g % 2 == 1
    else:
        g = symbol.genus
        handles = g
        odd = False
    n = len(symbol.pairs)
    names = _handle_names(handles)
    if symbol.orientability is Orientability.N2:
        names.append("x")
        if odd:
            names.append("y")
    names += _named(n, "c")
    c0 = len(names) - n
    relators: list[tuple[Syllable, ...]] = []
    for j, pr in enumerate(symbol.pairs):
        relators.append(word((c0 + j, pr.q)))
    surface = [(c0 + j, 1) for j in range(n)]
    for i in range(handles):
        surface.extend(_commutator(2 * i, 2 * i + 1))
    if symbol.orientability is Orientability.N2:
        x = names.index("x")
        if odd:
            y = x + 1
            surface.extend(word((x, 1), (y, 1), (x, -1), (y, 1)))
        else:
            surface.append((x, -2))
    relators.append(word(*surface))
    return _assemble(names, relators)


def abelianize(presentation: Presentation) -> list[list[int]]:
    """Exponent-sum matrix, one row per relator, one column per generator."""
    cols = len(presentation.generators)
    rows = []
    for rel in presentation.relators:
        row = [0] * cols
        for gen, exp in rel:
            row[gen] += exp
        rows.append(row)
    return rows
