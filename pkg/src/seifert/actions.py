"""Finite group actions on a fibered space in extended product form.

The data of an action of a finite group G is recorded per element g as

* ``theta1(g)``, the rotation of the trivially fibered part in Q/Z,
* ``alpha(g) = +-1``, whether g preserves the fiber orientation,
* ``beta(g)``, the permutation of the filled boundary fibers,
* ``theta2(i, g)``, the meridian rotation at boundary index i.

Composition is the left action convention, phi(gh) = phi(g) o phi(h),
which forces the cocycle laws checked by :func:`validate_action_spec`:

    (a)  alpha(gh) = alpha(g) * alpha(h)
    (b)  theta1(gh) = theta1(g) + alpha(g) * theta1(h)      (mod 1)
    (c)  beta(gh) = beta(g) o beta(h)
    (d)  theta2(i, gh) = theta2(beta(h)(i), g) + alpha(g) * theta2(i, h)
    (e)  beta(g) may send i to j only if pair i equals pair j

plus triviality of the identity element's datum.  Rotation numbers are
exact fractions in [0, 1); all checks are exhaustive and exact.

The covering-translation machinery works on symbols whose pair list is
doubled in blocks, pairs i and i+n equal for i < n.  The translation is
modeled on boundary data as the index swap sigma(i) = i + n together
with inversion of the fiber and meridian coordinates.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .groups import FiniteGroup, group_from_constructor, parse_group_text
from .symbols import Orientability, SeifertPair, SeifertSymbol, parse_symbol


def mod1(value: Fraction) -> Fraction:
    return value % 1


@dataclass(frozen=True)
class ExtendedProductActionSpec:
    """One finite action in extended product form; tables index by element.

    ``theta2[g][i]`` is the meridian rotation of element g at boundary
    index i (0-based).  File documents store the transpose, see
    :func:`parse_action_spec_text`.
    """

    symbol: SeifertSymbol
    group: FiniteGroup
    theta1: tuple[Fraction, ...]
    alpha: tuple[int, ...]
    beta: tuple[tuple[int, ...], ...]
    theta2: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        order = self.group.order
        n = len(self.symbol.pairs)
        if len(self.theta1) != order:
            raise ValueError(f"theta1 has {len(self.theta1)} entries, group order is {order}")
        if len(self.alpha) != order:
            raise ValueError(f"alpha has {len(self.alpha)} entries, group order is {order}")
        if len(self.beta) != order:
            raise ValueError(f"beta has {len(self.beta)} rows, group order is {order}")
        if len(self.theta2) != order:
            raise ValueError(f"theta2 has {len(self.theta2)} rows, group order is {order}")
        for v in self.theta1:
            _check_rotation(v, "theta1")
        for v in self.alpha:
            if v not in (1, -1):
                raise ValueError(f"alpha values must be +1 or -1, got {v}")
        for row in self.beta:
            if len(row) != n or sorted(row) != list(range(n)):
                raise ValueError(f"beta row {row} is not a permutation of {n} indices")
        for row in self.theta2:
            if len(row) != n:
                raise ValueError(f"theta2 row has {len(row)} entries, symbol has {n} pairs")
            for v in row:
                _check_rotation(v, "theta2")


def _check_rotation(value: Fraction, where: str):
    if not isinstance(value, Fraction) or not 0 <= value < 1:
        raise ValueError(f"{where}: rotation numbers must be fractions in [0,1), got {value!r}")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a law check; ``law`` and ``witness`` name the failure."""

    ok: bool
    law: str | None
    witness: tuple | None
    message: str

    def __bool__(self):
        return self.ok


_PASS = ValidationReport(True, None, None, "all laws hold")


def validate_action_spec(spec: ExtendedProductActionSpec) -> ValidationReport:
    """Check the identity datum and the cocycle laws (a) to (e).

    Structure (table sizes, value ranges) is enforced at construction, so
    this checks only the laws, in a fixed order, returning the first
    failure with its witness.
    """
    group = spec.group
    n = len(spec.symbol.pairs)
    if (spec.theta1[0] != 0 or spec.alpha[0] != 1
            or spec.beta[0] != tuple(range(n))
            or any(v != 0 for v in spec.theta2[0])):
        return ValidationReport(False, "identity", (0,),
                                "the identity element must act by the trivial datum")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            if spec.alpha[gh] != spec.alpha[g] * spec.alpha[h]:
                return ValidationReport(
                    False, "alpha", (g, h),
                    f"alpha({gh}) != alpha({g})*alpha({h})")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            want = mod1(spec.theta1[g] + spec.alpha[g] * spec.theta1[h])
            if spec.theta1[gh] != want:
                return ValidationReport(
                    False, "theta1", (g, h),
                    f"theta1({gh}) = {spec.theta1[gh]}, law gives {want}")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            composed = tuple(spec.beta[g][spec.beta[h][i]] for i in range(n))
            if spec.beta[gh] != composed:
                return ValidationReport(
                    False, "beta", (g, h),
                    f"beta({gh}) is not beta({g}) o beta({h})")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            for i in range(n):
                want = mod1(spec.theta2[g][spec.beta[h][i]]
                            + spec.alpha[g] * spec.theta2[h][i])
                if spec.theta2[gh][i] != want:
                    return ValidationReport(
                        False, "theta2", (g, h, i),
                        f"theta2({i},{gh}) = {spec.theta2[gh][i]}, law gives {want}")
    pairs = spec.symbol.pairs
    for g in group.elements():
        for i in range(n):
            if pairs[spec.beta[g][i]] != pairs[i]:
                return ValidationReport(
                    False, "pairs", (g, i),
                    f"beta({g}) moves pair {i} onto a different (q,p)")
    return _PASS


@dataclass(frozen=True)
class GluingMatrix:
    """Exponent matrix [[x, p], [y, q]] of a solid torus filling.

    Determinant x*q - p*y = 1; x is the least non-negative solution,
    which lies in [0, q) whenever the pair is normalized.
    """

    x: int
    y: int
    pair: SeifertPair

    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.x, self.pair.p), (self.y, self.pair.q))

    def inverse_rotation(self, fiber: Fraction, meridian: Fraction) -> tuple[Fraction, Fraction]:
        """Apply the inverse matrix to a rotation vector in (Q/Z)^2."""
        q, p = self.pair.q, self.pair.p
        return (mod1(q * fiber - p * meridian),
                mod1(-self.y * fiber + self.x * meridian))


def gluing_matrix(pair: SeifertPair) -> GluingMatrix:
    """Canonical filling matrix for one pair.

    >>> gluing_matrix(SeifertPair(3, 1)).matrix()
    ((0, 1), (-1, 3))
    >>> gluing_matrix(SeifertPair(5, 2)).matrix()
    ((1, 2), (2, 5))
    """
    q, p = pair.q, pair.p
    if q == 1:
        return GluingMatrix(1, 0, pair)
    # q > 1 forces p != 0; solutions are spaced |p| apart in x
    x = pow(q, -1, abs(p))
    y = (x * q - 1) // p
    return GluingMatrix(x, y, pair)


@dataclass(frozen=True)
class TorusMapData:
    """Rotation of a filled solid torus: longitude, meridian, sign."""

    longitude: Fraction
    meridian: Fraction
    sign: int


def induced_solid_torus_action(spec: ExtendedProductActionSpec,
                               boundary_index: int, element: int,
                               check: bool = True) -> TorusMapData:
    """Conjugate one boundary datum through the filling.

    The boundary torus map (theta1, theta2, alpha) at index i lands in the
    solid torus glued at beta(g)(i); the rotation vector transforms by the
    inverse of that pair's gluing matrix and the sign is untouched.
    """
    if check:
        report = validate_action_spec(spec)
        if not report:
            raise ValueError(f"spec fails validation: {report.message}")
    target = spec.beta[element][boundary_index]
    glue = gluing_matrix(spec.symbol.pairs[target])
    longitude, meridian = glue.inverse_rotation(
        spec.theta1[element], spec.theta2[element][boundary_index])
    return TorusMapData(longitude, meridian, spec.alpha[element])


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, s, t) with a*s + b*t = g
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def obstruction_witness(b: int, orbit_numbers) -> list[int] | None:
    """Solve b = sum(b_i * orbit_i) over the integers, or report None.

    Solvable exactly when gcd of the orbit numbers divides b; the witness
    comes from chaining the extended Euclid identity.

    >>> obstruction_witness(1, [2, 3])
    [-1, 1]
    >>> obstruction_witness(3, [4, 6]) is None
    True
    """
    orbits = list(orbit_numbers)
    if not orbits:
        raise ValueError("at least one orbit number is required")
    if any(o < 1 for o in orbits):
        raise ValueError("orbit numbers must be positive")
    g = orbits[0]
    coeffs = [1]
    for o in orbits[1:]:
        g, s, t = _egcd(g, o)
        coeffs = [c * s for c in coeffs] + [t]
    if b % g:
        return None
    scale = b // g
    return [c * scale for c in coeffs]


def beta_orbit_numbers(spec: ExtendedProductActionSpec, check: bool = True) -> tuple[int, ...]:
    """Sizes of the boundary-index orbits under all of beta, sorted."""
    if check:
        report = validate_action_spec(spec)
        if not report:
            raise ValueError(f"spec fails validation: {report.message}")
    n = len(spec.symbol.pairs)
    seen: set[int] = set()
    sizes = []
    for start in range(n):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for g in spec.group.elements():
                w = spec.beta[g][v]
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        seen |= orbit
        sizes.append(len(orbit))
    return tuple(sorted(sizes))


@dataclass(frozen=True)
class TauReport:
    """Outcome of the covering-translation commutation test."""

    ok: bool
    condition: str | None
    witness: tuple | None
    message: str

    def __bool__(self):
        return self.ok


_TAU_PASS = TauReport(True, None, None, "commutes with the covering translation")


def _doubled_half(symbol: SeifertSymbol) -> int:
    if symbol.orientability is not Orientability.O1:
        raise ValueError("covering-translation checks need a class o1 symbol")
    n2 = len(symbol.pairs)
    if n2 % 2 or symbol.pairs[:n2 // 2] != symbol.pairs[n2 // 2:]:
        raise ValueError("symbol pair list is not doubled in blocks (pair i must equal pair i+n)")
    return n2 // 2


def check_tau_commuting(spec: ExtendedProductActionSpec, check: bool = True) -> TauReport:
    """Does the action data commute with the covering translation?

    The symbol must be block doubled and the action must preserve fiber
    orientation (alpha identically +1); both are preconditions and raise.
    The three commutation conditions are then checked exactly: every
    theta1 lies in {0, 1/2}, every beta commutes with sigma, and theta2
    is negated by sigma.
    """
    n = _doubled_half(spec.symbol)
    if any(a != 1 for a in spec.alpha):
        raise ValueError("commutation requires a fiber-orientation-preserving action (alpha == +1)")
    if check:
        report = validate_action_spec(spec)
        if not report:
            raise ValueError(f"spec fails validation: {report.message}")
    half = Fraction(1, 2)
    for g in spec.group.elements():
        if spec.theta1[g] not in (0, half):
            return TauReport(False, "half-rotation", (g,),
                             f"theta1({g}) = {spec.theta1[g]} is not 0 or 1/2")
    two_n = 2 * n
    for g in spec.group.elements():
        for i in range(two_n):
            sigma_i = (i + n) % two_n
            if spec.beta[g][sigma_i] != (spec.beta[g][i] + n) % two_n:
                return TauReport(False, "sigma-equivariance", (g, i),
                                 f"beta({g}) does not commute with the index swap at {i}")
    for g in spec.group.elements():
        for i in range(two_n):
            sigma_i = (i + n) % two_n
            if spec.theta2[g][sigma_i] != mod1(-spec.theta2[g][i]):
                return TauReport(False, "meridian-antisymmetry", (g, i),
                                 f"theta2({sigma_i},{g}) is not -theta2({i},{g})")
    return _TAU_PASS


@dataclass(frozen=True)
class ProjectedActionDescriptor:
    """Action data folded onto the nonorientable-base quotient.

    ``epsilon`` records the fiber behavior (+1 rotation-free lift, -1 the
    half-turn lift), ``beta_bar`` permutes the n folded boundary indices
    and ``theta2_bar`` keeps the meridian rotation of the representative
    index i < n.
    """

    base: SeifertSymbol
    group: FiniteGroup
    epsilon: tuple[int, ...]
    beta_bar: tuple[tuple[int, ...], ...]
    theta2_bar: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.base.orientability is not Orientability.N2:
            raise ValueError("descriptor base symbol must be class n2")
        order = self.group.order
        n = len(self.base.pairs)
        if len(self.epsilon) != order:
            raise ValueError(f"epsilon has {len(self.epsilon)} entries, group order is {order}")
        if len(self.beta_bar) != order:
            raise ValueError(f"beta_bar has {len(self.beta_bar)} rows, group order is {order}")
        if len(self.theta2_bar) != order:
            raise ValueError(f"theta2_bar has {len(self.theta2_bar)} rows, group order is {order}")
        for v in self.epsilon:
            if v not in (1, -1):
                raise ValueError(f"epsilon values must be +1 or -1, got {v}")
        for row in self.beta_bar:
            if len(row) != n or sorted(row) != list(range(n)):
                raise ValueError(f"beta_bar row {row} is not a permutation of {n} indices")
        for row in self.theta2_bar:
            if len(row) != n:
                raise ValueError(f"theta2_bar row has {len(row)} entries, base has {n} pairs")
            for v in row:
                _check_rotation(v, "theta2_bar")


def validate_descriptor(descriptor: ProjectedActionDescriptor) -> ValidationReport:
    """Cocycle laws for folded data.

    epsilon and beta_bar must be homomorphisms, theta2_bar obeys the
    folded law theta2_bar(i, gh) = epsilon(h) * theta2_bar(beta_bar(h)(i), g)
    + theta2_bar(i, h), and beta_bar respects the (q, p) values.
    """
    group = descriptor.group
    n = len(descriptor.base.pairs)
    if (descriptor.epsilon[0] != 1
            or descriptor.beta_bar[0] != tuple(range(n))
            or any(v != 0 for v in descriptor.theta2_bar[0])):
        return ValidationReport(False, "identity", (0,),
                                "the identity element must act by the trivial datum")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            if descriptor.epsilon[gh] != descriptor.epsilon[g] * descriptor.epsilon[h]:
                return ValidationReport(False, "epsilon", (g, h),
                                        f"epsilon({gh}) != epsilon({g})*epsilon({h})")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            composed = tuple(descriptor.beta_bar[g][descriptor.beta_bar[h][i]]
                             for i in range(n))
            if descriptor.beta_bar[gh] != composed:
                return ValidationReport(False, "beta_bar", (g, h),
                                        f"beta_bar({gh}) is not beta_bar({g}) o beta_bar({h})")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            for i in range(n):
                want = mod1(descriptor.epsilon[h]
                            * descriptor.theta2_bar[g][descriptor.beta_bar[h][i]]
                            + descriptor.theta2_bar[h][i])
                if descriptor.theta2_bar[gh][i] != want:
                    return ValidationReport(
                        False, "theta2_bar", (g, h, i),
                        f"theta2_bar({i},{gh}) = {descriptor.theta2_bar[gh][i]}, law gives {want}")
    pairs = descriptor.base.pairs
    for g in group.elements():
        for i in range(n):
            if pairs[descriptor.beta_bar[g][i]] != pairs[i]:
                return ValidationReport(False, "pairs", (g, i),
                                        f"beta_bar({g}) moves pair {i} onto a different (q,p)")
    return _PASS


def project_action(spec: ExtendedProductActionSpec) -> ProjectedActionDescriptor:
    """Fold a commuting action through the covering translation.

    Requires :func:`check_tau_commuting` to pass.  The base symbol is the
    block half of the doubled symbol, epsilon reads off theta1, beta_bar
    folds indices mod n and theta2_bar keeps the representative rows.

    The fold is faithful, and the result passes
    :func:`validate_descriptor`, exactly when each element crosses the
    two blocks at every index or at none, matching its epsilon; outputs
    of :func:`lift_action` always have that shape.  Commuting actions
    with other crossing patterns fold to the same literal data, which
    the caller should validate before relying on.
    """
    tau = check_tau_commuting(spec)
    if not tau:
        raise ValueError(f"action does not commute with the covering translation: {tau.message}")
    n = len(spec.symbol.pairs) // 2
    base = SeifertSymbol(spec.symbol.genus + 1, Orientability.N2, spec.symbol.pairs[:n])
    epsilon = tuple(1 if spec.theta1[g] == 0 else -1 for g in spec.group.elements())
    beta_bar = tuple(tuple(spec.beta[g][i] % n for i in range(n))
                     for g in spec.group.elements())
    theta2_bar = tuple(tuple(spec.theta2[g][:n]) for g in spec.group.elements())
    return ProjectedActionDescriptor(base, spec.group, epsilon, beta_bar, theta2_bar)


def lift_action(descriptor: ProjectedActionDescriptor) -> ExtendedProductActionSpec:
    """Build the canonical commuting action over a folded descriptor.

    The doubled symbol lists the base pairs twice in blocks.  Elements
    with epsilon = -1 lift with fiber rotation 1/2 and cross the two
    blocks; elements with epsilon = +1 preserve each block.  theta2 is
    extended antisymmetrically.  The result always passes
    :func:`validate_action_spec` and :func:`check_tau_commuting`, and
    :func:`project_action` recovers the descriptor exactly.
    """
    report = validate_descriptor(descriptor)
    if not report:
        raise ValueError(f"descriptor fails validation: {report.message}")
    base = descriptor.base
    n = len(base.pairs)
    symbol = SeifertSymbol(base.genus - 1, Orientability.O1, base.pairs + base.pairs)
    order = descriptor.group.order
    theta1 = tuple(Fraction(0) if descriptor.epsilon[g] == 1 else Fraction(1, 2)
                   for g in range(order))
    alpha = (1,) * order
    beta = []
    theta2 = []
    for g in range(order):
        cross = descriptor.epsilon[g] == -1
        row = [0] * (2 * n)
        for i in range(n):
            j = descriptor.beta_bar[g][i]
            if cross:
                row[i], row[i + n] = j + n, j
            else:
                row[i], row[i + n] = j, j + n
        beta.append(tuple(row))
        front = descriptor.theta2_bar[g]
        theta2.append(tuple(front) + tuple(mod1(-v) for v in front))
    return ExtendedProductActionSpec(symbol, descriptor.group, theta1, alpha,
                                     tuple(beta), tuple(theta2))


# ---------------------------------------------------------------------------
# document format

_FRACTION_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_fraction_text(text) -> Fraction:
    """Exact fraction from an int or 'a/b' string; decimals rejected."""
    if isinstance(text, bool):
        raise ValueError(f"not a fraction: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError(f"decimal fractions are not accepted: {text!r}")
    if not isinstance(text, str) or not _FRACTION_RE.match(text.strip()):
        raise ValueError(f"not a fraction: {text!r} (use integers or 'a/b')")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in fraction {text!r}") from None


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _group_from_field(value, base_dir: Path | None) -> FiniteGroup:
    if isinstance(value, str):
        return group_from_constructor(value)
    if isinstance(value, dict):
        if "file" in value:
            path = Path(value["file"])
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            try:
                return parse_group_text(path.read_text(encoding="utf-8"))
            except OSError as exc:
                raise ValueError(f"cannot read group file {path}: {exc}") from None
        if "order" not in value or "table" not in value:
            raise ValueError("group object needs 'order' and 'table' (or 'file')")
        order = value["order"]
        table = value["table"]
        if not isinstance(table, list):
            raise ValueError("group table must be a list of rows")
        if len(table) != order:
            raise ValueError(f"group table has {len(table)} rows, order says {order}")
        return FiniteGroup(tuple(tuple(int(v) for v in row) for row in table))
    raise ValueError("group field must be a constructor string or an object")


def _field(doc: dict, name: str):
    if name not in doc:
        raise ValueError(f"missing field {name!r}")
    return doc[name]


def _rotation_table(rows, order: int, n: int, name: str) -> tuple[tuple[Fraction, ...], ...]:
    # document orientation: outer index = boundary index, inner = element
    if not isinstance(rows, list) or len(rows) != n:
        raise ValueError(f"{name} must list {n} boundary rows, got {len(rows) if isinstance(rows, list) else rows!r}")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != order:
            raise ValueError(f"{name} row {i} must have one entry per group element ({order})")
    by_element = []
    for g in range(order):
        by_element.append(tuple(mod1(parse_fraction_text(rows[i][g])) for i in range(n)))
    return tuple(by_element)


def _permutation_table(rows, order: int, n: int, name: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, list) or len(rows) != order:
        raise ValueError(f"{name} must list one permutation per group element ({order})")
    out = []
    for g, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ValueError(f"{name} row {g} must have {n} entries")
        for v in row:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"{name} row {g}: entries are 1-based indices in 1..{n}")
        out.append(tuple(v - 1 for v in row))
    return tuple(out)


def _load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object with named fields")
    return doc


def parse_action_spec_text(text: str, base_dir: Path | None = None) -> ExtendedProductActionSpec:
    """Parse an action-spec document (JSON object, exact fractions)."""
    doc = _load_document(text)
    symbol = parse_symbol(_field(doc, "symbol"))
    group = _group_from_field(_field(doc, "group"), base_dir)
    order = group.order
    n = len(symbol.pairs)
    raw_theta1 = _field(doc, "theta1")
    if not isinstance(raw_theta1, list) or len(raw_theta1) != order:
        raise ValueError(f"theta1 must list one fraction per group element ({order})")
    theta1 = tuple(mod1(parse_fraction_text(v)) for v in raw_theta1)
    raw_alpha = _field(doc, "alpha")
    if not isinstance(raw_alpha, list) or len(raw_alpha) != order:
        raise ValueError(f"alpha must list one sign per group element ({order})")
    for v in raw_alpha:
        if v not in (1, -1) or isinstance(v, bool):
            raise ValueError(f"alpha entries must be 1 or -1, got {v!r}")
    alpha = tuple(raw_alpha)
    beta = _permutation_table(_field(doc, "beta"), order, n, "beta")
    theta2 = _rotation_table(_field(doc, "theta2"), order, n, "theta2")
    return ExtendedProductActionSpec(symbol, group, theta1, alpha, beta, theta2)


def parse_descriptor_text(text: str, base_dir: Path | None = None) -> ProjectedActionDescriptor:
    """Parse a projected-descriptor document (JSON object)."""
    doc = _load_document(text)
    base = parse_symbol(_field(doc, "symbol"))
    group = _group_from_field(_field(doc, "group"), base_dir)
    order = group.order
    n = len(base.pairs)
    raw_eps = _field(doc, "epsilon")
    if not isinstance(raw_eps, list) or len(raw_eps) != order:
        raise ValueError(f"epsilon must list one sign per group element ({order})")
    for v in raw_eps:
        if v not in (1, -1) or isinstance(v, bool):
            raise ValueError(f"epsilon entries must be 1 or -1, got {v!r}")
    beta_bar = _permutation_table(_field(doc, "beta_bar"), order, n, "beta_bar")
    theta2_bar = _rotation_table(_field(doc, "theta2_bar"), order, n, "theta2_bar")
    return ProjectedActionDescriptor(base, group, tuple(raw_eps), beta_bar, theta2_bar)


def _read(path) -> tuple[str, Path]:
    p = Path(path)
    try:
        return p.read_text(encoding="utf-8"), p.parent
    except OSError as exc:
        raise ValueError(f"cannot read {p}: {exc}") from None


def load_action_spec(path) -> ExtendedProductActionSpec:
    text, base_dir = _read(path)
    return parse_action_spec_text(text, base_dir)


def load_descriptor(path) -> ProjectedActionDescriptor:
    text, base_dir = _read(path)
    return parse_descriptor_text(text, base_dir)


def _group_document(group: FiniteGroup) -> dict:
    return {"order": group.order, "table": [list(row) for row in group.table]}


def format_action_spec(spec: ExtendedProductActionSpec) -> str:
    """Serialize back to the document format (group written inline)."""
    n = len(spec.symbol.pairs)
    doc = {
        "symbol": str(spec.symbol),
        "group": _group_document(spec.group),
        "theta1": [format_fraction(v) for v in spec.theta1],
        "alpha": list(spec.alpha),
        "beta": [[v + 1 for v in row] for row in spec.beta],
        "theta2": [[format_fraction(spec.theta2[g][i])
                    for g in spec.group.elements()] for i in range(n)],
    }
    return json.dumps(doc, indent=2) + "\n"


def format_descriptor(descriptor: ProjectedActionDescriptor) -> str:
    n = len(descriptor.base.pairs)
    doc = {
        "symbol": str(descriptor.base),
        "group": _group_document(descriptor.group),
        "epsilon": list(descriptor.epsilon),
        "beta_bar": [[v + 1 for v in row] for row in descriptor.beta_bar],
        "theta2_bar": [[format_fraction(descriptor.theta2_bar[g][i])
                        for g in descriptor.group.elements()] for i in range(n)],
    }
    return json.dumps(doc, indent=2) + "\n"
