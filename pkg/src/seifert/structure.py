"""Group-theoretic shape of a validated extended product action.

The acting group is examined through two exact shadows of its data: the
fiber rotation theta1 together with the sign alpha, and the boundary
datum (beta, theta2 row, alpha).  Both compose by the cocycle laws, so
each shadow map is a homomorphism and its image is a concrete finite
group we can build tables for.  The surface behavior away from the
boundary is not modeled; when the shadows fail to separate group
elements the report says so (embedding_ok false) instead of erroring.

Three report routes, most specific first:

* actions commuting with the covering translation embed into
  Z2 x H, the Z2 coordinate reading theta1 in {0, 1/2};
* fiber-orientation-preserving actions embed into Zn x H, n the least
  common order of the fiber rotations;
* orientation-mixed actions map onto the image group of their full
  datum, reported as (Zn x H+) semidirect Z2 when some
  orientation-reversing element is an involution.

H is the image group of the boundary shadow, H+ the same over the
orientation-preserving part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .actions import ExtendedProductActionSpec, check_tau_commuting, mod1, validate_action_spec
from .groups import (FiniteGroup, GroupMap, cyclic_group, direct_product,
                     is_homomorphism, is_injective)

Shadow = tuple[tuple[int, ...], tuple[Fraction, ...], int]


def _shadow(spec: ExtendedProductActionSpec, g: int) -> Shadow:
    return (spec.beta[g], spec.theta2[g], spec.alpha[g])


def _shadow_compose(a: Shadow, b: Shadow) -> Shadow:
    pa, ra, sa = a
    pb, rb, sb = b
    n = len(pa)
    perm = tuple(pa[pb[i]] for i in range(n))
    rot = tuple(mod1(ra[pb[i]] + sa * rb[i]) for i in range(n))
    return (perm, rot, sa * sb)


def _datum(spec: ExtendedProductActionSpec, g: int):
    return (spec.theta1[g], spec.alpha[g], spec.beta[g], spec.theta2[g])


def _datum_compose(a, b):
    ta, sa = a[0], a[1]
    tb, sb = b[0], b[1]
    perm, rot, sign = _shadow_compose((a[2], a[3], sa), (b[2], b[3], sb))
    return (mod1(ta + sa * tb), sa * sb, perm, rot)


def _image_group(values, identity, compose) -> tuple[FiniteGroup, dict]:
    """Concrete group on the distinct values, identity at index 0."""
    rest = sorted(set(values) - {identity})
    elems = [identity] + rest
    index = {v: i for i, v in enumerate(elems)}
    table = []
    for a in elems:
        row = []
        for b in elems:
            c = compose(a, b)
            if c not in index:
                raise RuntimeError("image of a homomorphism must be closed under composition")
            row.append(index[c])
        table.append(tuple(row))
    return FiniteGroup(tuple(table)), index


@dataclass(frozen=True)
class StructureReport:
    """Shape of the acting group as seen through its exact data.

    ``embedding`` is the combined map into the reported target group;
    ``embedding_ok`` says it is an injective homomorphism, i.e. the
    modeled data already separates the group elements.
    """

    route: str
    rotation_order: int
    alpha_image_order: int
    shadow_order: int
    factors: str
    embedding_ok: bool
    embedding: GroupMap


def _tau_applies(spec: ExtendedProductActionSpec) -> bool:
    try:
        return bool(check_tau_commuting(spec, check=False))
    except ValueError:
        return False


def analyze_structure(spec: ExtendedProductActionSpec) -> StructureReport:
    """Classify a validated action; invalid specs are rejected.

    rotation_order is the least common denominator of the fiber
    rotations over the orientation-preserving part, so it is the order
    of the cyclic rotation factor in every route.
    """
    verdict = validate_action_spec(spec)
    if not verdict:
        raise ValueError(f"spec fails validation at law {verdict.law}: {verdict.message}")
    group = spec.group
    kernel = [g for g in group.elements() if spec.alpha[g] == 1]
    rotation_order = lcm(*(spec.theta1[g].denominator for g in kernel))
    alpha_image_order = 2 if len(kernel) < group.order else 1

    shadows = [_shadow(spec, g) for g in group.elements()]
    identity_shadow = _shadow(spec, 0)
    shadow_group, shadow_index = _image_group(shadows, identity_shadow, _shadow_compose)

    if alpha_image_order == 1 and _tau_applies(spec):
        half = Fraction(1, 2)
        target = direct_product(cyclic_group(2), shadow_group)
        images = tuple((1 if spec.theta1[g] == half else 0) * shadow_group.order
                       + shadow_index[shadows[g]] for g in group.elements())
        route, factors = "covering-translation", "Z2 x H"
    elif alpha_image_order == 1:
        target = direct_product(cyclic_group(rotation_order), shadow_group)
        images = tuple(int(spec.theta1[g] * rotation_order) * shadow_group.order
                       + shadow_index[shadows[g]] for g in group.elements())
        route, factors = "fiber-rotation", f"Z{rotation_order} x H"
    else:
        data = [_datum(spec, g) for g in group.elements()]
        target, datum_index = _image_group(data, _datum(spec, 0), _datum_compose)
        images = tuple(datum_index[data[g]] for g in group.elements())
        route = "orientation-mixed"
        reversing_involution = any(
            spec.alpha[g] == -1 and group.mul(g, g) == 0 for g in group.elements())
        if reversing_involution:
            factors = f"(Z{rotation_order} x H+) semidirect Z2"
        else:
            factors = "no product decomposition (every orientation-reversing element has order > 2)"

    embedding = GroupMap(group, target, images)
    embedding_ok = is_homomorphism(embedding) and is_injective(embedding)
    return StructureReport(route, rotation_order, alpha_image_order,
                           shadow_group.order, factors, embedding_ok, embedding)
