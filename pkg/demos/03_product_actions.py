"""Validate an action datum, test the covering translation, project, lift."""

from fractions import Fraction

from seifert import (
    ExtendedProductActionSpec,
    check_tau_commuting,
    cyclic_group,
    format_descriptor,
    induced_solid_torus_action,
    lift_action,
    parse_symbol,
    project_action,
    validate_action_spec,
)

ZERO = Fraction(0)

# Z/2 swapping the two exceptional fibers, with a half fiber rotation
swap = ExtendedProductActionSpec(
    symbol=parse_symbol("(0,o1|(2,1),(2,1))"),
    group=cyclic_group(2),
    theta1=(ZERO, Fraction(1, 2)),
    alpha=(1, 1),
    beta=((0, 1), (1, 0)),
    theta2=((ZERO, ZERO), (ZERO, ZERO)),
)

report = validate_action_spec(swap)
print(f"laws: {report.message}")

tau = check_tau_commuting(swap)
print(f"commutes with the covering translation: {tau.ok}")

torus = induced_solid_torus_action(swap, boundary_index=0, element=1)
print(f"on the first solid torus: longitude {torus.longitude}, "
      f"meridian {torus.meridian}, sign {torus.sign:+d}")

descriptor = project_action(swap)
print("\nprojected to the base orbit data:")
print(format_descriptor(descriptor), end="")

lifted = lift_action(descriptor)
print(f"\nlift reproduces the action: {lifted == swap}")

# a broken variant: drift the rotation of the generator
broken = ExtendedProductActionSpec(
    swap.symbol, swap.group, (ZERO, Fraction(1, 3)), swap.alpha,
    swap.beta, swap.theta2)
report = validate_action_spec(broken)
print(f"\ndrifted datum: law {report.law} fails at {report.witness}: "
      f"{report.message}")
