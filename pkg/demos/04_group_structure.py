"""Classify how a finite group sits inside the circle-action symmetries."""

from fractions import Fraction

from seifert import (
    ExtendedProductActionSpec,
    analyze_structure,
    cyclic_group,
    direct_product,
    parse_symbol,
)

ZERO = Fraction(0)


def sixth_turn():
    return ExtendedProductActionSpec(
        symbol=parse_symbol("(0,o1|(2,1))"),
        group=cyclic_group(6),
        theta1=tuple(Fraction(k, 6) for k in range(6)),
        alpha=(1,) * 6,
        beta=((0,),) * 6,
        theta2=((ZERO,),) * 6,
    )


def block_shuffle():
    # Z/2 x Z/3: the involution rotates fibers halfway, the 3-cycle
    # permutes two blocks of three identical exceptional fibers
    group = direct_product(cyclic_group(2), cyclic_group(3))
    pairs = "(2,1)," * 5 + "(2,1)"

    def rotate(j):
        cycle = [(k + j) % 3 for k in range(3)]
        return tuple(cycle + [3 + c for c in cycle])

    return ExtendedProductActionSpec(
        symbol=parse_symbol(f"(0,o1|{pairs})"),
        group=group,
        theta1=tuple(Fraction(i, 2) for i in range(2) for _ in range(3)),
        alpha=(1,) * 6,
        beta=tuple(rotate(j) for _ in range(2) for j in range(3)),
        theta2=(((ZERO,) * 6),) * 6,
    )


def reflection():
    return ExtendedProductActionSpec(
        symbol=parse_symbol("(0,o1|(1,0))"),
        group=cyclic_group(2),
        theta1=(ZERO, ZERO),
        alpha=(1, -1),
        beta=((0,), (0,)),
        theta2=((ZERO,), (ZERO,)),
    )


for name, spec in [("sixth turn", sixth_turn()),
                   ("block shuffle", block_shuffle()),
                   ("reflection", reflection())]:
    report = analyze_structure(spec)
    print(f"{name}:")
    print(f"  route           {report.route}")
    print(f"  rotation order  {report.rotation_order}")
    print(f"  shadow order    {report.shadow_order}")
    print(f"  factors         {report.factors}")
    print(f"  embeds cleanly  {report.embedding_ok}")
