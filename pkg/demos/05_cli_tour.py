"""Drive the command line interface in process, command by command."""

import tempfile
from pathlib import Path

from seifert import format_action_spec
from seifert.cli import main

from fractions import Fraction

from seifert import ExtendedProductActionSpec, cyclic_group, parse_symbol

ZERO = Fraction(0)

swap = ExtendedProductActionSpec(
    symbol=parse_symbol("(0,o1|(2,1),(2,1))"),
    group=cyclic_group(2),
    theta1=(ZERO, Fraction(1, 2)),
    alpha=(1, 1),
    beta=((0, 1), (1, 0)),
    theta2=((ZERO, ZERO), (ZERO, ZERO)),
)

with tempfile.TemporaryDirectory() as tmp:
    spec_path = str(Path(tmp) / "swap.json")
    Path(spec_path).write_text(format_action_spec(swap), encoding="utf-8")
    descr_path = str(Path(tmp) / "swap_base.json")

    calls = [
        ["normalize", "(0,o1|(3,4))"],
        ["sum", "(0,o1|(2,1),(3,2))"],
        ["equiv", "(0,o1|(3,4))", "(0,o1|(3,1),(1,1))"],
        ["cover", "(1,n2|(2,1))"],
        ["quotient", "(0,o1|(2,1),(2,1))"],
        ["pi1", "--porcelain", "(1,n2|(2,1))"],
        ["h1", "(1,n2|(2,1))"],
        ["snf", "2,0;0,3"],
        ["validate-action", spec_path],
        ["check-tau", spec_path],
        ["induced-torus", spec_path, "-i", "1", "-g", "1", "--det"],
        ["project", spec_path, "-o", descr_path],
        ["lift", descr_path],
        ["obstruction", "-b", "1", "--orbits", "2,3"],
        ["orbits", spec_path],
        ["analyze-group", spec_path],
    ]
    for argv in calls:
        print(f"$ seifert {' '.join(argv)}")
        code = main(list(argv))
        if code != 0:
            print(f"  (exit {code})")
        print()
