"""Normalize a few symbols and walk the double-cover correspondence."""

from seifert import (
    base_quotient,
    equivalent,
    normalize,
    obstruction_class,
    orientable_double_cover,
    parse_symbol,
    total_sum,
)

TEXTS = [
    "(0,o1|(3,4))",
    "(0,o1|(2,1),(2,-1),(1,2))",
    "(1,n2|(5,7),(3,-2))",
]

for text in TEXTS:
    symbol = parse_symbol(text)
    norm = normalize(symbol)
    print(f"{text}")
    print(f"  normalized   {norm.expand()}")
    print(f"  euler sum    {total_sum(symbol)}")
    print(f"  obstruction  {obstruction_class(symbol)}")

a = parse_symbol("(0,o1|(3,4))")
b = parse_symbol("(0,o1|(3,1),(1,1))")
print(f"\n{a} ~ {b}: {equivalent(a, b)}")

base = parse_symbol("(1,n2|(5,2),(1,1))")
cover = orientable_double_cover(base)
print(f"\nbase      {base}  (b = {obstruction_class(base)})")
print(f"cover     {cover}  (b = {obstruction_class(cover)})")
print(f"quotient  {base_quotient(cover)}")
