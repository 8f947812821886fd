"""
Shifted concatenation and unique factorization
==============================================

The product of two packed words concatenates them after lifting the right
factor's nonzero letters above the left factor's supremum.  Packed words
form a free monoid under this product: every nonempty packed word factors
uniquely into irreducible ones, found by scanning for admissible cuts.
"""

from packedwords import (
    LinComb,
    admissible_cuts,
    enumerate_irreducible,
    factor_irreducible,
    is_irreducible,
    parse_word,
    product,
    shifted_concat,
)

u = parse_word("1,1")
v = parse_word("1")
print("u * v =", shifted_concat(u, v))
print("v * u =", shifted_concat(v, u), " (not commutative)")

# the same product extended bilinearly to formal rational combinations
a = LinComb({parse_word("1"): 1, parse_word("0"): 1})
print("(x1 + x0) * x1 =", product(a, parse_word("1")))

# cuts and irreducibility
for text in ["1,1,2", "1,2,1", "1,1,1", "0,0", "1,0,1,0,1"]:
    w = parse_word(text)
    print(f"{text:11s} cuts={sorted(admissible_cuts(w))!s:8s} irreducible={is_irreducible(w)}")

# unique factorization, rebuilt left to right
w = shifted_concat(shifted_concat(parse_word("1,1"), parse_word("1")), parse_word("0,1"))
factors = factor_irreducible(w)
print("factor", w, "=", " * ".join(str(f) for f in factors))

rebuilt = factors[0]
for f in factors[1:]:
    rebuilt = shifted_concat(rebuilt, f)
print("round trip ok:", rebuilt == w)

print("irreducible words of length 2:", [str(w) for w in enumerate_irreducible(2)])
