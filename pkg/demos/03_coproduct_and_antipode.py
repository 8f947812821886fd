"""
The selection/quotient coproduct and the antipode
=================================================

The coproduct splits the position set of a word in every ordered way,
packing the selected subword on the left and the quotient of the rest on
the right.  It is coassociative, multiplicative for the product, and the
resulting graded connected bialgebra carries an antipode computed by
recursion over strictly smaller left slots.
"""

from packedwords import (
    antipode,
    coproduct,
    counit,
    enumerate_packed,
    parse_word,
    product,
    reduced_coproduct,
    verify_antipode,
    verify_bialgebra,
    verify_coassociativity,
)

w = parse_word("1,2,1")
print("coproduct of", w, "has", len(coproduct(w)), "distinct tensors:")
for (left, right), coeff in coproduct(w).items():
    print(f"   {coeff} * {left} (x) {right}")

# multiplicities appear for repeated letters
print("coproduct of 1,1:", coproduct(parse_word("1,1")))
print("counit picks the empty-word coefficient:", counit(parse_word("e")), counit(w))

# the reduced coproduct drops the two trivial terms; primitives go to zero
print("reduced coproduct of 1,1:", reduced_coproduct(parse_word("1,1")))
print("reduced coproduct of 1:  ", reduced_coproduct(parse_word("1")))

# antipodes
for text in ["e", "1", "1,1", "1,2,1"]:
    word = parse_word(text)
    print(f"antipode({text}) = {antipode(word)}")

# the Hopf axioms, checked exactly on every word of length <= 3
words = [w for n in range(4) for w in enumerate_packed(n)]
print("coassociativity:", all(verify_coassociativity(w) for w in words))
print("bialgebra law:  ", all(verify_bialgebra(u, v) for u in words[:9] for v in words[:9]))
print("antipode axiom: ", all(verify_antipode(w) for w in words))

# the antipode reverses products
from packedwords import shifted_concat

u, v = parse_word("1,1"), parse_word("0,1")
print("antimorphism:   ", antipode(shifted_concat(u, v)) == product(antipode(v), antipode(u)))
