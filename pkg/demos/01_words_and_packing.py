"""
Words, the pack projector, subwords, and quotients
==================================================

The alphabet is indexed by nonnegative integers; letter 0 is special.  A
word is packed when its nonzero indices form an initial segment 1..k, and
``pack`` projects any word onto that shape by relabeling order-preservingly.
"""

from packedwords import pack, parse_word, quotient, shift, subword, substitute

# the text form is comma-separated indices; "e" is the empty word
w = parse_word("1,1,5,0,4")
print("w           =", w)
print("pack(w)     =", pack(w))
print("idempotent  =", pack(pack(w)) == pack(w))

# letter statistics
print("length      =", len(w))
print("sup         =", w.sup)
print("occurrences of index 1:", w.count(1))
print("index alphabet:", sorted(w.ialph()))

# pack is a substitution: the relabeling that sends 1,4,5 to 1,2,3
print("as substitution:", substitute({1: 1, 4: 2, 5: 3}, w))

# shifts raise every nonzero letter, fixing letter 0
print("shift by 2  =", shift(2, parse_word("1,0,2")))

# subwords select 1-based positions; quotients erase letters to 0
v = parse_word("1,2,1")
print("v[{2,3}]    =", subword(v, {2, 3}))
print("v / {x1}    =", quotient(v, {1}))
print("packed quotient:", pack(quotient(v, {1})))
