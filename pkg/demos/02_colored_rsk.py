"""Colored Robinson-Schensted on G(d,1,n).

Letters of color k are row-inserted into the k-th component.  The
recording tableau carries the descent set and flag-major index of the word.
"""

from bimahonian import colored_rsk, parse_window, rsk_inverse, word_statistics
from bimahonian.tableaux import tableau_statistics

w = parse_window("2:3,0:1,1:4,0:2", 3)
P, Q = colored_rsk(w)
print("w =", w)
print("P =", P.to_json())
print("Q =", Q.to_json())
print("shape =", P.shape)

ws, qs = word_statistics(w), tableau_statistics(Q)
print("Des(w) =", sorted(ws.des_set), " Des(Q) =", sorted(qs.des_set))
print("fmaj(w) =", ws.fmaj, " fmaj(Q) =", qs.fmaj)
print("inverse map recovers w:", rsk_inverse(P, Q) == w)

# swapping the colors' signs and inverting swaps P and Q
wbar_inv = w.conjugate_colors().inverse()
print("RS of conj(w)^-1 is (Q, P):", colored_rsk(wbar_inv) == (Q, P))
