"""
Filling a square up to isomorphism
==================================

A square whose top edge is bijective on objects and whose bottom edge is
fully faithful, and which commutes only up to an invertible transformation,
has exactly one diagonal.  We build such a square from a known answer and
check that the fill recovers it.
"""

from efslift.efs import diagonal_fill
from efslift.fincat import compose_functors, is_identity_nat, whisker_right
from efslift.gen import gen_fill_instance

inst = gen_fill_instance(6)
sq = inst.square
print("square commutes strictly:", sq.commutes)

delta, psi_tilde = diagonal_fill(sq)
print("delta recovered:", delta == inst.delta0)
print("psi_tilde recovered:", psi_tilde == inst.psi_tilde0)

# the two triangles: one strict, one witnessed by psi_tilde
print("delta . eps == alpha:", compose_functors(delta, sq.eps) == sq.alpha)
print("psi_tilde eps == psi:", whisker_right(psi_tilde, sq.eps) == sq.psi)

# a strictly commuting square gets a strict diagonal
strict = gen_fill_instance(7, commuting=True)
d, t = diagonal_fill(strict.square)
print("strict case, mu . delta == alpha':", compose_functors(strict.square.mu, d) == strict.square.alpha_prime)
print("strict case, identity 2-cell:", is_identity_nat(t))
