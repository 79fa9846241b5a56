"""
Factorizations of diagrams of categories
========================================

Over a 2-category C, a 2-natural transformation between Cat-valued
2-functors factors one object of C at a time.  The interpolating 2-functor
gets its action on 1-cells from diagonal fills and on 2-cells from 2-cell
fills.  The harness then re-checks every axiom on random instances.
"""

import random

from efslift.gen import GenParams, gen_two_instance
from efslift.lift import LiftedFill, check_lifted_efs, levelwise_factor, lifted_diagonal_fill
from efslift.shapes import walking_2cell
from efslift.twocat import compose_two_nat, validate_two_functor

c = walking_2cell()
f, g, alpha = gen_two_instance(3, c)
lf = levelwise_factor(alpha)
print("interpolating 2-functor valid:", validate_two_functor(lf.i).ok)
print("mu . eps == alpha:", compose_two_nat(lf.mu, lf.eps) == alpha)
for x in c.objects:
    print(f"  I({x}) has {lf.i(x).n_obj} objects and {lf.i(x).n_mor} morphisms")

# a lifted square with a known diagonal and a non-identity modification
fill = LiftedFill(random.Random(1), c, GenParams(3, 5))
delta, psi_tilde = lifted_diagonal_fill(fill.eps, fill.mu, fill.alpha, fill.alpha_prime, fill.psi)
print("lifted fill recovered:", delta == fill.delta0 and psi_tilde == fill.psi_tilde0)

report = check_lifted_efs(c, seed=0, cases=20)
print("harness:", report.passed, "of 20 cases passed")
