"""
Factoring a functor
===================

Every functor between finite categories splits as a bijective-on-objects
functor followed by a fully faithful one.  The middle category keeps the
objects of the domain and borrows its hom sets from the codomain.
"""

from efslift.catalog import discrete_category, walking_arrow
from efslift.fincat import FinFunctor, compose_functors, factor_bo_ff, is_bijective_on_objects, is_fully_faithful
from efslift.textformat import document_of

# two objects, no arrows, sent to both ends of the walking arrow
arrow = walking_arrow()
pick = FinFunctor(discrete_category(2), arrow, [0, 1], [arrow.identity[0], arrow.identity[1]])

b, i, m = factor_bo_ff(pick)
print("middle category:", i.n_obj, "objects,", i.n_mor, "morphisms")
print("b bijective on objects:", is_bijective_on_objects(b))
print("m fully faithful:", is_fully_faithful(m))
print("m . b == pick:", compose_functors(m, b) == pick)

# the arrow 0 -> 1 reappears in the middle: b adds it, m keeps it
print(document_of(I=i, B=b, M=m).render())
