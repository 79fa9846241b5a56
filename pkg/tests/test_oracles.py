"""The oracles themselves against counts that can be worked out by hand."""
from efslift.catalog import (
    chain_category,
    discrete_category,
    indiscrete_category,
    parallel_pair,
    terminal_category,
    walking_arrow,
)

from oracles import all_functors, all_nats, is_invertible, non_associative_tables, unital_tables


def test_functors_from_terminal_pick_an_object():
    assert len(all_functors(terminal_category(), parallel_pair())) == 2


def test_functors_between_chains_are_monotone_maps():
    # monotone maps [3] -> [3]: C(5, 3) = 10
    assert len(all_functors(chain_category(3), chain_category(3))) == 10


def test_functors_out_of_parallel_pair():
    # pairs of parallel arrows in the walking arrow: 2 objects with identity loops, plus the arrow
    assert len(all_functors(parallel_pair(), walking_arrow())) == 3


def test_nats_into_indiscrete_are_unique():
    fs = all_functors(discrete_category(2), indiscrete_category(2))
    assert len(fs) == 4
    for f in fs:
        for g in fs:
            assert len(all_nats(f, g)) == 1


def test_invertibility_scan():
    c = walking_arrow()
    arrow = c.hom(0, 1)[0]
    assert not is_invertible(c, arrow)
    assert all(is_invertible(indiscrete_category(3), m) for m in indiscrete_category(3).morphisms)


def test_table_search_space():
    tables = list(unital_tables())
    assert len(tables) == 81
    assert 0 < len(non_associative_tables()) < 81
