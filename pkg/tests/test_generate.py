import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracescreen import (
    GenSpec,
    InvalidParamError,
    SplitMix64,
    all_labeled_graphs,
    decide_cactus,
    decompose,
    gen_cactus,
    gen_connected,
    generate,
    is_cactus,
    is_connected,
)


def test_splitmix64_reference_stream():
    # published reference outputs for seed 0
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    assert SplitMix64(1234567).next_u64() == 6457827717110365317


def test_splitmix64_seed_masking():
    assert SplitMix64(2**64).next_u64() == SplitMix64(0).next_u64()
    assert SplitMix64(-1).next_u64() == SplitMix64(2**64 - 1).next_u64()


def test_gen_cactus_trivial_sizes():
    g = gen_cactus(1, 0.5, 7)
    assert g.vertex_count == 1 and g.edges == ()
    g = gen_cactus(2, 0.0, 7)
    assert g.edges == ((0, 1),)
    g = gen_cactus(2, 1.0, 7)  # no room for a cycle: pendant fallback
    assert g.edges == ((0, 1),)


def test_gen_cactus_is_cactus():
    g = gen_cactus(50, 0.5, 42)
    assert g.vertex_count == 50
    assert is_connected(g)
    assert is_cactus(g, decompose(g))


def test_gen_cactus_extremes():
    all_pendants = gen_cactus(30, 0.0, 3)
    assert all_pendants.edge_count == 29  # a tree
    all_cycles = gen_cactus(30, 1.0, 3)
    assert all_cycles.edge_count >= 30
    for g in (all_pendants, all_cycles):
        assert decide_cactus(g).is_cactus


def test_gen_cactus_rejects_bad_params():
    with pytest.raises(InvalidParamError):
        gen_cactus(0, 0.5, 1)
    with pytest.raises(InvalidParamError):
        gen_cactus(5, 1.5, 1)
    with pytest.raises(InvalidParamError):
        gen_cactus(5, -0.1, 1)


def test_gen_connected_tree_and_complete():
    tree = gen_connected(4, 3, seed=11)
    assert tree.edge_count == 3 and is_connected(tree)
    k4 = gen_connected(4, 6, seed=11)
    assert k4.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    lone = gen_connected(1, 0, seed=11)
    assert lone.vertex_count == 1 and lone.edges == ()


def test_gen_connected_exact_edge_count():
    g = gen_connected(9, 12, seed=7)
    assert g.vertex_count == 9
    assert g.edge_count == 12
    assert is_connected(g)


def test_gen_connected_rejects_bad_params():
    with pytest.raises(InvalidParamError):
        gen_connected(0, 0, 1)
    with pytest.raises(InvalidParamError):
        gen_connected(4, 2, 1)  # below tree threshold
    with pytest.raises(InvalidParamError):
        gen_connected(4, 7, 1)  # above complete


def test_all_labeled_counts():
    assert len(list(all_labeled_graphs(2))) == 2
    assert len(list(all_labeled_graphs(3))) == 8
    assert len(list(all_labeled_graphs(4))) == 64
    assert len(list(all_labeled_graphs(5))) == 1024


def test_all_labeled_no_duplicates_and_order():
    graphs = list(all_labeled_graphs(3))
    assert len({g.edges for g in graphs}) == 8
    assert graphs[0].edges == ()
    # pair order (0,1), (0,2), (1,2): mask 1 -> first pair only
    assert graphs[1].edges == ((0, 1),)
    assert graphs[4].edges == ((1, 2),)


def test_all_labeled_rejects_bad_n():
    with pytest.raises(InvalidParamError):
        list(all_labeled_graphs(0))
    with pytest.raises(InvalidParamError):
        list(all_labeled_graphs(7))


def test_genspec_dispatch():
    (g1,) = generate(GenSpec("cactus", 10, seed=3, cycle_fraction=0.7))
    assert g1 == gen_cactus(10, 0.7, 3)
    (g2,) = generate(GenSpec("connected", 6, seed=3, edge_count=8))
    assert g2 == gen_connected(6, 8, 3)
    assert len(list(generate(GenSpec("all", 3)))) == 8
    with pytest.raises(InvalidParamError):
        list(generate(GenSpec("nope", 3)))
    with pytest.raises(InvalidParamError):
        list(generate(GenSpec("connected", 3)))


@given(st.integers(min_value=1, max_value=60),
       st.floats(min_value=0.0, max_value=1.0),
       st.integers(min_value=0, max_value=2**64 - 1))
@settings(max_examples=250)
def test_gen_cactus_properties(n, frac, seed):
    g = gen_cactus(n, frac, seed)
    assert g.vertex_count == n
    if n >= 1:
        assert is_connected(g)
    if n >= 2:
        assert is_cactus(g, decompose(g))


@given(st.integers(min_value=1, max_value=12),
       st.integers(min_value=0, max_value=40),
       st.integers(min_value=0, max_value=2**64 - 1))
@settings(max_examples=250)
def test_gen_connected_properties(n, extra, seed):
    max_m = n * (n - 1) // 2
    m = min(n - 1 + extra, max_m)
    g = gen_connected(n, m, seed)
    assert g.vertex_count == n
    assert g.edge_count == m
    assert is_connected(g)


@given(st.integers(min_value=1, max_value=40),
       st.floats(min_value=0.0, max_value=1.0),
       st.integers(min_value=0, max_value=2**64 - 1))
@settings(max_examples=100)
def test_same_seed_same_graph(n, frac, seed):
    assert gen_cactus(n, frac, seed) == gen_cactus(n, frac, seed)


def test_different_seeds_usually_differ():
    distinct = {gen_cactus(30, 0.5, seed).edges for seed in range(20)}
    assert len(distinct) == 20
