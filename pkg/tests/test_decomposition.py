import pytest
from hypothesis import given

from cfcn.decomposition import ConsistencyError, maximal_distance3_set, partition_abc
from cfcn.graph import Graph, generate
from conftest import graphs
from oracles import is_maximal_distance3_set


def test_path5():
    g = generate("path", 5)
    a = maximal_distance3_set(g)
    assert a == [0, 3]
    assert is_maximal_distance3_set(g, a)


def test_empty():
    assert maximal_distance3_set(Graph(0, ())) == []


def test_complete():
    assert maximal_distance3_set(generate("complete", 5)) == [0]


def test_edgeless():
    assert maximal_distance3_set(Graph.from_edges(4, [])) == [0, 1, 2, 3]


@given(graphs(max_n=14))
def test_definition_holds(g):
    a = maximal_distance3_set(g)
    assert is_maximal_distance3_set(g, a)


class TestPartition:
    def test_path5(self):
        p = partition_abc(generate("path", 5), [0, 3])
        assert (p.a, p.b, p.c) == ((0, 3), (1, 2, 4), ())

    def test_star(self):
        p = partition_abc(generate("star", 5), [0])
        assert (p.a, p.b, p.c) == ((0,), (1, 2, 3, 4, 5), ())

    def test_path7(self):
        p = partition_abc(generate("path", 7), [0, 3, 6])
        assert (p.a, p.b, p.c) == ((0, 3, 6), (1, 2, 4, 5), ())

    def test_nonempty_c(self):
        g = generate("trap", 3, 1)
        p = partition_abc(g, maximal_distance3_set(g))
        assert (p.a, p.b, p.c) == ((0,), (3,), (1, 2, 4, 5, 6))

    def test_non_maximal_a_rejected(self):
        # A={0} on a 6-path: vertex 3 is left in C with no B-neighbour
        with pytest.raises(ConsistencyError, match="vertex 3"):
            partition_abc(generate("path", 6), [0])

    def test_two_a_neighbours_rejected(self):
        with pytest.raises(ConsistencyError, match="vertex 1"):
            partition_abc(generate("path", 3), [0, 2])

    def test_dependent_a_rejected(self):
        with pytest.raises(ConsistencyError):
            partition_abc(generate("path", 2), [0, 1])

    @given(graphs(max_n=14))
    def test_observations(self, g):
        a = maximal_distance3_set(g)
        p = partition_abc(g, a)
        assert sorted(p.a + p.b + p.c) == list(range(g.n))
        sa, sb = set(p.a), set(p.b)
        for v in p.a:
            assert not sa.intersection(g.adj[v])
        for v in p.b:
            assert len(sa.intersection(g.adj[v])) == 1
        for v in p.c:
            assert not sa.intersection(g.adj[v])
            assert sb.intersection(g.adj[v])
