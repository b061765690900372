from itertools import combinations

import pytest

from vpgbend.graphs import Graph


def subset_split_graph(n: int, k: int) -> Graph:
    """Direct-from-definition split graph oracle: clique [n], one independent
    vertex per k-subset adjacent exactly to its members.

    Unlike build_split_knk this allows k = n, which the 3-subset family needs
    at n = 3.  Kept deliberately independent of the library builders.
    """
    clique = list(range(1, n + 1))
    indep = [tuple(c) for c in combinations(clique, k)]
    g = Graph(clique + indep)
    for u, v in combinations(clique, 2):
        g.add_edge(u, v)
    for s in indep:
        for w in s:
            g.add_edge(s, w)
    return g


@pytest.fixture(scope="session")
def k3n_reps():
    """construct_k3n_proper outputs for n = 3..12, built once per session."""
    from vpgbend.constructors import construct_k3n_proper

    return {n: construct_k3n_proper(n) for n in range(3, 13)}


@pytest.fixture(scope="session")
def gtm_reps():
    from vpgbend.constructors import construct_gtm_stairs

    return {(n, k): construct_gtm_stairs(n, k) for (n, k) in [(5, 3), (6, 3), (6, 4), (7, 4)]}
