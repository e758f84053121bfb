"""Shared test helpers: seeded random graphs."""

import random

from huckel.graphs import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p) from an explicit RNG, as a bit-packed Graph."""
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph.from_rows(n, rows)
