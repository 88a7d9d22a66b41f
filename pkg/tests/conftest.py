import random

from hextile.graph import Graph


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def shuffled(g, seed=0):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm), perm
