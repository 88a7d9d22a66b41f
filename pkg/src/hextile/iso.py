"""Graph isomorphism and automorphism orbits by individualisation-refinement.

Colour refinement runs on both graphs at once so colour names are shared;
a mismatch in colour-class sizes prunes the branch. Discrete colourings are
checked edge by edge, so a returned mapping is always a genuine isomorphism.
"""

from __future__ import annotations

from collections import Counter, deque

import numpy as np

from .graph import Graph


def _adjacency(g: Graph) -> list[list[int]]:
    # neighbour lists with multiplicity; a loop contributes its vertex twice
    return [[w for w, _ in g.adj[v]] for v in range(g.n)]


def vertex_profiles(g: Graph) -> list[tuple[int, ...]]:
    """BFS layer sizes seen from each vertex."""
    cached = g._cache.get("vertex_profiles")
    if cached is not None:
        return cached
    adj = _adjacency(g)
    profiles = []
    for s in range(g.n):
        dist = {s: 0}
        layers = [1]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    if dist[w] == len(layers):
                        layers.append(0)
                    layers[dist[w]] += 1
                    queue.append(w)
        profiles.append(tuple(layers))
    g._cache["vertex_profiles"] = profiles
    return profiles


def walk_profiles(g: Graph, length: int = 16) -> list[tuple[int, ...]]:
    """Closed walks of each length 2..length through each vertex."""
    key = ("walk_profiles", length)
    cached = g._cache.get(key)
    if cached is not None:
        return cached
    dmax = max(g.degrees(), default=0)
    if g.n == 0:
        out = []
    elif dmax ** length < 2**62:
        a = np.zeros((g.n, g.n), dtype=np.int64)
        for u, v in g.edges:
            a[u, v] += 1
            if u != v:
                a[v, u] += 1
        p = a.copy()
        cols = []
        for step in range(2, length + 1):
            p = p @ a
            cols.append(np.diagonal(p).tolist())
        out = [tuple(c[v] for c in cols) for v in range(g.n)]
    else:
        out = _walk_profiles_exact(g, length)
    g._cache[key] = out
    return out


def _walk_profiles_exact(g: Graph, length: int) -> list[tuple[int, ...]]:
    # arbitrary precision fallback for walk counts beyond 64 bits
    adj = _adjacency(g)
    out = []
    for s in range(g.n):
        vec = {s: 1}
        counts = []
        for step in range(1, length + 1):
            nxt: dict[int, int] = {}
            for u, c in vec.items():
                for w in adj[u]:
                    nxt[w] = nxt.get(w, 0) + c
            vec = nxt
            if step >= 2:
                counts.append(vec.get(s, 0))
        out.append(tuple(counts))
    return out


def distance_profile(g: Graph) -> tuple:
    """Sorted multiset of per-vertex BFS layer sizes (an isomorphism invariant)."""
    return tuple(sorted(vertex_profiles(g)))


def _refine(adj_a, col_a, adj_b, col_b):
    """Joint colour refinement; returns refined colours or None on mismatch."""
    n = len(col_a)
    classes = len(set(col_a))
    while True:
        sig_a = [(col_a[v], tuple(sorted(col_a[w] for w in adj_a[v]))) for v in range(n)]
        sig_b = [(col_b[v], tuple(sorted(col_b[w] for w in adj_b[v]))) for v in range(n)]
        count_a, count_b = Counter(sig_a), Counter(sig_b)
        if count_a != count_b:
            return None
        names = {sig: i for i, sig in enumerate(sorted(count_a))}
        col_a = [names[s] for s in sig_a]
        col_b = [names[s] for s in sig_b]
        if len(names) == classes:
            return col_a, col_b
        classes = len(names)


def _edges_match(g: Graph, h: Graph, mapping: list[int]) -> bool:
    ea = Counter((min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in g.edges)
    eb = Counter((min(u, v), max(u, v)) for u, v in h.edges)
    return ea == eb


def _search(g, h, adj_a, adj_b, col_a, col_b):
    refined = _refine(adj_a, col_a, adj_b, col_b)
    if refined is None:
        return None
    col_a, col_b = refined
    n = len(col_a)
    sizes = Counter(col_a)
    if len(sizes) == n:
        where = {c: v for v, c in enumerate(col_b)}
        mapping = [where[c] for c in col_a]
        return mapping if _edges_match(g, h, mapping) else None
    # branch on the smallest non-singleton class
    target = min((size, c) for c, size in sizes.items() if size > 1)[1]
    v = next(x for x in range(n) if col_a[x] == target)
    fresh = max(col_a) + 1
    branch_a = list(col_a)
    branch_a[v] = fresh
    for w in range(n):
        if col_b[w] != target:
            continue
        branch_b = list(col_b)
        branch_b[w] = fresh
        found = _search(g, h, adj_a, adj_b, branch_a, branch_b)
        if found is not None:
            return found
    return None


def isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """A vertex bijection ``g -> h`` preserving edges (with multiplicity), or None."""
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if g.n == 0:
        return []
    if distance_profile(g) != distance_profile(h):
        return None
    adj_a, adj_b = _adjacency(g), _adjacency(h)
    # start from loop counts and BFS layer sizes, both preserved by isomorphisms
    key_a = [
        (sum(1 for w in adj_a[v] if w == v), p, q)
        for v, (p, q) in enumerate(zip(vertex_profiles(g), walk_profiles(g)))
    ]
    key_b = [
        (sum(1 for w in adj_b[v] if w == v), p, q)
        for v, (p, q) in enumerate(zip(vertex_profiles(h), walk_profiles(h)))
    ]
    if sorted(key_a) != sorted(key_b):
        return None
    names = {k: i for i, k in enumerate(sorted(set(key_a)))}
    if any(k not in names for k in key_b):
        return None
    return _search(g, h, adj_a, adj_b, [names[k] for k in key_a], [names[k] for k in key_b])


def find_automorphism(g: Graph, v: int, w: int) -> list[int] | None:
    """An automorphism of ``g`` sending ``v`` to ``w``, or None."""
    adj = _adjacency(g)
    col_a = [0] * g.n
    col_b = [0] * g.n
    col_a[v] = 1
    col_b[w] = 1
    return _search(g, g, adj, adj, col_a, col_b)


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits of the automorphism group, each sorted, ordered by minimum."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    # vertices split by the refined colouring can never share an orbit
    adj = _adjacency(g)
    prof = vertex_profiles(g)
    names = {p: i for i, p in enumerate(sorted(set(prof)))}
    start = [names[p] for p in prof]
    base = _refine(adj, start, adj, start)[0] if g.n else []
    for v in range(g.n):
        rep = find(v)
        if rep != v:
            continue
        for w in range(v + 1, g.n):
            if find(w) == rep or base[w] != base[v] or find(w) < v:
                continue
            perm = find_automorphism(g, v, w)
            if perm is None:
                continue
            for x in range(g.n):
                union(x, perm[x])
    orbits: dict[int, list[int]] = {}
    for x in range(g.n):
        orbits.setdefault(find(x), []).append(x)
    return [orbits[r] for r in sorted(orbits)]


def is_vertex_transitive(g: Graph) -> bool:
    """Every vertex is the image of vertex 0 under some automorphism."""
    if g.n <= 1:
        return True
    if len(set(vertex_profiles(g))) > 1:
        return False
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w in range(1, g.n):
        if find(w) == find(0):
            continue
        perm = find_automorphism(g, 0, w)
        if perm is None:
            return False
        # every found map merges whole cycles, not just 0 and w
        for x in range(g.n):
            rx, ry = find(x), find(perm[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return True
