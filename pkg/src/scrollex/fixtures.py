"""Instance builders: the worked examples of the package plus seeded generators.

Everything here returns plain instance dicts (the JSON schema of
:mod:`scrollex.instance`), so the same corpus is available to the CLI
generator subcommands and to the test suite.  All randomness flows through
an explicit seed.
"""

from __future__ import annotations

import random

from .graphs import Graph, CliqueComplex, maximal_cliques, proper_edges
from .extension import ScrollBlock, ScrollMatrix, validate_extension
from .ordering import OrderFound, find_admissible_order
from .instance import parse_instance


def bruns_instance():
    """Triangle {a,b,c} and path c-d-e-a closing a square a-c-d-e.

    The triangle is extended along {a, c} by one variable, the edge {d, e}
    by two.  The single virtual minimal cycle acde expands to a 7-gon.
    """
    return {
        "vertices": ["a", "b", "c", "d", "e"],
        "edges": [["a", "b"], ["b", "c"], ["a", "c"], ["c", "d"], ["d", "e"], ["a", "e"]],
        "extensions": [
            {"facet": ["a", "b", "c"], "x0": "a", "blocks": [{"x": "c", "y": ["z"]}]},
            {"facet": ["d", "e"], "x0": "e", "blocks": [{"x": "d", "y": ["w", "x"]}]},
        ],
    }


def square_one_edge_instance():
    """A 4-cycle with one edge blown up by two variables: the hexagon instance."""
    return {
        "vertices": ["1", "2", "3", "4"],
        "edges": [["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]],
        "extensions": [
            {"facet": ["1", "2"], "x0": "1", "blocks": [{"x": "2", "y": ["u", "v"]}]},
        ],
    }


def triangle_ring_instance():
    """Four triangles in a ring; the head of every matrix feeds the next one.

    The heads chase each other cyclically, so no admissible order exists.
    """
    return {
        "vertices": ["a", "b", "c", "d", "e", "f", "g", "h"],
        "edges": [
            ["a", "e"], ["a", "b"], ["e", "b"],
            ["d", "h"], ["d", "a"], ["h", "a"],
            ["c", "g"], ["c", "d"], ["g", "d"],
            ["b", "f"], ["b", "c"], ["f", "c"],
        ],
        "extensions": [
            {"facet": ["a", "e", "b"], "x0": "a",
             "blocks": [{"x": "b", "y": ["x", "y"]}, {"x": "e", "y": ["z"]}]},
            {"facet": ["d", "h", "a"], "x0": "d",
             "blocks": [{"x": "a", "y": ["r", "s"]}, {"x": "h", "y": ["q"]}]},
            {"facet": ["c", "g", "d"], "x0": "c",
             "blocks": [{"x": "g", "y": ["u"]}, {"x": "d", "y": ["t"]}]},
            {"facet": ["b", "f", "c"], "x0": "b",
             "blocks": [{"x": "c", "y": ["w"]}, {"x": "f", "y": ["v"]}]},
        ],
    }


def triangle_ring_reoriented_instance():
    """The ring with the second matrix re-anchored at a; now orderable.

    The base swaps the roles of h and q: q becomes a graph vertex and h a
    new variable of the second matrix.
    """
    return {
        "vertices": ["a", "b", "c", "d", "e", "f", "g", "q"],
        "edges": [
            ["a", "e"], ["a", "b"], ["e", "b"],
            ["d", "q"], ["d", "a"], ["q", "a"],
            ["c", "g"], ["c", "d"], ["g", "d"],
            ["b", "f"], ["b", "c"], ["f", "c"],
        ],
        "extensions": [
            {"facet": ["a", "e", "b"], "x0": "a",
             "blocks": [{"x": "b", "y": ["x", "y"]}, {"x": "e", "y": ["z"]}]},
            {"facet": ["d", "q", "a"], "x0": "a",
             "blocks": [{"x": "d", "y": ["s", "r"]}, {"x": "q", "y": ["h"]}]},
            {"facet": ["c", "g", "d"], "x0": "c",
             "blocks": [{"x": "g", "y": ["u"]}, {"x": "d", "y": ["t"]}]},
            {"facet": ["b", "f", "c"], "x0": "b",
             "blocks": [{"x": "c", "y": ["w"]}, {"x": "f", "y": ["v"]}]},
        ],
    }


def flap_square_instance():
    """A square a-b-c-d with a flap triangle on every side, fully extended.

    Orderable, but the scroll ideals share variables around a cycle, so the
    toricity gate fails and only the lower bound is certified.
    """
    return {
        "vertices": ["a", "b", "c", "d", "e", "f", "g", "h"],
        "edges": [
            ["a", "d"], ["a", "h"], ["d", "h"],
            ["a", "b"], ["a", "e"], ["b", "e"],
            ["b", "c"], ["b", "f"], ["c", "f"],
            ["c", "d"], ["c", "g"], ["d", "g"],
        ],
        "extensions": [
            {"facet": ["a", "d", "h"], "x0": "a", "blocks": [{"x": "d", "y": ["y1", "y2"]}]},
            {"facet": ["a", "b", "e"], "x0": "a", "blocks": [{"x": "b", "y": ["y3", "y4"]}]},
            {"facet": ["b", "c", "f"], "x0": "b", "blocks": [{"x": "c", "y": ["y5", "y6"]}]},
            {"facet": ["c", "d", "g"], "x0": "c", "blocks": [{"x": "d", "y": ["y7", "y8"]}]},
        ],
    }


def cycle_extension_instance(n, sizes):
    """The n-gon with edge i blown up by sizes[i] fresh variables."""
    if n < 4:
        raise ValueError("cycle length must be at least 4")
    if len(sizes) != n:
        raise ValueError("one size per edge required")
    names = [f"x{i+1}" for i in range(n)]
    edges = [[names[i], names[(i + 1) % n]] for i in range(n)]
    extensions = []
    for i, s in enumerate(sizes):
        if s <= 0:
            continue
        extensions.append(
            {
                "facet": [names[i], names[(i + 1) % n]],
                "x0": names[i],
                "blocks": [{"x": names[(i + 1) % n], "y": [f"y{i+1}_{t+1}" for t in range(s)]}],
            }
        )
    return {"vertices": names, "edges": edges, "extensions": extensions}


# ---------------------------------------------------------------------------
# seeded generators
# ---------------------------------------------------------------------------


def random_connected_graph(rng, n, p=0.45):
    """A random connected graph on v0..v{n-1}: a random spanning tree plus noise."""
    names = [f"v{i}" for i in range(n)]
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add((names[j], names[i]))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((names[i], names[j]))
    return Graph(names, sorted(edges))


def random_chordal_graph(rng, n):
    """Random chordal graph: every vertex is simplicial at the moment of birth."""
    names = [f"v{i}" for i in range(n)]
    g = Graph(names[:1], [])
    edges = []
    for i in range(1, n):
        cliques = maximal_cliques(g)
        base = list(rng.choice(cliques))
        rng.shuffle(base)
        take = base[: rng.randint(1, len(base))]
        edges.extend((u, names[i]) for u in take)
        g = Graph(names[: i + 1], edges)
    return g


def attach_random_matrices(g, rng, max_new=7, max_matrices=4):
    """Random valid scroll matrices on the facets of ``g``'s clique complex.

    Returns an extensions list for the instance schema, possibly empty.
    """
    cx = CliqueComplex(g)
    proper = proper_edges(cx)
    counter = 0
    extensions = []
    budget = max_new
    facets = list(cx.facets)
    rng.shuffle(facets)
    for f in facets:
        if len(extensions) >= max_matrices or budget <= 0:
            break
        fset = set(f)
        anchors = [
            v
            for v in sorted(fset)
            if any(g.edge_key(v, w) in proper for w in fset - {v})
        ]
        if not anchors or rng.random() < 0.3:
            continue
        x0 = rng.choice(anchors)
        partners = [w for w in sorted(fset - {x0}) if g.edge_key(x0, w) in proper]
        rng.shuffle(partners)
        partners = partners[: rng.randint(1, len(partners))]
        blocks = []
        for j, x in enumerate(partners):
            # the first block may be empty only when another block follows
            low = 0 if (j == 0 and len(partners) > 1) else 1
            if budget < max(low, 1) and low == 1:
                break
            size = rng.randint(low, max(low, min(3, budget)))
            ys = [f"y{counter + t}" for t in range(size)]
            counter += size
            budget -= size
            blocks.append({"x": x, "y": ys})
        if not blocks or all(not b["y"] for b in blocks):
            continue
        extensions.append({"facet": sorted(fset), "x0": x0, "blocks": blocks})
    return extensions


def random_extension_instance(seed, require_orderable=True, max_total=12):
    """A seeded random valid extension with at most ``max_total`` variables."""
    rng = random.Random(seed)
    for _ in range(400):
        n = rng.randint(4, 7)
        g = random_connected_graph(rng, n)
        extensions = attach_random_matrices(
            g, rng, max_new=max_total - n, max_matrices=4
        )
        if not extensions:
            continue
        doc = {
            "vertices": list(g.vertices),
            "edges": [list(e) for e in sorted(g.edges)],
            "extensions": extensions,
        }
        try:
            ext, _ = parse_instance(doc)
        except ValueError:
            continue
        if require_orderable and not isinstance(
            find_admissible_order(ext.matrices), OrderFound
        ):
            continue
        return doc
    raise RuntimeError(f"no valid instance found for seed {seed}")


def chordal_instance(seed, n=6):
    """A seeded random extension over a chordal base (always 2-linear)."""
    rng = random.Random(seed)
    for _ in range(400):
        g = random_chordal_graph(rng, n)
        extensions = attach_random_matrices(g, rng, max_new=12 - n, max_matrices=3)
        doc = {
            "vertices": list(g.vertices),
            "edges": [list(e) for e in sorted(g.edges)],
            "extensions": extensions,
        }
        try:
            parse_instance(doc)
        except ValueError:
            continue
        return doc
    raise RuntimeError(f"no valid chordal instance for seed {seed}")


def random_cycle_extension_instance(seed, n=None):
    """A seeded cycle extension; at least one edge stays bare."""
    rng = random.Random(seed)
    if n is None:
        n = rng.randint(4, 6)
    sizes = [rng.randint(0, 3) for _ in range(n)]
    sizes[rng.randrange(n)] = 0
    if not any(sizes):
        sizes[0] = rng.randint(1, 3)
    return cycle_extension_instance(n, sizes)
