"""Scroll-matrix extension data attached to the facets of a clique complex.

A facet F may carry a two-row matrix built from a distinguished vertex x0,
a list of blocks (one per proper edge {x0, x_j}), and fresh variables
Y_j inserted along each block.  The matrix columns are

    x0 | y_j1 ... y_jn_j        (top row)
    *  | y_j2 ... x_j           (bottom row, each block shifted by one)

where the entry under x0 is y_11, or x_1 when the first block carries no
new variables.  The 2x2 minors of these matrices, together with the
non-edges of the extended 1-skeleton, generate the binomial system the rest
of the package analyses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import CliqueComplex, Graph, proper_edges


class ExtensionError(ValueError):
    """Invalid scroll-extension data; carries indices for error pointers."""

    def __init__(self, message, matrix_index=None, block_index=None):
        super().__init__(message)
        self.matrix_index = matrix_index
        self.block_index = block_index


@dataclass(frozen=True)
class ScrollBlock:
    """One block: the facet vertex x closing the block and its new variables."""

    x: str
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "y", tuple(self.y))


class ScrollMatrix:
    """The two-row matrix of one extended facet."""

    __slots__ = ("facet", "x0", "blocks")

    def __init__(self, facet, x0, blocks):
        object.__setattr__(self, "facet", frozenset(facet))
        object.__setattr__(self, "x0", x0)
        object.__setattr__(
            self,
            "blocks",
            tuple(b if isinstance(b, ScrollBlock) else ScrollBlock(*b) for b in blocks),
        )

    def __setattr__(self, name, value):
        raise AttributeError("ScrollMatrix is immutable")

    @property
    def head(self):
        """The top-left entry (always x0)."""
        return self.x0

    def columns(self):
        """All columns as (top, bottom) pairs, first column included."""
        b1 = self.blocks[0]
        cols = [(self.x0, b1.y[0] if b1.y else b1.x)]
        for b in self.blocks:
            ys = b.y
            for t in range(len(ys)):
                cols.append((ys[t], ys[t + 1] if t + 1 < len(ys) else b.x))
        return tuple(cols)

    def top_row(self):
        return tuple(c[0] for c in self.columns())

    def bottom_row(self):
        return tuple(c[1] for c in self.columns())

    def y_vertices(self):
        return tuple(v for b in self.blocks for v in b.y)

    def gamma_vertices(self):
        """The facet vertices appearing in the matrix: x0 and the block ends."""
        return frozenset({self.x0} | {b.x for b in self.blocks})

    def variables(self):
        return frozenset({self.x0} | {b.x for b in self.blocks} | set(self.y_vertices()))

    def block_pairs(self):
        """The proper-edge pairs {x0, x_j}, one per block, in block order."""
        return tuple(frozenset((self.x0, b.x)) for b in self.blocks)

    def column_position(self, j, t):
        """Column index of the t-th new variable (1-based) of block j (1-based)."""
        start = 1 + sum(len(b.y) for b in self.blocks[: j - 1])
        return start + t - 1

    def __repr__(self):
        fac = ",".join(sorted(self.facet))
        return f"ScrollMatrix({{{fac}}}, x0={self.x0}, {len(self.blocks)} blocks)"


class Extension:
    """A clique complex together with validated scroll matrices on some facets.

    Built through :func:`validate_extension`.  Exposes the extended facets
    (facet plus its new variables) and the 1-skeleton of the extended complex,
    whose edge set is the union of all pairs inside each extended facet.
    """

    __slots__ = ("base", "matrices", "by_facet", "facet_bar", "skeleton_bar")

    def __init__(self, base, matrices, facet_bar, skeleton_bar):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "matrices", tuple(matrices))
        object.__setattr__(
            self, "by_facet", {m.facet: m for m in matrices}
        )
        object.__setattr__(self, "facet_bar", facet_bar)
        object.__setattr__(self, "skeleton_bar", skeleton_bar)

    def __setattr__(self, name, value):
        raise AttributeError("Extension is immutable")

    def matrix_index(self, m):
        return self.matrices.index(m)

    def __repr__(self):
        return (
            f"Extension({len(self.base.skeleton.vertices)} base vertices, "
            f"{len(self.matrices)} matrices, "
            f"{len(self.skeleton_bar.vertices)} total vertices)"
        )


def validate_extension(base, matrices):
    """Check every invariant of the scroll data and assemble the Extension.

    Raises :class:`ExtensionError` on: an {x0, x_j} pair that is not a proper
    edge, new variables colliding with the base or with each other, an empty
    block past the first, x0 or a block vertex outside the facet, duplicate
    or unknown facets.
    """
    if not isinstance(base, CliqueComplex):
        base = CliqueComplex(base)
    matrices = tuple(matrices)
    facet_set = set(base.facet_sets())
    proper = proper_edges(base)
    base_vertices = set(base.skeleton.vertices)
    seen_facets = set()
    all_y = {}
    for mi, m in enumerate(matrices):
        if m.facet not in facet_set:
            raise ExtensionError(
                f"{sorted(m.facet)} is not a facet of the base complex", mi
            )
        if m.facet in seen_facets:
            raise ExtensionError(f"duplicate matrix for facet {sorted(m.facet)}", mi)
        seen_facets.add(m.facet)
        if m.x0 not in m.facet:
            raise ExtensionError(f"x0 {m.x0!r} is not in its facet", mi)
        if not m.blocks:
            raise ExtensionError("matrix with no blocks", mi)
        if len(m.blocks) == 1 and not m.blocks[0].y:
            raise ExtensionError("matrix with a single empty block is trivial", mi)
        seen_x = set()
        for bi, b in enumerate(m.blocks):
            if b.x not in m.facet:
                raise ExtensionError(
                    f"block vertex {b.x!r} is not in the facet", mi, bi
                )
            if b.x == m.x0:
                raise ExtensionError("block vertex equals x0", mi, bi)
            if b.x in seen_x:
                raise ExtensionError(f"repeated block vertex {b.x!r}", mi, bi)
            seen_x.add(b.x)
            if bi > 0 and not b.y:
                raise ExtensionError(
                    "only the first block may have no new variables", mi, bi
                )
            edge = base.skeleton.edge_key(m.x0, b.x)
            if edge not in base.skeleton.edges or edge not in proper:
                raise ExtensionError(
                    f"{{{m.x0}, {b.x}}} is not a proper edge of its facet", mi, bi
                )
            for v in b.y:
                if v in base_vertices:
                    raise ExtensionError(
                        f"new variable {v!r} collides with a base vertex", mi, bi
                    )
                if v in all_y:
                    raise ExtensionError(
                        f"new variable {v!r} used twice", mi, bi
                    )
                all_y[v] = (mi, bi)

    facet_bar = {}
    for f in base.facet_sets():
        facet_bar[f] = f
    for m in matrices:
        facet_bar[m.facet] = m.facet | set(m.y_vertices())

    vertices = list(base.skeleton.vertices)
    for m in matrices:
        vertices.extend(m.y_vertices())
    edges = set(base.skeleton.edges)
    rank = {v: i for i, v in enumerate(vertices)}
    for fb in facet_bar.values():
        for u, w in combinations(sorted(fb, key=rank.get), 2):
            edges.add((u, w))
    skeleton_bar = Graph(vertices, edges)
    return Extension(base, matrices, facet_bar, skeleton_bar)


# ---------------------------------------------------------------------------
# generator system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSystem:
    """Monomial and binomial generators of the extended ideal.

    ``nf``: the non-edges of the extended 1-skeleton (canonical pairs).
    ``minors``: per facet, the 2x2 minors as ordered pairs of monomials,
    the column-order leading candidate first.  Monomials are sorted pairs of
    variable names (a square like z*z appears as ("z", "z")).
    """

    nf: tuple
    minors: tuple  # ((facet, ((mono, mono), ...)), ...) in input matrix order


def matrix_minors(m):
    """The 2x2 minors of one matrix: ((top_u*bot_v, top_v*bot_u)) for u < v."""
    cols = m.columns()
    out = []
    for u, v in combinations(range(len(cols)), 2):
        lead = tuple(sorted((cols[u][0], cols[v][1])))
        trail = tuple(sorted((cols[v][0], cols[u][1])))
        out.append((lead, trail))
    return tuple(out)


def generator_system(ext):
    """NF (non-edges of the extended skeleton) plus every matrix's minors."""
    g = ext.skeleton_bar
    nf = tuple(
        sorted(
            (
                (u, w)
                for u, w in combinations(g.vertices, 2)
                if not g.has_edge(u, w)
            ),
            key=lambda e: (g.rank[e[0]], g.rank[e[1]]),
        )
    )
    minors = tuple((m.facet, matrix_minors(m)) for m in ext.matrices)
    return GeneratorSystem(nf, minors)


def primary_components(ext):
    """One symbolic component per facet: (facet, minors of its matrix, excluded variables).

    Facets without a matrix get an empty minor list.  The excluded variables
    are everything outside the extended facet.
    """
    rank = ext.skeleton_bar.rank
    allv = set(ext.skeleton_bar.vertices)
    out = []
    for f in ext.base.facet_sets():
        m = ext.by_facet.get(f)
        minors = matrix_minors(m) if m is not None else ()
        fb = ext.facet_bar[f]
        excluded = tuple(sorted(allv - fb, key=rank.get))
        out.append((tuple(sorted(f, key=rank.get)), minors, excluded))
    return tuple(out)


# ---------------------------------------------------------------------------
# toricity gate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ToricityReport:
    """Outcome of the variable-sharing forest test on the scroll matrices.

    ``ok`` certifies the sufficient condition: matrices pairwise share at
    most one variable and the sharing graph is a forest.  A failure means
    only that the upper-bound machinery is not applicable here.
    """

    ok: bool
    reason: str | None
    components: tuple | None


def toricity_gate(ext):
    """Pass iff matrices pairwise share <= 1 variable and form a forest."""
    mats = ext.matrices
    var_sets = [m.variables() for m in mats]
    edges = []
    for i, j in combinations(range(len(mats)), 2):
        shared = var_sets[i] & var_sets[j]
        if len(shared) > 1:
            return ToricityReport(
                False,
                f"matrices {i} and {j} share {len(shared)} variables "
                f"({', '.join(sorted(shared))})",
                None,
            )
        if shared:
            edges.append((i, j))
    # forest check: every connected component has |edges| = |nodes| - 1
    parent = list(range(len(mats)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return ToricityReport(
                False, "the variable-sharing graph contains a cycle", None
            )
        parent[ri] = rj
    groups = {}
    for i in range(len(mats)):
        groups.setdefault(find(i), []).append(i)
    components = tuple(
        tuple(tuple(sorted(mats[i].facet)) for i in sorted(grp))
        for _, grp in sorted(groups.items())
    )
    return ToricityReport(True, None, components)
