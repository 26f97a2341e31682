"""Standard planar diagrams and a Goeritz-matrix determinant oracle.

The generator assembles the standard diagram of ``M(e; t1, ..., tp)`` from
integral twist regions with Conway's tangle calculus: a tangle word is
built inside out by alternating "invert" (rotate a quarter turn and switch
every crossing) and "append horizontal twists" moves, each slot is plugged
in through one more inversion, and the whole row is closed vertically.

Every crossing records its four edges in true counterclockwise order with
the under-strand at slots 0 and 2, so the PD rows carry the full rotation
system of the planar embedding.  Faces are then orbits of the walk
"cross the edge, turn to the next slot", the checkerboard coloring is the
unique 2-coloring of the face adjacency, and the determinant is the
absolute determinant of a reduced Goeritz matrix.  None of this shares
anything with the closed-form parameter determinant, so the two routes
cross-check each other.

Positive integer tassels are rendered as right-handed twist regions, the
e-twists horizontally.  Mirror conventions only affect the PD output, never
the determinant.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .montesinos import MontesinosLink
from .rational import cf_expand

DEFAULT_ORACLE_BOUND = 30


class OracleLimitError(ValueError):
    """Diagram exceeds the configured crossing bound of the oracle."""


@dataclass(frozen=True)
class PlanarDiagram:
    """PD rows (four edge labels per crossing, counterclockwise from the
    incoming under-strand) plus the component count.  Edges are numbered
    consecutively along each component, knot-atlas style."""

    crossings: tuple[tuple[int, int, int, int], ...]
    components: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def pd_text(diagram: PlanarDiagram) -> str:
    return ", ".join("X(%d,%d,%d,%d)" % row for row in diagram.crossings)


@dataclass(frozen=True)
class _Tangle:
    # rows hold port tokens in CCW order, under-strand at slots 0 and 2
    rows: tuple
    wires: tuple
    nw: int
    ne: int
    sw: int
    se: int


class _Assembler:
    """Allocates port tokens and combines tangle fragments."""

    def __init__(self):
        self._next = 0

    def _port(self) -> int:
        self._next += 1
        return self._next

    def integral(self, n: int) -> _Tangle:
        if n == 0:
            a, b, c, d = (self._port() for _ in range(4))
            return _Tangle((), ((a, b), (c, d)), a, b, c, d)
        rows, wires = [], []
        first = prev = None
        for _ in range(abs(n)):
            lt, lb, rb, rt = (self._port() for _ in range(4))
            # the two chiralities differ in which strand goes under
            rows.append((lt, lb, rb, rt) if n > 0 else (lb, rb, rt, lt))
            if prev is None:
                first = (lt, lb)
            else:
                wires.append((prev[0], lt))
                wires.append((prev[1], lb))
            prev = (rt, rb)
        return _Tangle(tuple(rows), tuple(wires), first[0], prev[0], first[1], prev[1])

    def tangle_sum(self, left: _Tangle, right: _Tangle) -> _Tangle:
        wires = left.wires + right.wires + ((left.ne, right.nw), (left.se, right.sw))
        return _Tangle(
            left.rows + right.rows, wires, left.nw, right.ne, left.sw, right.se
        )

    @staticmethod
    def _rotate(t: _Tangle) -> _Tangle:
        # quarter turn counterclockwise: pure port relabeling
        return _Tangle(t.rows, t.wires, t.ne, t.se, t.nw, t.sw)

    @staticmethod
    def _switch(t: _Tangle) -> _Tangle:
        # exchange over/under everywhere: shift each CCW row by one slot
        rows = tuple((r[1], r[2], r[3], r[0]) for r in t.rows)
        return _Tangle(rows, t.wires, t.nw, t.ne, t.sw, t.se)

    def invert(self, t: _Tangle) -> _Tangle:
        """Product with the zero tangle: the parameter becomes its
        reciprocal (rotate a quarter turn, then mirror)."""
        return self._switch(self._rotate(t))

    def word_tangle(self, t: Fraction) -> _Tangle:
        if t.denominator == 1 and abs(t.numerator) == 1:
            return self.integral(t.numerator)  # elementary tangle, no word
        letters = tuple(reversed(cf_expand(t)))
        built = self.integral(letters[0])
        for a in letters[1:]:
            built = self.tangle_sum(self.invert(built), self.integral(a))
        return built


def _close_vertical(t: _Tangle):
    return t.rows, t.wires + ((t.nw, t.ne), (t.sw, t.se))


def _finish(rows, wires) -> PlanarDiagram:
    """Resolve wires into edges, orient strands, and emit PD rows."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    for a, b in wires:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    edge_darts = defaultdict(list)
    for ci, row in enumerate(rows):
        for k, token in enumerate(row):
            edge_darts[find(token)].append((ci, k))
    for darts in edge_darts.values():
        assert len(darts) == 2, "every arc must end on exactly two crossings"

    provisional = [tuple(find(token) for token in row) for row in rows]

    # walk each strand: edges get consecutive numbers, and we remember at
    # which slot each arc arrives so the under-strand can be oriented
    assigned: dict[int, int] = {}
    incoming = set()
    components = 0
    next_label = 1
    for ci in range(len(provisional)):
        for k in range(4):
            seed = provisional[ci][k]
            if seed in assigned:
                continue
            components += 1
            edge, head = seed, edge_darts[seed][0]
            while edge not in assigned:
                assigned[edge] = next_label
                next_label += 1
                c2, k2 = head
                incoming.add((c2, k2))
                exit_slot = (c2, (k2 + 2) % 4)
                edge = provisional[c2][(k2 + 2) % 4]
                d1, d2 = edge_darts[edge]
                head = d2 if d1 == exit_slot else d1

    final = []
    for ci, row in enumerate(provisional):
        under_in = [k for k in (0, 2) if (ci, k) in incoming]
        assert len(under_in) == 1
        r = under_in[0]
        final.append(tuple(assigned[row[(r + j) % 4]] for j in range(4)))
    return PlanarDiagram(tuple(final), components)


def tangle_diagram(t: Fraction, invert: bool = False) -> PlanarDiagram:
    """Vertical closure of the rational tangle for ``t`` (or of its zero
    product).  Determinants: |numerator| plain, denominator inverted."""
    asm = _Assembler()
    built = asm.word_tangle(Fraction(t))
    if invert:
        built = asm.invert(built)
    return _finish(*_close_vertical(built))


def expected_crossings(link: MontesinosLink) -> int:
    return abs(link.e) + sum(
        sum(abs(a) for a in cf_expand(t)) for t in link.tangles
    )


def standard_diagram(link: MontesinosLink) -> PlanarDiagram:
    """Standard diagram: e horizontal half-twists, then each tangle slot,
    summed left to right and closed vertically.  The crossing count is
    exactly |e| plus the total weight of the tangle words."""
    asm = _Assembler()
    body = asm.integral(link.e)
    for t in link.tangles:
        body = asm.tangle_sum(body, asm.invert(asm.word_tangle(t)))
    diagram = _finish(*_close_vertical(body))
    assert diagram.crossing_count == expected_crossings(link)
    return diagram


def _faces(pd):
    """Face orbits of the rotation system; returns (face_of_dart, count,
    edge->darts).  Connectivity forces count == crossings + 2."""
    edge_darts = defaultdict(list)
    for ci, row in enumerate(pd):
        for k, e in enumerate(row):
            edge_darts[e].append((ci, k))
    mate = {}
    for d1, d2 in edge_darts.values():
        mate[d1] = d2
        mate[d2] = d1
    face_of = {}
    count = 0
    for ci in range(len(pd)):
        for k in range(4):
            if (ci, k) in face_of:
                continue
            dart = (ci, k)
            while dart not in face_of:
                face_of[dart] = count
                mc, mk = mate[dart]
                dart = (mc, (mk + 1) % 4)
            count += 1
    assert count == len(pd) + 2, "diagram is not a connected planar embedding"
    return face_of, count, edge_darts


def goeritz_matrix(diagram: PlanarDiagram):
    """Unreduced Goeritz matrix over one checkerboard color class.

    Symmetric with zero row sums; crossings whose two white corners lie in
    the same region drop out.  Deleting any row/column and taking the
    absolute determinant gives the link determinant.
    """
    pd = diagram.crossings
    face_of, nfaces, edge_darts = _faces(pd)

    color = {0: 0}
    stack = [0]
    adjacency = defaultdict(set)
    for d1, d2 in edge_darts.values():
        f1, f2 = face_of[d1], face_of[d2]
        adjacency[f1].add(f2)
        adjacency[f2].add(f1)
    while stack:
        f = stack.pop()
        for g in adjacency[f]:
            if g not in color:
                color[g] = 1 - color[f]
                stack.append(g)
            else:
                assert color[g] != color[f], "faces are not checkerboard colorable"

    def corner(ci, k):
        # region between slots k and k+1
        return face_of[(ci, (k + 1) % 4)]

    white = [f for f in range(nfaces) if color[f] == 0]
    index = {f: i for i, f in enumerate(white)}
    size = len(white)
    matrix = [[0] * size for _ in range(size)]
    for ci in range(len(pd)):
        white_corners = [k for k in range(4) if color[corner(ci, k)] == 0]
        assert len(white_corners) == 2 and white_corners[1] - white_corners[0] == 2
        sign = 1 if white_corners == [0, 2] else -1
        u = index[corner(ci, white_corners[0])]
        v = index[corner(ci, white_corners[1])]
        if u != v:
            matrix[u][v] -= sign
            matrix[v][u] -= sign
    for i in range(size):
        matrix[i][i] = -sum(matrix[i][j] for j in range(size) if j != i)
    return matrix


def _integer_determinant(matrix) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_oracle(diagram: PlanarDiagram, max_crossings: int = DEFAULT_ORACLE_BOUND) -> int:
    """Link determinant from the diagram alone (Goeritz route)."""
    if diagram.crossing_count > max_crossings:
        raise OracleLimitError(
            "oracle limit: %d crossings exceeds the bound %d"
            % (diagram.crossing_count, max_crossings)
        )
    goeritz = goeritz_matrix(diagram)
    reduced = [row[1:] for row in goeritz[1:]]
    return abs(_integer_determinant(reduced))
