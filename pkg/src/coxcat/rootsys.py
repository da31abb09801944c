"""Finite root systems with exact coordinates.

Crystallographic types (A, B, C, D, E, F, G) use integer simple-root
coordinates; H3 and H4 use GoldenNumber coordinates; I2(m) is represented
without coordinates at all, as a permutation action on 2m rays.

Positive roots are generated by closing the simple roots under the simple
reflections and sorted by (height, coordinates), so every index-based
structure downstream is deterministic.  A RootSystem is immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .errors import InvariantBroken, UnsupportedType
from .exact import GoldenNumber, PHI

_LABEL_RE = re.compile(r"^([A-H])(\d+)$|^I2\((\d+)\)$")

# exponents of the non-crystallographic types are fixed constants
_H_EXPONENTS = {3: (1, 5, 9), 4: (1, 11, 19, 29)}


def parse_label(label: str) -> Tuple[str, int, Optional[int]]:
    """Split a type label into (family, rank, dihedral order or None)."""
    s = label.strip().upper().replace(" ", "")
    m = _LABEL_RE.match(s)
    if not m:
        raise UnsupportedType(f"cannot parse type label {label!r}")
    if m.group(3) is not None:
        order = int(m.group(3))
        if order < 5:
            raise UnsupportedType("I2(m) requires m >= 5; smaller m duplicate A/B types")
        return "I", 2, order
    family, rank = m.group(1), int(m.group(2))
    bounds = {
        "A": (1, None),
        "B": (2, None),
        "C": (3, None),
        "D": (4, None),
        "E": (6, 8),
        "F": (4, 4),
        "G": (2, 2),
        "H": (3, 4),
    }
    lo, hi = bounds[family]
    if rank < lo or (hi is not None and rank > hi):
        raise UnsupportedType(f"rank {rank} out of range for family {family}")
    return family, rank, None


def _chain_edges(n: int) -> list:
    return [(i, i + 1) for i in range(n - 1)]


def _diagram_edges(family: str, n: int) -> list:
    if family in ("A", "B", "C", "F", "G", "H"):
        return _chain_edges(n)
    if family == "D":
        return _chain_edges(n - 1) + [(n - 3, n - 1)]
    if family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(1, 3)]
    raise UnsupportedType(family)


def _coxeter_matrix(family: str, n: int, edges: list) -> list:
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    for (i, j) in edges:
        m[i][j] = m[j][i] = 3
    if family in ("B", "C"):
        m[n - 2][n - 1] = m[n - 1][n - 2] = 4
    elif family == "F":
        m[1][2] = m[2][1] = 4
    elif family == "G":
        m[0][1] = m[1][0] = 6
    elif family == "H":
        m[0][1] = m[1][0] = 5
    return m


def _cartan_matrix(family: str, n: int, edges: list):
    """Rows pair against coroots: entry [i][j] is <alpha_j, alpha_i-dual>."""
    if family == "H":
        a = [[GoldenNumber(0)] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = GoldenNumber(2)
        for (i, j) in edges:
            a[i][j] = a[j][i] = GoldenNumber(-1)
        a[0][1] = a[1][0] = -PHI
        return a
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for (i, j) in edges:
        a[i][j] = a[j][i] = -1
    if family == "B":
        a[n - 1][n - 2] = -2  # the short simple root's row
    elif family == "C":
        a[n - 2][n - 1] = -2
    elif family == "F":
        a[2][1] = -2
    elif family == "G":
        a[0][1] = -3  # node 0 short, node 1 long
    return a


def _symmetrizer(family: str, n: int) -> list:
    """Half squared lengths d_i, making d_i * cartan[i][j] symmetric."""
    d = [Fraction(1)] * n
    if family == "B":
        d[n - 1] = Fraction(1, 2)
    elif family == "C":
        d[n - 1] = Fraction(2)
    elif family == "F":
        d[2] = d[3] = Fraction(1, 2)
    elif family == "G":
        d[1] = Fraction(3)
    return d


def _bipartition(n: int, edges: list) -> Tuple[frozenset, frozenset]:
    """Two-colour the (tree) diagram, node 0 in the plus part."""
    colour = {0: 0}
    stack = [0]
    neighbours = {i: [] for i in range(n)}
    for (i, j) in edges:
        neighbours[i].append(j)
        neighbours[j].append(i)
    while stack:
        i = stack.pop()
        for j in neighbours[i]:
            if j not in colour:
                colour[j] = 1 - colour[i]
                stack.append(j)
    if len(colour) != n:
        raise InvariantBroken("Coxeter diagram is not connected")
    plus = frozenset(i for i, c in colour.items() if c == 0)
    minus = frozenset(range(n)) - plus
    return plus, minus


@dataclass(frozen=True)
class CartanDatum:
    label: str
    family: str
    rank: int
    edges: tuple
    coxeter_m: tuple
    cartan: Optional[tuple]
    symmetrizer: Optional[tuple]
    iplus: frozenset
    iminus: frozenset
    crystallographic: bool


def _make_datum(label: str) -> CartanDatum:
    family, n, m = parse_label(label)
    if family == "I":
        edges = ((0, 1),)
        cox = ((1, m), (m, 1))
        return CartanDatum(
            label=f"I2({m})",
            family="I",
            rank=2,
            edges=edges,
            coxeter_m=cox,
            cartan=None,
            symmetrizer=None,
            iplus=frozenset({0}),
            iminus=frozenset({1}),
            crystallographic=False,
        )
    edges = sorted(tuple(sorted(e)) for e in _diagram_edges(family, n))
    cox = _coxeter_matrix(family, n, edges)
    cartan = _cartan_matrix(family, n, edges)
    plus, minus = _bipartition(n, edges)
    crys = family != "H"
    return CartanDatum(
        label=f"{family}{n}",
        family=family,
        rank=n,
        edges=tuple(edges),
        coxeter_m=tuple(tuple(r) for r in cox),
        cartan=tuple(tuple(r) for r in cartan),
        symmetrizer=tuple(_symmetrizer(family, n)) if crys else tuple([Fraction(1)] * n),
        iplus=plus,
        iminus=minus,
        crystallographic=crys,
    )


def _zero_like(family: str):
    return GoldenNumber(0) if family == "H" else 0


def _is_nonnegative(family: str, coords: tuple) -> bool:
    if family == "H":
        return all(c.sign() >= 0 for c in coords)
    return all(c >= 0 for c in coords)


def _simple_image(cartan, coords: tuple, i: int) -> tuple:
    pairing = sum((cartan[i][j] * coords[j] for j in range(len(coords))),
                  start=cartan[i][i] * 0)
    out = list(coords)
    out[i] = out[i] - pairing
    return tuple(out)


def _close_positive_roots(datum: CartanDatum) -> list:
    n = datum.rank
    zero = _zero_like(datum.family)
    one = zero + 1
    simples = []
    for i in range(n):
        coords = [zero] * n
        coords[i] = one
        simples.append(tuple(coords))
    found = set(simples)
    queue = list(simples)
    while queue:
        coords = queue.pop()
        for i in range(n):
            image = _simple_image(datum.cartan, coords, i)
            if image in found:
                continue
            if _is_nonnegative(datum.family, image):
                found.add(image)
                queue.append(image)
    return sorted(found, key=lambda c: (sum(c[1:], start=c[0]), c))


class RootSystem:
    """A finite root system plus its simple-reflection permutation tables.

    Roots are indexed 0..2N-1: positives in canonical order first, then the
    negative of positive j at index N + j.
    """

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.label = datum.label
        self.family = datum.family
        self.rank = datum.rank
        self.crystallographic = datum.crystallographic
        if datum.family == "I":
            self.m = datum.coxeter_m[0][1]
            self._build_dihedral()
        else:
            self.m = None
            self._build_coordinates()
        self._validate()

    # -- construction ------------------------------------------------------

    def _build_coordinates(self) -> None:
        datum = self.datum
        positives = _close_positive_roots(datum)
        n_pos = len(positives)
        self.positive_roots = tuple(positives)
        self.n_positive = n_pos
        index = {}
        for j, coords in enumerate(positives):
            index[coords] = j
            index[tuple(-c for c in coords)] = n_pos + j
        self._index = index
        self.heights = tuple(sum(c[1:], start=c[0]) for c in positives)
        self.supports = tuple(
            frozenset(i for i, c in enumerate(coords) if not self._is_zero(c))
            for coords in positives
        )
        tables = []
        for i in range(self.rank):
            table = []
            for x in range(2 * n_pos):
                table.append(index[_simple_image(datum.cartan, self.root_coords(x), i)])
            tables.append(tuple(table))
        self.simple_tables = tuple(tables)
        self.simple_positions = tuple(self._simple_indices())
        if self.crystallographic:
            counts = {}
            for h in self.heights:
                counts[h] = counts.get(h, 0) + 1
            parts = [counts[h] for h in sorted(counts)]
            if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
                raise InvariantBroken("height distribution is not a partition")
            conj = _conjugate(parts)
            self.exponents = tuple(sorted(conj))
        else:
            self.exponents = _H_EXPONENTS[self.rank]

    def _simple_indices(self) -> list:
        zero = _zero_like(self.family)
        one = zero + 1
        out = []
        for i in range(self.rank):
            coords = [zero] * self.rank
            coords[i] = one
            out.append(self._index[tuple(coords)])
        return out

    def _build_dihedral(self) -> None:
        m = self.m
        self.positive_roots = None
        self.n_positive = m
        self.heights = None
        self.supports = tuple(
            frozenset({0}) if j == 0 else frozenset({1}) if j == m - 1 else frozenset({0, 1})
            for j in range(m)
        )
        # root index x <-> ray (-x) mod 2m; reflection rho_j acts on indices
        # by x -> (m - 2j - x) mod 2m, and rho_0, rho_1 are the two simples
        self.simple_tables = (
            tuple((m - x) % (2 * m) for x in range(2 * m)),
            tuple((m - 2 - x) % (2 * m) for x in range(2 * m)),
        )
        self.simple_positions = (0, m - 1)
        self.exponents = (1, m - 1)

    # -- invariant checks --------------------------------------------------

    def _validate(self) -> None:
        n, N = self.rank, self.n_positive
        e = self.exponents
        if sum(e) != N:
            raise InvariantBroken(f"{self.label}: exponent sum {sum(e)} != {N}")
        if 2 * N % n:
            raise InvariantBroken(f"{self.label}: 2N not divisible by rank")
        if e[0] != 1 or e[-1] != self.coxeter_number - 1:
            raise InvariantBroken(f"{self.label}: exponent endpoints wrong")
        for table in self.simple_tables:
            if sorted(table) != list(range(2 * N)):
                raise InvariantBroken(f"{self.label}: reflection table not a bijection")
        if self.positive_roots is not None:
            for support in self.supports:
                if not self._support_connected(support):
                    raise InvariantBroken(f"{self.label}: disconnected root support")
            # height 1 exactly for simple roots, so they lead the canonical order
            for pos in self.simple_positions:
                if pos >= n:
                    raise InvariantBroken(f"{self.label}: simple roots not first in order")

    def _support_connected(self, support: frozenset) -> bool:
        if not support:
            return False
        seen = {min(support)}
        stack = [min(support)]
        while stack:
            i = stack.pop()
            for (a, b) in self.datum.edges:
                for x, y in ((a, b), (b, a)):
                    if x == i and y in support and y not in seen:
                        seen.add(y)
                        stack.append(y)
        return seen == support

    def _is_zero(self, c) -> bool:
        return c.is_zero() if isinstance(c, GoldenNumber) else c == 0

    # -- basic data --------------------------------------------------------

    @property
    def coxeter_number(self) -> int:
        return 2 * self.n_positive // self.rank

    @property
    def order(self) -> int:
        w = 1
        for e in self.exponents:
            w *= e + 1
        return w

    def root_coords(self, x: int) -> tuple:
        """Coordinates of root index x (negatives are negated positives)."""
        N = self.n_positive
        if x < N:
            return self.positive_roots[x]
        return tuple(-c for c in self.positive_roots[x - N])

    def root_index(self, coords: tuple) -> int:
        return self._index[coords]

    def neg(self, x: int) -> int:
        """Index of the negative of root x."""
        N = self.n_positive
        return x + N if x < N else x - N

    def identity_table(self) -> tuple:
        return tuple(range(2 * self.n_positive))

    def root_name(self, x: int) -> str:
        N = self.n_positive
        sign = "" if x < N else "-"
        j = x if x < N else x - N
        if self.positive_roots is not None:
            coords = self.positive_roots[j]
            return sign + "(" + ",".join(str(c) for c in coords) + ")"
        return f"{sign}p{j}"

    # -- full reflections ----------------------------------------------------

    def full_reflection_count(self) -> int:
        """Number of reflections not contained in a proper parabolic."""
        cached = getattr(self, "_full_count", None)
        if cached is not None:
            return cached
        count = self._count_full_reflections()
        self._full_count = count
        return count

    def _count_full_reflections(self) -> int:
        if self.family == "I":
            reflections = [
                g for g in _dihedral_elements(self)
                if _negated_positive_count(self, g) == 1
            ]
            if len(reflections) != self.m:
                raise InvariantBroken(f"{self.label}: expected {self.m} reflections")
            return len(reflections) - 2
        full = range(self.rank)
        return sum(1 for s in self.supports if len(s) == len(full))

    def formula_value(self) -> Fraction:
        """(n h / |W|) * product of (e_i - 1) over the exponents above 1."""
        prod = 1
        for e in self.exponents[1:]:
            prod *= e - 1
        return Fraction(self.rank * self.coxeter_number * prod, self.order)


def _conjugate(parts: Sequence[int]) -> tuple:
    ps = sorted((p for p in parts if p > 0), reverse=True)
    if not ps:
        return ()
    return tuple(sum(1 for p in ps if p > i) for i in range(ps[0]))


def _dihedral_elements(rs: RootSystem) -> list:
    """All 2m elements of I2(m), generated from the two simple tables."""
    gens = rs.simple_tables
    identity = rs.identity_table()
    seen = {identity}
    queue = [identity]
    while queue:
        g = queue.pop()
        for s in gens:
            h = tuple(s[x] for x in g)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return sorted(seen)


def _negated_positive_count(rs: RootSystem, table: tuple) -> int:
    N = rs.n_positive
    return sum(1 for j in range(N) if table[j] == N + j)


def reflection_of_root(rs: RootSystem, j: int) -> tuple:
    """Permutation table of the reflection negating positive root j."""
    if not 0 <= j < rs.n_positive:
        raise ValueError(f"positive root index out of range: {j}")
    if rs.family == "I":
        m = rs.m
        r = (-j) % m
        return tuple((m - 2 * r - x) % (2 * m) for x in range(2 * m))
    beta = rs.positive_roots[j]
    d = rs.datum.symmetrizer
    cartan = rs.datum.cartan

    def inner(u: tuple, v: tuple):
        total = cartan[0][0] * 0
        for a in range(rs.rank):
            for b in range(rs.rank):
                total = total + d[a] * cartan[a][b] * u[a] * v[b]
        return total

    norm = inner(beta, beta)
    table = []
    for x in range(2 * rs.n_positive):
        u = rs.root_coords(x)
        coeff = 2 * inner(u, beta) / norm
        if rs.crystallographic:
            frac = Fraction(coeff)
            if frac.denominator != 1:
                raise InvariantBroken("non-integral reflection coefficient")
            coeff = frac.numerator
        image = tuple(u[i] - coeff * beta[i] for i in range(rs.rank))
        table.append(rs.root_index(image))
    return tuple(table)


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    """Construct (and cache) the root system for a type label like "B3"."""
    return RootSystem(_make_datum(label))
