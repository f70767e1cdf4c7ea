"""Simple root systems of types A-G: Cartan data, positive roots by
reflection closure, degrees, Weyl orbits and signed Weyl enumeration.

Conventions (fixed throughout the package):
  * Bourbaki node numbering for every type.
  * cartan[i][j] = <alpha_i, alpha_j^vee>, so row i of the Cartan matrix is
    alpha_i written in the fundamental-weight basis.
  * Weights are tuples of integers in the fundamental-weight basis;
    roots are tuples of integers in the simple-root basis.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import ResourceBudgetError, UsageError

DEFAULT_WEYL_BUDGET = 10**7

Weight = tuple

# Bourbaki numbering, for reference in CLI help and docs:
#   A_n: path 1-2-...-n
#   B_n: path, node n short
#   C_n: path, node n long
#   D_n: path 1..n-2, nodes n-1 and n both attached to n-2
#   E_n: path 1-3-4-5-...-n, node 2 attached to node 4
#   F_4: path 1-2-3-4, nodes 3,4 short
#   G_2: node 1 short, node 2 long


def _cartan_matrix(letter, rank):
    """Bourbaki Cartan matrix; entry [i][j] = <alpha_i, alpha_j^vee>."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if letter == "A":
        if rank < 1:
            raise UsageError("type A needs rank >= 1")
        for i in range(rank - 1):
            bond(i, i + 1)
    elif letter == "B":
        if rank < 2:
            raise UsageError("type B needs rank >= 2")
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -2, -1)  # alpha_n short
    elif letter == "C":
        if rank < 2:
            raise UsageError("type C needs rank >= 2")
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -1, -2)  # alpha_n long
    elif letter == "D":
        if rank < 3:
            raise UsageError("type D needs rank >= 3")
        for i in range(rank - 3):
            bond(i, i + 1)
        bond(rank - 3, rank - 2)
        bond(rank - 3, rank - 1)
    elif letter == "E":
        if rank not in (6, 7, 8):
            raise UsageError("type E needs rank 6, 7 or 8")
        chain = [0] + list(range(2, rank))  # nodes 1,3,4,...,n
        for u, v in zip(chain, chain[1:]):
            bond(u, v)
        bond(1, 3)  # node 2 attached to node 4
    elif letter == "F":
        if rank != 4:
            raise UsageError("type F needs rank 4")
        bond(0, 1)
        bond(1, 2, -2, -1)  # alpha_3, alpha_4 short
        bond(2, 3)
    elif letter == "G":
        if rank != 2:
            raise UsageError("type G needs rank 2")
        bond(0, 1, -1, -3)  # alpha_1 short
    else:
        raise UsageError(f"unknown type letter {letter!r}")
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan):
    """d_i = (alpha_i, alpha_i)/2, normalised so max d_i = 1.

    Solves d_j a_ij = d_i a_ji (both equal (alpha_i, alpha_j)) by
    propagation along the Dynkin diagram.
    """
    l = len(cartan)
    d = [None] * l
    for start in range(l):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(l):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                    stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _positive_roots(cartan):
    """Reflection closure of the simple roots, in simple-root coordinates."""
    l = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for r in frontier:
            for j in range(l):
                pairing = sum(r[i] * cartan[i][j] for i in range(l))
                s = list(r)
                s[j] -= pairing
                s = tuple(s)
                if all(x >= 0 for x in s) and s not in roots:
                    roots.add(s)
                    new.append(s)
        frontier = new
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def _invert_fraction_matrix(m):
    n = len(m)
    aug = [
        [Fraction(m[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RootSystem:
    """Immutable tables for one simple type.  All methods are pure."""

    def __init__(self, type_letter, rank):
        self.type_letter = type_letter
        self.rank = rank
        self.cartan_matrix = _cartan_matrix(type_letter, rank)
        self._sym = _symmetrizer(self.cartan_matrix)
        self.positive_roots = _positive_roots(self.cartan_matrix)

        # Coroot coordinates: gamma^vee = sum_i n_i d_i / d_gamma alpha_i^vee.
        coroots = []
        for r in self.positive_roots:
            d_gamma = Fraction(0)
            for i, ni in enumerate(r):
                if ni == 0:
                    continue
                for j, nj in enumerate(r):
                    if nj:
                        d_gamma += ni * nj * self.cartan_matrix[i][j] * self._sym[j]
            d_gamma /= 2
            cc = tuple(Fraction(ni) * self._sym[i] / d_gamma for i, ni in enumerate(r))
            assert all(x.denominator == 1 for x in cc)
            coroots.append(tuple(int(x) for x in cc))
        self.positive_coroots = tuple(coroots)

        self.root_heights = tuple(sum(r) for r in self.positive_roots)
        self.coroot_heights = tuple(sum(c) for c in self.positive_coroots)

        # Exponents as the conjugate partition of the height distribution.
        hist = {}
        for h in self.coroot_heights:
            hist[h] = hist.get(h, 0) + 1
        exps = []
        top = max(hist)
        for k in range(1, top + 1):
            exps.extend([k] * (hist.get(k, 0) - hist.get(k + 1, 0)))
        self.exponents = tuple(sorted(exps))
        self.degrees = tuple(e + 1 for e in self.exponents)
        assert len(self.degrees) == rank
        assert sum(self.exponents) == len(self.positive_roots)
        order = 1
        for d in self.degrees:
            order *= d
        self.weyl_order = order

        # Fundamental-basis -> root-basis conversion (inverse of cartan^T).
        ct = tuple(
            tuple(self.cartan_matrix[j][i] for j in range(rank))
            for i in range(rank)
        )
        self._cartan_t_inv = _invert_fraction_matrix(ct)

        # (varpi_i, rho^vee) = half column sums of the coroot table.
        self._rho_check = tuple(
            Fraction(sum(c[i] for c in self.positive_coroots), 2)
            for i in range(rank)
        )

        # -w_0 as a permutation of the fundamental weights.
        perm = []
        for i in range(rank):
            w = self.dominant_representative(
                tuple(-1 if k == i else 0 for k in range(rank))
            )
            assert sorted(w) == [0] * (rank - 1) + [1]
            perm.append(w.index(1))
        self.longest_element = tuple(perm)

    # -- coordinate plumbing ------------------------------------------------

    def root_to_weight_coords(self, root):
        """Simple-root coordinates -> fundamental-weight coordinates."""
        return tuple(
            sum(root[i] * self.cartan_matrix[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def weight_to_root_coords(self, weight):
        """Fundamental-weight coordinates -> rational simple-root coordinates."""
        return tuple(
            sum(self._cartan_t_inv[i][j] * weight[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def in_root_lattice(self, weight):
        return all(x.denominator == 1 for x in self.weight_to_root_coords(weight))

    def inner(self, mu, nu):
        """W-invariant form, normalised so long roots have squared length 2."""
        r = self.weight_to_root_coords(mu)
        return sum(
            2 * r[i] * self._sym[i] * nu[i] for i in range(self.rank)
        )

    # -- pairings and heights --------------------------------------------------

    def pairing(self, mu, alpha_index):
        """(mu, alpha^vee) for the alpha_index-th positive root."""
        cr = self.positive_coroots[alpha_index]
        return sum(m * c for m, c in zip(mu, cr))

    def height(self, mu):
        """(mu, rho^vee); half-integral in general, Sum n_i for mu in Q."""
        return sum(m * k for m, k in zip(mu, self._rho_check))

    def simple_reflection(self, mu, j):
        row = self.cartan_matrix[j]
        return tuple(m - mu[j] * row[k] for k, m in enumerate(mu))

    def dominant_representative(self, mu):
        mu = tuple(mu)
        while True:
            j = next((k for k, m in enumerate(mu) if m < 0), None)
            if j is None:
                return mu
            mu = self.simple_reflection(mu, j)

    def is_dominant(self, mu):
        return all(m >= 0 for m in mu)

    def weyl_orbit(self, mu):
        """Full W-orbit of mu, as a set of weight tuples."""
        seed = tuple(mu)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            new = []
            for w in frontier:
                for j in range(self.rank):
                    if w[j] == 0:
                        continue
                    s = self.simple_reflection(w, j)
                    if s not in orbit:
                        orbit.add(s)
                        new.append(s)
            frontier = new
        return orbit

    def orbit_size(self, mu):
        """|W| / |W_mu| without enumerating the orbit."""
        return self.weyl_order // self.stabilizer_order(mu)

    def dual_weight(self, lam):
        """-w_0(lam) for dominant lam; an involution."""
        return tuple(lam[i] for i in self.longest_element)

    def parabolic_degrees(self, lam):
        """Degrees of the stabilizer W_lam, padded with 1's to full rank.

        The simple roots orthogonal to lam split into diagram components;
        each component contributes its own classical degree list, computed
        by the same height-distribution argument as for the full system.
        """
        support = [i for i, c in enumerate(lam) if c == 0]
        degs = []
        seen = set()
        for i in support:
            if i in seen:
                continue
            comp = [i]
            seen.add(i)
            stack = [i]
            while stack:
                u = stack.pop()
                for v in support:
                    if v not in seen and self.cartan_matrix[u][v] != 0:
                        seen.add(v)
                        comp.append(v)
                        stack.append(v)
            comp.sort()
            sub = tuple(
                tuple(self.cartan_matrix[u][v] for v in comp) for u in comp
            )
            degs.extend(_degrees_from_cartan(sub))
        degs.extend([1] * (self.rank - len(degs)))
        return sorted(degs)

    def stabilizer_order(self, lam):
        order = 1
        for d in self.parabolic_degrees(lam):
            order *= d
        return order

    def weyl_signed_iterate(self, budget=DEFAULT_WEYL_BUDGET):
        """Yield (word, sign) over the whole Weyl group, each element once.

        ``word`` is a tuple of simple-reflection indices; apply it with
        :meth:`apply_word`.  sign = det(w) = (-1)^length.  The traversal
        walks the orbit of rho, so each orbit point is one group element,
        and the order is deterministic: consumers may partition the stream
        (e.g. by striding) and still aggregate deterministically.
        """
        if self.weyl_order > budget:
            raise ResourceBudgetError("Weyl enumeration", self.weyl_order, budget)
        rho = (1,) * self.rank
        for point, word, sign in self._orbit_walk(rho):
            yield word, sign

    def apply_word(self, word, mu):
        for j in reversed(word):
            mu = self.simple_reflection(mu, j)
        return tuple(mu)

    def signed_orbit(self, lam, budget=DEFAULT_WEYL_BUDGET):
        """Yield (w(lam), det(w)) over W for a regular dominant lam.

        Faster inner loop than weyl_signed_iterate for alternating sums.
        """
        if self.weyl_order > budget:
            raise ResourceBudgetError("Weyl enumeration", self.weyl_order, budget)
        for point, word, sign in self._orbit_walk(tuple(lam)):
            yield point, sign

    def _orbit_walk(self, start):
        # BFS away from the dominant chamber; (mu, alpha_j^vee) > 0 at mu
        # means s_j moves further from dominance, i.e. length grows by 1.
        # Words act as w = s_{j_1} s_{j_2} ... applied right-to-left.
        seen = {start}
        frontier = [(start, (), 1)]
        while frontier:
            next_frontier = []
            for point, word, sign in frontier:
                yield point, word, sign
                for j in range(self.rank):
                    if point[j] > 0:
                        s = self.simple_reflection(point, j)
                        if s not in seen:
                            seen.add(s)
                            next_frontier.append((s, (j,) + word, -sign))
            next_frontier.sort(key=lambda t: t[0])
            frontier = next_frontier

    def weyl_dimension(self, lam):
        """Weyl dimension formula, exact."""
        num = 1
        den = 1
        for cr in self.positive_coroots:
            num *= sum((l + 1) * c for l, c in zip(lam, cr))
            den *= sum(cr)
        assert num % den == 0
        return num // den

    def __repr__(self):
        return f"RootSystem({self.type_letter}{self.rank})"


def _degrees_from_cartan(cartan):
    """Degrees of the reflection group of any simple-type Cartan matrix,
    via the conjugate partition of coroot heights (components handled by
    the caller)."""
    roots = _positive_roots(cartan)
    sym = _symmetrizer(cartan)
    l = len(cartan)
    heights = []
    for r in roots:
        d_gamma = Fraction(0)
        for i, ni in enumerate(r):
            if ni:
                for j, nj in enumerate(r):
                    if nj:
                        d_gamma += ni * nj * cartan[i][j] * sym[j]
        d_gamma /= 2
        h = sum(Fraction(ni) * sym[i] / d_gamma for i, ni in enumerate(r))
        assert h.denominator == 1
        heights.append(int(h))
    hist = {}
    for h in heights:
        hist[h] = hist.get(h, 0) + 1
    degs = []
    for k in range(1, max(hist) + 1):
        degs.extend([k + 1] * (hist.get(k, 0) - hist.get(k + 1, 0)))
    return degs


_build_lock = threading.Lock()
_build_cache = {}


def build_root_system(type_letter, rank):
    """Construct (and memoize) the root system of the given simple type."""
    if not isinstance(rank, int) or rank < 1:
        raise UsageError(f"rank must be a positive integer, got {rank!r}")
    key = (type_letter, rank)
    with _build_lock:
        rs = _build_cache.get(key)
        if rs is None:
            rs = RootSystem(type_letter, rank)
            _build_cache[key] = rs
    return rs
