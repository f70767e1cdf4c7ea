"""Combinatorial oracle: graded dimension count of partitions inside an
m x n box, and the three-way identity with the Gaussian binomial and the
type-A Dynkin polynomial.
"""

from __future__ import annotations

from math import comb

from .dynkin import dynkin_product
from .errors import ResourceBudgetError
from .qpoly import QPolynomial, gaussian_binomial
from .rootsystem import build_root_system

DEFAULT_ENUM_BUDGET = 10**6


def box_partition_poincare(n, m, budget=DEFAULT_ENUM_BUDGET):
    """Coefficient of q^d counts partitions of d with at most m parts,
    each part at most n, by direct lexicographic enumeration."""
    if n < 1 or m < 1:
        raise ValueError("box_partition_poincare needs n, m >= 1")
    total = comb(m + n, m)
    if total > budget:
        raise ResourceBudgetError("box partition enumeration", total, budget)
    counts = [0] * (n * m + 1)

    def rec(bound, slots, size):
        counts[size] += 1
        if slots == 0:
            return
        for part in range(1, bound + 1):
            rec(part, slots - 1, size + part)

    rec(n, m, 0)
    assert sum(counts) == total
    return QPolynomial(counts)


def verify_section6_identity(n, m, budget=DEFAULT_ENUM_BUDGET):
    """Box partitions = Gaussian binomial = Dynkin polynomial of
    (A_n, m*varpi_1), all three exactly."""
    box = box_partition_poincare(n, m, budget)
    gauss = gaussian_binomial(m, n)
    rs = build_root_system("A", n)
    dyn = dynkin_product(rs, (m,) + (0,) * (n - 1))
    return box == gauss == dyn
