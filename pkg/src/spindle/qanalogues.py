"""q-analogues: the q-counting of positive-root decompositions, Lusztig
q-multiplicities by alternating Weyl sums, parabolic Poincare factors
t_lam(q), jump polynomials of End-type modules, and the graded series of
the g- and t-endomorphism algebras.
"""

from __future__ import annotations

import threading

from . import characters as ch
from .errors import DomainError, InternalConsistencyError
from .qpoly import GradedSeries, QPolynomial, cyclo_product
from .rootsystem import DEFAULT_WEYL_BUDGET

# Above this Weyl-group order, wmf computations skip the alternating-sum
# cross-check and use only the closed q-power form.
CLOSED_FORM_WEYL_THRESHOLD = 10**4


class QKostantTable:
    """Memoized q-counting of nu as multisets of positive roots.

    P(nu) has coefficient of q^k equal to the number of ways to write nu
    (simple-root coordinates) as a sum of exactly k positive roots.
    Safe under concurrent reads; fills are idempotent.
    """

    def __init__(self, rs):
        self.rs = rs
        self._memo = {}
        self._lock = threading.Lock()

    def partition_q(self, nu):
        nu = tuple(nu)
        if any(x < 0 for x in nu):
            return QPolynomial.zero()
        return self._count(0, nu)

    def _count(self, i, nu):
        if not any(nu):
            return QPolynomial.one()
        roots = self.rs.positive_roots
        if i == len(roots):
            return QPolynomial.zero()
        key = (i, nu)
        with self._lock:
            hit = self._memo.get(key)
        if hit is not None:
            return hit
        alpha = roots[i]
        acc = QPolynomial.zero()
        k = 0
        cur = nu
        while all(x >= 0 for x in cur):
            acc = acc + self._count(i + 1, cur).shift(k)
            k += 1
            cur = tuple(x - a for x, a in zip(cur, alpha))
        with self._lock:
            self._memo.setdefault(key, acc)
        return acc


_tables = {}
_tables_lock = threading.Lock()


def _table(rs):
    key = (rs.type_letter, rs.rank)
    with _tables_lock:
        t = _tables.get(key)
        if t is None:
            t = QKostantTable(rs)
            _tables[key] = t
    return t


def kostant_partition_q(rs, nu):
    """P_q(nu) for nu in simple-root coordinates."""
    return _table(rs).partition_q(nu)


def lusztig_q_multiplicity(rs, lam, mu, budget=DEFAULT_WEYL_BUDGET):
    """Alternating Weyl sum of P_q over w(lam+rho) - mu - rho.

    Asserts the classical properties: nonnegative coefficients, support
    iff mu is a weight of V_lam, degree (lam-mu, rho^vee).
    """
    lam = tuple(lam)
    mu = tuple(mu)
    lam_rho = tuple(l + 1 for l in lam)
    mu_rho = tuple(m + 1 for m in mu)
    acc = QPolynomial.zero()
    for point, sign in rs.signed_orbit(lam_rho, budget=budget):
        diff = tuple(p - m for p, m in zip(point, mu_rho))
        rc = rs.weight_to_root_coords(diff)
        if any(x.denominator != 1 or x < 0 for x in rc):
            continue
        term = kostant_partition_q(rs, tuple(int(x) for x in rc))
        acc = acc + (term if sign > 0 else -term)
    if any(c < 0 for c in acc.coeffs):
        raise InternalConsistencyError(
            f"negative coefficient in q-multiplicity for {lam}, {mu}"
        )
    if not acc.is_zero():
        expected_deg = rs.height(tuple(l - m for l, m in zip(lam, mu)))
        if acc.degree != expected_deg:
            raise InternalConsistencyError(
                f"q-multiplicity degree {acc.degree} != height {expected_deg}"
            )
    return acc


def t_poly(rs, lam):
    """Length generating polynomial of the stabilizer W_lam:
    prod_i (1 - q^{d_i(W_lam)}) / (1 - q)."""
    degs = rs.parabolic_degrees(tuple(lam))
    return cyclo_product(degs, [1] * rs.rank)


def kostant_t0_factorization(rs):
    """t_0 as the height-shift product over the positive roots."""
    return cyclo_product(
        [h + 1 for h in rs.root_heights], list(rs.root_heights)
    )


def generalized_exponents(rs, lam, budget=DEFAULT_WEYL_BUDGET):
    """Sorted exponent multiset of the zero-weight q-multiplicity."""
    lam = tuple(lam)
    if not rs.in_root_lattice(lam):
        raise DomainError(
            f"{lam} is outside the root lattice; no covariants exist"
        )
    m0 = lusztig_q_multiplicity(rs, lam, (0,) * rs.rank, budget=budget)
    return m0.exponents_with_multiplicity()


def _q_mult_fn(rs, lam, wmf, method, budget):
    """Choose between the alternating sum and the wmf q-power shortcut."""
    if method == "weyl" or (method == "auto" and not wmf):
        return lambda nu: lusztig_q_multiplicity(rs, lam, nu, budget=budget)
    if not wmf:
        raise ValueError("closed form requires a wmf highest weight")

    def power(nu):
        h = rs.height(tuple(l - n for l, n in zip(lam, nu)))
        return QPolynomial.monomial(int(h))

    return power


def jump_tensor(rs, lam, mu, method="auto", budget=DEFAULT_WEYL_BUDGET,
                dim_budget=ch.DEFAULT_DIM_BUDGET):
    """Jump polynomial of V_lam (x) V_mu^*: the t_0/t_nu-weighted sum of
    products of q-multiplicities over the shared dominant weights."""
    lam = tuple(lam)
    mu = tuple(mu)
    t0 = t_poly(rs, (0,) * rs.rank)
    f_lam = _q_mult_fn(rs, lam, ch.is_wmf(rs, lam, dim_budget), method, budget)
    if mu == lam:
        f_mu = f_lam
        mu_support = None
    else:
        f_mu = _q_mult_fn(rs, mu, ch.is_wmf(rs, mu, dim_budget), method, budget)
        mu_support = set(ch.dominant_weights(rs, mu, dim_budget))
    acc = QPolynomial.zero()
    for nu in ch.dominant_weights(rs, lam, dim_budget):
        if mu_support is not None and nu not in mu_support:
            continue
        ratio = t0.exact_divide(t_poly(rs, nu))
        acc = acc + f_lam(nu) * f_mu(nu) * ratio
    return acc


def f_lambda(rs, lam, method="auto", budget=DEFAULT_WEYL_BUDGET,
             dim_budget=ch.DEFAULT_DIM_BUDGET):
    """Jump polynomial of End V_lam.

    For wmf weights the closed q-power form is used; when the Weyl group is
    small enough the full alternating-sum route is run as well and the two
    must agree.  Degree and value-at-1 laws are asserted.
    """
    lam = tuple(lam)
    wmf = ch.is_wmf(rs, lam, dim_budget)
    if wmf:
        result = jump_tensor(rs, lam, lam, method="closed",
                             budget=budget, dim_budget=dim_budget)
        if method == "weyl" or (
            method == "auto" and rs.weyl_order <= CLOSED_FORM_WEYL_THRESHOLD
        ):
            via_sum = jump_tensor(rs, lam, lam, method="weyl",
                                  budget=budget, dim_budget=dim_budget)
            if via_sum != result:
                raise InternalConsistencyError(
                    f"closed form and Weyl sum disagree for {lam}"
                )
    else:
        result = jump_tensor(rs, lam, lam, method="weyl",
                             budget=budget, dim_budget=dim_budget)

    if any(lam):
        expected_deg = 2 * rs.height(lam)
        if result.degree != expected_deg:
            raise InternalConsistencyError(
                f"deg F = {result.degree}, expected {expected_deg} for {lam}"
            )
    dom = ch.dominant_multiplicities(rs, lam, dim_budget)
    expected_mass = sum(m * m * rs.orbit_size(mu) for mu, m in dom.items())
    if result(1) != expected_mass:
        raise InternalConsistencyError(
            f"F(1) = {result(1)}, expected {expected_mass} for {lam}"
        )
    return result


def poincare_cg(rs, lam, method="auto", budget=DEFAULT_WEYL_BUDGET,
                dim_budget=ch.DEFAULT_DIM_BUDGET):
    """Graded series of the algebra of invariant matrix-valued polynomial
    maps on the Lie algebra (numerator = jump polynomial of End V_lam)."""
    num = jump_tensor(
        rs, lam, lam, method=method, budget=budget, dim_budget=dim_budget
    )
    return GradedSeries(num, rs.degrees)


def poincare_ct(rs, lam, dim_budget=ch.DEFAULT_DIM_BUDGET):
    """Graded series of the Cartan counterpart: numerator is the plain sum
    of t_0/t_nu over the dominant weights of V_lam."""
    t0 = t_poly(rs, (0,) * rs.rank)
    acc = QPolynomial.zero()
    for nu in ch.dominant_weights(rs, tuple(lam), dim_budget):
        acc = acc + t0.exact_divide(t_poly(rs, nu))
    return GradedSeries(acc, rs.degrees)
