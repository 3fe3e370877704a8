"""Pure squeezed fully symmetric states (continuous-variable GHZ family).

The family is parameterized by the total mode count and the diagonal
element b >= 1 of every single-mode reduction (b grows with squeezing).
Forcing global purity fixes the off-diagonal covariances in closed form,
and the whole 1 x K entanglement hierarchy follows from the equivalent
two-mode reduction.
"""

import math
from dataclasses import dataclass

from .entanglement import one_by_k_negativity
from .symmetric import SymmetricBlockParams, build_fully_symmetric

#: default squeezing-parameter grid for sweeps
DEFAULT_B_GRID = (1.1, 1.5, 2.0, 5.0, 10.0)


@dataclass(frozen=True)
class GhzSpec:
    """Pure-family member: inverse single-mode purity b and total mode count."""

    b: float
    total_modes: int

    def __post_init__(self):
        if self.b < 1.0:
            raise ValueError(f"b must be >= 1, got {self.b}")
        if self.total_modes < 2:
            raise ValueError(f"total_modes must be >= 2, got {self.total_modes}")


def ghz_covariances(b, total_modes):
    """Off-diagonal covariances (e1, e2) forced by global purity.

    With n = total_modes - 1:
    e_i = [1 + b^2 (n-1) - n -+ sqrt((b^2-1)(b^2 (n+1)^2 - (n-1)^2))] / (2 b n)
    (plus sign for e1).  At b = 1 this is the vacuum; at total_modes = 2 it
    degenerates to (sqrt(b^2-1), -sqrt(b^2-1)), the two-mode squeezed state.
    """
    if b < 1.0:
        raise ValueError(f"b must be >= 1, got {b}")
    if total_modes < 2:
        raise ValueError(f"total_modes must be >= 2, got {total_modes}")
    n = total_modes - 1
    root = math.sqrt((b * b - 1.0) * (b * b * (n + 1) ** 2 - (n - 1) ** 2))
    base = 1.0 + b * b * (n - 1) - n
    return (base + root) / (2.0 * b * n), (base - root) / (2.0 * b * n)


def ghz_block(spec):
    """Standard-form block parameters of the pure family member."""
    e1, e2 = ghz_covariances(spec.b, spec.total_modes)
    return SymmetricBlockParams(b=spec.b, e1=e1, e2=e2, n_modes=spec.total_modes)


def build_ghz(spec):
    """Covariance matrix of the pure family member (purity 1 by construction)."""
    return build_fully_symmetric(ghz_block(spec))


def ghz_hierarchy(spec):
    """1 x K negativities for K = 1 .. total_modes - 1, ascending in K.

    The top entry (K = total_modes - 1) depends on b only, not on the mode
    count: for pure states the 1 x rest entanglement is a function of the
    single-mode entropy alone.
    """
    params = ghz_block(spec)
    return [
        (k, one_by_k_negativity(params, k))
        for k in range(1, spec.total_modes)
    ]


def ghz_limit(k, n):
    """Infinite-squeezing limit of the 1 x K negativity inside an
    (n+1)-mode pure member.

    -0.5 * ln(1 - 4k / (n (k+1) - k (k-3))); +inf exactly at k = n, and
    bounded by ln(sqrt(5)) for every k < n.
    """
    k = int(k)
    n = int(n)
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    if k == n:
        return float("inf")
    return -0.5 * math.log(1.0 - 4.0 * k / (n * (k + 1) - k * (k - 3)))


@dataclass(frozen=True)
class ScalingRow:
    """Negativities of the (n+1)-mode pure member at three splits."""

    n: int
    e_1x1: float
    e_1xNm1: float
    e_1xN: float

    def to_dict(self):
        return {
            "n": self.n,
            "e_1x1": self.e_1x1,
            "e_1xNm1": self.e_1xNm1,
            "e_1xN": self.e_1xN,
        }


def scaling_table(b, n_range):
    """1x1, 1x(N-1) and 1xN negativities of (N+1)-mode members across N.

    As N grows at fixed b the pairwise (1x1) column shrinks, the 1x(N-1)
    column grows, and the 1xN column stays put: entanglement migrates from
    pairs into genuinely multipartite correlations.
    """
    if b <= 1.0:
        raise ValueError(f"scaling table needs b > 1, got {b}")
    rows = []
    for n in n_range:
        n = int(n)
        if not 2 <= n <= 50:
            raise ValueError(f"n values must lie in [2, 50], got {n}")
        params = ghz_block(GhzSpec(b=b, total_modes=n + 1))
        rows.append(
            ScalingRow(
                n=n,
                e_1x1=one_by_k_negativity(params, 1).value,
                e_1xNm1=one_by_k_negativity(params, n - 1).value,
                e_1xN=one_by_k_negativity(params, n).value,
            )
        )
    return rows


def sweep_records(b_values=DEFAULT_B_GRID, n_totals=range(2, 11)):
    """Full (b, N, K) grid of hierarchy values, one record per combination.

    Deterministic ordering by (b, n_total, k); feeds the long-format CSV
    with columns b, n_total, k, E_N, n_tilde_minus.
    """
    records = []
    for b in b_values:
        for total in n_totals:
            for k, res in ghz_hierarchy(GhzSpec(b=float(b), total_modes=int(total))):
                records.append(
                    {
                        "b": float(b),
                        "n_total": int(total),
                        "k": k,
                        "E_N": res.value,
                        "n_tilde_minus": res.n_tilde_minus,
                    }
                )
    return records
