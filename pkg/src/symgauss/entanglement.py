"""Exact 1 x K logarithmic negativity through an equivalent two-mode state.

For a single mode coupled symmetrically to an N-mode block, four
invariants (one global purity, one seralian, two local purities) pin down
a two-mode state whose negativity equals the 1 x N negativity of the full
state exactly.  Iterating inside a symmetric block gives every 1 x K
value, so multipartite entanglement reduces to closed-form two-mode
algebra.  All values are in nats.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import CovarianceMatrix
from .exceptions import InvalidInvariantsError
from .symmetric import (
    OnePlusNState,
    SymmetricBlock,
    SymmetricBlockParams,
    _nu_deg_and_pow,
    as_block,
    extract_symmetric_block,
    one_plus_n_invariants,
    two_mode_nus,
)

LN2 = math.log(2.0)


@dataclass(frozen=True)
class TwoModeEquivalent:
    """Invariants of the two-mode state reproducing a 1 x N negativity."""

    mu_eq: float
    delta_eq: float
    mu1_eq: float
    mu2_eq: float

    @property
    def delta_tilde_eq(self):
        """Seralian after partial transposition (definitional identity)."""
        return -self.delta_eq + 2.0 / self.mu1_eq**2 + 2.0 / self.mu2_eq**2


@dataclass(frozen=True)
class NegativityResult:
    """Logarithmic negativity in nats plus its deciding eigenvalue."""

    value: float
    n_tilde_minus: float
    entangled: bool

    def to_dict(self, k=None):
        out = {} if k is None else {"k": k}
        out.update(
            {
                "E_N": self.value,
                "n_tilde_minus": self.n_tilde_minus,
                "entangled": self.entangled,
            }
        )
        return out

    def in_bits(self):
        """Presentation-only conversion of the value to bits."""
        return self.value / LN2


def equivalent_two_mode(state):
    """Map a 1 + N state to the invariants of its equivalent two-mode state.

    Global purity nu_deg**(N-1) * mu_sigma, seralian delta_ag + nu_top**2,
    and local purities (mu_alpha, 1 / nu_top).  For N = 1 the state is its
    own equivalent.
    """
    inv = one_plus_n_invariants(state)
    _, nu_pow = _nu_deg_and_pow(state.block)
    mu2 = nu_pow * inv.mu_betaN
    return TwoModeEquivalent(
        mu_eq=nu_pow * inv.mu_sigma,
        delta_eq=inv.delta_ag + 1.0 / mu2**2,
        mu1_eq=inv.mu_alpha,
        mu2_eq=mu2,
    )


def negativity_from_equivalent(eq, tol=1e-9):
    """Exact logarithmic negativity of a two-mode state given its invariants.

    Only the smaller eigenvalue of the transposed spectrum can dip below 1;
    the larger is asserted to stay above it (within ``tol``).
    """
    n_minus, n_plus = two_mode_nus(eq.mu_eq, eq.delta_tilde_eq)
    if n_plus < 1.0 - tol:
        raise InvalidInvariantsError(
            f"larger transposed eigenvalue {n_plus} < 1; invariants do not "
            "describe a physical two-mode state"
        )
    value = max(0.0, -math.log(n_minus))
    return NegativityResult(
        value=value, n_tilde_minus=n_minus, entangled=bool(n_minus < 1.0)
    )


def _coerce_fs(block):
    if isinstance(block, (SymmetricBlock, SymmetricBlockParams)):
        return as_block(block)
    if isinstance(block, (CovarianceMatrix, np.ndarray, list)):
        return extract_symmetric_block(block)
    raise TypeError(
        f"expected a symmetric block or fully symmetric covariance matrix, "
        f"got {type(block).__name__}"
    )


def one_by_k_negativity(block, k):
    """Negativity between one mode and K others of a fully symmetric state.

    The other N - 1 - K modes are traced out first, which for fully
    symmetric states just shortens the block; the remaining (K+1)-mode
    state is then split as single mode | K-mode block and reduced to its
    equivalent two-mode form.
    """
    block = _coerce_fs(block)
    k = int(k)
    if not 1 <= k <= block.n_modes - 1:
        raise ValueError(
            f"k must be in [1, {block.n_modes - 1}] for a "
            f"{block.n_modes}-mode state, got {k}"
        )
    state = OnePlusNState(
        alpha=block.beta,
        gamma=block.eps,
        block=SymmetricBlock(block.beta, block.eps, k),
    )
    return negativity_from_equivalent(equivalent_two_mode(state))


def entanglement_hierarchy(block, k_max=None):
    """All 1 x K negativities for K = 1 .. k_max, ascending in K.

    Nondecreasing in K whenever the block is physical; strictly increasing
    for the pure squeezed family with b > 1.
    """
    block = _coerce_fs(block)
    if k_max is None:
        k_max = block.n_modes - 1
    k_max = int(k_max)
    if not 1 <= k_max <= block.n_modes - 1:
        raise ValueError(
            f"k_max must be in [1, {block.n_modes - 1}], got {k_max}"
        )
    return [(k, one_by_k_negativity(block, k)) for k in range(1, k_max + 1)]


def entropy_of_entanglement(b):
    """Von Neumann entropy of a single-mode state with symplectic eigenvalue b.

    f(b) = ((b+1)/2) ln((b+1)/2) - ((b-1)/2) ln((b-1)/2); zero at b = 1 and
    strictly increasing.  For the pure symmetric family this is the
    entanglement entropy of any one mode versus the rest.
    """
    if b < 1.0:
        raise ValueError(f"single-mode eigenvalue must be >= 1, got {b}")
    up = 0.5 * (b + 1.0)
    down = 0.5 * (b - 1.0)
    ent = up * math.log(up)
    if down > 0.0:
        ent -= down * math.log(down)
    return ent
