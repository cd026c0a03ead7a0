"""Nilpotent set, prime radical, prime-ideal oracle and singular ideals."""

from __future__ import annotations

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from centrum.core.config import Settings
from centrum.core.errors import OrderCapError
from centrum.core.models import Sidedness
from centrum.ring import FiniteRing, Subset, all_two_sided_ideals, close_mask

logger = logging.getLogger(__name__)


class RadicalReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    nilpotents: Subset
    prime_radical: Subset
    two_primal: bool
    singular_right: Subset
    singular_left: Subset

    def summary(self, R: FiniteRing) -> dict[str, object]:
        """JSON-ready view with element names."""
        def names(s: Subset) -> list[str]:
            return [R.name(i) for i in s.indices()]

        return {
            "nilpotents": names(self.nilpotents),
            "prime_radical": names(self.prime_radical),
            "two_primal": self.two_primal,
            "singular_right": names(self.singular_right),
            "singular_left": names(self.singular_left),
        }


def nilpotent_set(R: FiniteRing) -> Subset:
    return Subset.from_mask(R.nilpotent_mask)


def prime_radical(R: FiniteRing) -> Subset:
    """Baer lower radical as a fixpoint.

    I_0 = {0}; I_{t+1} is the ideal generated by {a : aRa ⊆ I_t}. The limit is
    the least semiprime ideal.
    """
    ideal = np.zeros(R.order, dtype=bool)
    ideal[R.zero] = True
    rounds = 0
    while True:
        rounds += 1
        seeds = np.all(ideal[R.aba], axis=1)
        nxt = close_mask(R, seeds | ideal, Sidedness.TWO_SIDED)
        if np.array_equal(nxt, ideal):
            logger.debug("prime radical stable after %d rounds", rounds)
            return Subset.from_mask(ideal)
        ideal = nxt


def is_prime_ideal(R: FiniteRing, ideal: Subset) -> bool:
    """Proper two-sided ideal with aRb ⊆ I only when a ∈ I or b ∈ I."""
    m = ideal.mask()
    if m.all():
        return False
    outside = np.flatnonzero(~m)
    for b in outside:
        # arb[a, r] = (a·r)·b
        arb = R.mul[:, b][R.mul[outside]]
        if m[arb].all(axis=1).any():
            return False
    return True


def prime_ideals_oracle(R: FiniteRing, settings: Settings | None = None) -> list[Subset]:
    """All prime ideals by brute force over the ideal lattice, to cross-check prime_radical."""
    s = settings or Settings()
    if R.order > s.oracle_max_order:
        raise OrderCapError(
            f"prime ideal oracle is capped at order {s.oracle_max_order}, ring has {R.order}"
        )
    return [I for I in all_two_sided_ideals(R, s) if is_prime_ideal(R, I)]


def singular_ideal(R: FiniteRing, side: Sidedness) -> Subset:
    """Elements whose one-sided annihilator is essential.

    right: {a : r(a) is an essential right ideal}; left mirrors it. counts[a, b]
    is the number of nonzero y in r(a) ∩ bR, from one incidence matrix product.
    """
    if side == Sidedness.RIGHT:
        ann = R.mul == R.zero
        principal = R.right_principal
    elif side == Sidedness.LEFT:
        ann = (R.mul == R.zero).T
        principal = R.left_principal
    else:
        raise ValueError("singular_ideal takes side 'right' or 'left'")
    nonzero = np.arange(R.order) != R.zero
    a_nz = ann[:, nonzero].astype(np.float32)
    p_nz = principal[np.ix_(nonzero, nonzero)].astype(np.float32)
    counts = a_nz @ p_nz.T
    return Subset.from_mask(np.all(counts > 0, axis=1))


def radical_report(R: FiniteRing) -> RadicalReport:
    nil = nilpotent_set(R)
    prime = prime_radical(R)
    return RadicalReport(
        nilpotents=nil,
        prime_radical=prime,
        two_primal=nil == prime,
        singular_right=singular_ideal(R, Sidedness.RIGHT),
        singular_left=singular_ideal(R, Sidedness.LEFT),
    )
