"""Resource limits, overridable through APRINGS_* environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Hard bounds for the enumerative parts of the package.

    All values are inclusive caps.  ``default_limits`` reads the
    environment once per call, so tests can monkeypatch the variables.
    """

    max_group_order: int = 5040        # permutation-group closure
    max_subgroup_order: int = 120      # subgroup-lattice enumeration
    max_carrier: int = 4096            # finite-quotient carrier size
    max_oracle_spectrum: int = 256     # exhaustive ideal enumeration
    max_sumset: int = 20000            # |T_n| cap during sum-set extension
    max_summands: int = 8              # n cap for root_sum_set
    max_length_radius: int = 12        # breadth-first length search
    max_cyclotomic_degree: int = 64    # deg Phi_m cap
    max_listed_prime: int = 13         # concrete maximal-ideal listings


_ENV_FIELDS = {
    "max_group_order": "APRINGS_MAX_GROUP_ORDER",
    "max_carrier": "APRINGS_MAX_CARRIER",
    "max_sumset": "APRINGS_MAX_SUMSET",
}


def default_limits() -> Limits:
    overrides = {}
    for field, env in _ENV_FIELDS.items():
        raw = os.environ.get(env)
        if raw is not None:
            overrides[field] = int(raw)
    return Limits(**overrides)
