"""Resource caps. Defaults can be overridden through environment variables."""
from __future__ import annotations

import os
from dataclasses import dataclass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@dataclass
class Limits:
    max_order: int = 512            # largest tournament accepted at all
    brute_vertex_cap: int = 12      # brute_delta_prime: 2^n subsets
    brute_arc_cap: int = 7          # brute_delta: exhaustive arc subsets
    tr_cap: int = 10**7             # enumerate_tr: candidate subsets
    canon_cap: int = 9              # canonical_code / enumeration order
    delta_witness_budget: int = 200_000  # arc subsets tried for a delta witness
    module_listing_cap: int = 200   # nontrivial modules printed per report

    @classmethod
    def from_env(cls) -> "Limits":
        return cls(
            max_order=_env_int("TOURMOD_MAX_ORDER", cls.max_order),
            brute_vertex_cap=_env_int("TOURMOD_BRUTE_VERTEX_CAP", cls.brute_vertex_cap),
            brute_arc_cap=_env_int("TOURMOD_BRUTE_ARC_CAP", cls.brute_arc_cap),
            tr_cap=_env_int("TOURMOD_TR_CAP", cls.tr_cap),
            canon_cap=_env_int("TOURMOD_CANON_CAP", cls.canon_cap),
            delta_witness_budget=_env_int("TOURMOD_DELTA_BUDGET", cls.delta_witness_budget),
            module_listing_cap=_env_int("TOURMOD_MODULE_LISTING_CAP", cls.module_listing_cap),
        )


LIMITS = Limits.from_env()
