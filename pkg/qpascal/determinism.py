"""
Seeding for the randomized parts of a run (the oracle sampling of ``verify``).

All exact computations are deterministic on their own; only the sampling draws random
patterns and line parameters, from a ``random.Random`` seeded here.
"""

from __future__ import annotations

import os
import random
from typing import Optional


def resolve_seed(seed: Optional[int] = None) -> int:
    """The explicit seed, else SEED from the environment, else 0."""
    if seed is not None:
        return seed
    try:
        return int(os.getenv("SEED", "0"))
    except ValueError:
        return 0


def set_global_determinism(seed: Optional[int] = None) -> random.Random:
    """Seed the stdlib RNG and return a dedicated generator for the sampling."""
    seed = resolve_seed(seed)
    random.seed(seed)
    # Only affects child processes; the running interpreter fixed its hash seed at start
    os.environ.setdefault("PYTHONHASHSEED", str(seed))
    return random.Random(seed)
