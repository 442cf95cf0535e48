#!/usr/bin/env python3
"""Time the expensive kernels: canonical forms, classification, fuzzing.

Usage: python scripts/benchmark.py [FUZZ_TRIALS_PER_TEMPLATE]
"""

import sys
import time

sys.path.insert(0, "src")

from capclass.capset import Cap
from capclass.classifier import check_invariance_fuzz, classify
from capclass.equivalence import canonical_form
from capclass.gf2 import apply_affine_map, random_invertible_affine
from capclass.templates import LABELS, instantiate


def timed(label, fn):
    started = time.perf_counter()
    result = fn()
    print(f"{label:<42} {time.perf_counter() - started:8.3f}s")
    return result


def main() -> None:
    trials = int(sys.argv[1]) if len(sys.argv) > 1 else 1000

    for label in ("T10_55_3", "T11_555_332", "T12_5555_233333"):
        cap = instantiate(label)
        timed(f"canonical_form({label}), cold caches", lambda c=cap: canonical_form(c))
        images = [
            Cap(apply_affine_map(random_invertible_affine(7, s), cap.points))
            for s in range(50)
        ]
        timed(
            f"canonical_form({label}), 50 random images",
            lambda caps=images: [canonical_form(c) for c in caps],
        )

    timed("classify(6, 10)", lambda: classify(6, 10))
    timed("classify(7, 13)", lambda: classify(7, 13))
    result = timed(
        f"invariance fuzz, {trials} maps x {len(LABELS)} templates",
        lambda: check_invariance_fuzz(trials_per_template=trials),
    )
    print("fuzz passed:", result.passed)


if __name__ == "__main__":
    main()
