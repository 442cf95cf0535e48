"""Classification of caps by size, bound checks, and the verification report.

``classify`` runs orderly generation: it seeds each dimension with the
affine frame (the unique class of independent (dim+1)-sets), extends
one representative per class by every admissible point, and dedupes by
canonical form, so exactly one representative per affine-equivalence
class survives.  ``verify_paper`` re-derives the full catalogue of
classification claims and returns a machine-readable report.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .capset import Cap, extension_candidates, is_cap, is_complete, quad_closure_1
from .decomp import (
    BasisDecomposition,
    ExtendedType,
    _basis_scan,
    decompose,
    exchange_basis,
    extended_type,
    type_census,
)
from .equivalence import CanonicalForm, canonical_form, find_isomorphism, verify_map
from .errors import DimensionOverflowError, TooLargeError
from .gf2 import (
    Point,
    PointSet,
    XorBasis,
    _affine_rank,
    affine_span,
    apply_affine_map,
    random_invertible_affine,
)
from . import templates

_MAX_CLASSIFY_DIM = 8
_MAX_CLASSIFY_SIZE = 14
_CENSUS_LIMIT = 13

DEFAULT_INVARIANCE_TRIALS = 1000
DEFAULT_EXCHANGE_TRIALS = 10000
DEFAULT_EXCHANGE_SEED = 12345
DEFAULT_TOY_DIMS = (1, 2, 3, 4)


@dataclass(frozen=True)
class ClassEntry:
    """One affine-equivalence class: representative plus its summary data."""

    cap: Cap
    form: CanonicalForm
    census: frozenset[ExtendedType] | None
    complete: bool


@dataclass(frozen=True)
class ClassTable:
    """Classes of full-dimensional caps in AG(dim,2), keyed by size."""

    dim: int
    rows: Mapping[int, tuple[ClassEntry, ...]]

    def counts(self) -> dict[int, int]:
        return {size: len(entries) for size, entries in self.rows.items()}

    def entries(self, size: int) -> tuple[ClassEntry, ...]:
        return self.rows.get(size, ())

    def max_size(self) -> int:
        nonempty = [size for size, entries in self.rows.items() if entries]
        return max(nonempty)


def _make_entry(cap: Cap, form: CanonicalForm) -> ClassEntry:
    census = type_census(cap) if cap.size <= _CENSUS_LIMIT else None
    return ClassEntry(cap, form, census, is_complete(cap))


def classify(dim: int, max_size: int, threads: int | None = None) -> ClassTable:
    """Classify the full-dimensional caps of AG(dim,2) up to affine equivalence.

    Rows run from size dim+1 upward; generation stops at the first size
    with no caps (kept as an explicit empty row) or at max_size.  Output
    is deterministic: candidates are tried in ascending mask order and
    each row is sorted by canonical form.
    """
    if dim > _MAX_CLASSIFY_DIM:
        raise DimensionOverflowError(f"classification supports dim <= {_MAX_CLASSIFY_DIM}")
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if max_size > _MAX_CLASSIFY_SIZE:
        raise TooLargeError(f"classification is desk-scale: max_size <= {_MAX_CLASSIFY_SIZE}")

    frame = Cap(PointSet(dim, (0,) + tuple(1 << i for i in range(dim))))
    rows: dict[int, tuple[ClassEntry, ...]] = {}
    current: dict[CanonicalForm, Cap] = {canonical_form(frame): frame}
    rows[dim + 1] = tuple(_make_entry(cap, form) for form, cap in sorted(current.items()))

    size = dim + 2
    while size <= max_size and current:
        extended: list[Cap] = []
        for form in sorted(current):
            cap = current[form]
            base = cap.sorted_masks()
            for z in extension_candidates(cap).sorted_masks():
                extended.append(Cap(PointSet(dim, base + (z,))))
        if threads is not None and threads > 1 and extended:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                forms = list(pool.map(canonical_form, extended))
        else:
            forms = [canonical_form(cap) for cap in extended]
        found: dict[CanonicalForm, Cap] = {}
        for cap, form in zip(extended, forms):
            if form not in found:
                found[form] = cap
        rows[size] = tuple(_make_entry(cap, form) for form, cap in sorted(found.items()))
        current = found
        size += 1
    return ClassTable(dim, rows)


def max_cap_size(dim: int) -> int:
    """Largest size with a non-empty classification row (desk-scale, dim <= 8)."""
    if dim > _MAX_CLASSIFY_DIM:
        raise DimensionOverflowError(f"supported only for dim <= {_MAX_CLASSIFY_DIM}")
    return classify(dim, _MAX_CLASSIFY_SIZE).max_size()


def tait_won_bounds(n: int) -> tuple[float, float]:
    """Closed-form lower and upper bounds on the maximum cap size in AG(n,2)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    half = 2.0 ** (n / 2.0)
    return half / math.sqrt(2.0), 1.0 + math.sqrt(2.0) * half


# ---------------------------------------------------------------------------
# Independent brute-force oracle (toy dimensions)


@lru_cache(maxsize=None)
def _invertible_matrices(dim: int) -> tuple[tuple[int, ...], ...]:
    """All invertible dim x dim GF(2) matrices as column tuples."""
    out: list[tuple[int, ...]] = []

    def rec(cols: list[int], xb: XorBasis) -> None:
        if len(cols) == dim:
            out.append(tuple(cols))
            return
        for v in range(1, 1 << dim):
            nxt = xb.copy()
            if nxt.insert(v):
                rec(cols + [v], nxt)

    rec([], XorBasis())
    return tuple(out)


def _apply_columns(cols: tuple[int, ...], x: int) -> int:
    y = 0
    j = 0
    while x:
        if x & 1:
            y ^= cols[j]
        x >>= 1
        j += 1
    return y


def brute_force_class_counts(dim: int) -> dict[int, int]:
    """Class counts by exhaustive enumeration, independent of ``classify``.

    Enumerates every cap through 0 spanning AG(dim,2) directly from the
    definition (pairwise XOR collisions) and groups them by orbit under
    the full affine group, applied element by element.  Only sensible
    for dim <= 4.
    """
    if dim > 4:
        raise TooLargeError("brute-force classification is limited to dim <= 4")
    space = 1 << dim
    caps_by_size: dict[int, list[tuple[int, ...]]] = {}

    def dfs(cap: list[int], pair_xors: set[int], start: int) -> None:
        if len(cap) >= dim + 1 and _affine_rank(cap) == dim:
            caps_by_size.setdefault(len(cap), []).append(tuple(cap))
        for z in range(start, space):
            fresh = {z ^ m for m in cap}
            if fresh & pair_xors:
                continue
            dfs(cap + [z], pair_xors | fresh, z + 1)

    dfs([0], set(), 1)

    mats = _invertible_matrices(dim)
    seen: set[frozenset[int]] = set()
    counts: dict[int, int] = {}
    for size in sorted(caps_by_size):
        for cap in caps_by_size[size]:
            key = frozenset(cap)
            if key in seen:
                continue
            counts[size] = counts.get(size, 0) + 1
            for cols in mats:
                image = [_apply_columns(cols, x) for x in cap]
                for p in image:
                    seen.add(frozenset(q ^ p for q in image))
    return counts


# ---------------------------------------------------------------------------
# Structural refutation of a 13th cap point


def thirteen_cap_pair_survey() -> list[dict]:
    """Inclusion-exclusion verdict for every conceivable 13-point structure.

    A 13-point cap of dimension 7 would decompose into an 8-point basis
    and five dependents, each supported by exactly five basis points,
    with pairwise support intersections of size 2 or 3.  For each of the
    2^10 intersection-size patterns this derives the triple and
    quadruple intersection sizes, filters the patterns ruled out by the
    triple and quadruple theorems, and evaluates the five-fold
    intersection two ways: by inclusion-exclusion over the 8 basis
    points and by containment in the smallest quadruple intersection.
    No pattern survives both.
    """
    deps = range(5)
    pair_keys = list(combinations(deps, 2))
    results = []
    for bits in range(1 << len(pair_keys)):
        p = {key: (2 if bits >> i & 1 else 3) for i, key in enumerate(pair_keys)}

        def pair(i: int, j: int) -> int:
            return p[(i, j) if i < j else (j, i)]

        triples = {
            t: pair(t[0], t[1]) + pair(t[0], t[2]) + pair(t[1], t[2]) - 7
            for t in combinations(deps, 3)
        }
        # at most one pair of size 2 within any triple of dependents
        triples_ok = all(
            sum(1 for a, b in combinations(t, 2) if pair(a, b) == 2) <= 1
            for t in triples
        )
        quads = {}
        for q in combinations(deps, 4):
            sum_pairs = sum(pair(a, b) for a, b in combinations(q, 2))
            sum_triples = sum(triples[t] for t in combinations(q, 3))
            quads[q] = 20 - sum_pairs + sum_triples - 8
        # every quadruple of dependents must contain a pair of size 2
        quads_ok = all(
            any(pair(a, b) == 2 for a, b in combinations(q, 2)) for q in quads
        )
        survives = triples_ok and quads_ok
        inclusion_exclusion = (
            8 - 25 + sum(p.values()) - sum(triples.values()) + sum(quads.values())
        )
        containment_bound = min(quads.values())
        results.append(
            {
                "pairs": tuple(p[key] for key in pair_keys),
                "survives_lemmas": survives,
                "five_fold_by_inclusion_exclusion": inclusion_exclusion,
                "five_fold_upper_bound": containment_bound,
                "consistent": survives
                and 0 <= inclusion_exclusion <= containment_bound,
            }
        )
    return results


def no_thirteen_cap_structure() -> bool:
    """True iff every surviving 13-point pattern is self-contradictory."""
    survey = thirteen_cap_pair_survey()
    survivors = [row for row in survey if row["survives_lemmas"]]
    return bool(survivors) and all(not row["consistent"] for row in survivors)


# ---------------------------------------------------------------------------
# Verification report


@dataclass(frozen=True)
class ClaimResult:
    """Outcome of one verification claim with its witness payload.

    ``elapsed_s`` is measurement metadata and stays out of the report
    payload so that identical runs serialize identically.
    """

    claim_id: str
    passed: bool
    witness: dict
    elapsed_s: float


@dataclass(frozen=True)
class VerificationReport:
    """All verification claims, each exactly once, with pass/fail status."""

    claims: tuple[ClaimResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "schema": "report v1",
            "all_passed": self.all_passed,
            "claims": [
                {"id": c.claim_id, "passed": c.passed, "witness": c.witness}
                for c in self.claims
            ],
        }


def _cap_payload(cap: Cap) -> dict:
    return {"n": cap.n, "points": list(cap.sorted_masks())}


def _map_payload(t) -> dict:
    return {
        "matrix": [Point(row, t.n).to_bits() for row in t.rows],
        "translation": Point(t.translation, t.n).to_bits(),
    }


def _timed_claim(claim_id: str, passed: bool, witness: dict, started: float) -> ClaimResult:
    return ClaimResult(claim_id, passed, dict(witness), time.perf_counter() - started)


def check_template_validity() -> ClaimResult:
    """Every template builds a cap of the stated size, dimension, and type."""
    started = time.perf_counter()
    failures = []
    details = {}
    for tid in templates.TEMPLATES:
        cap = templates.instantiate(tid.label)
        dec = decompose(cap, templates.generating_basis(tid.label))
        got = extended_type(dec)
        want = templates.expected_extended_type(tid.label)
        ok = (
            cap.size == tid.size
            and cap.dim == 7
            and is_cap(cap.points)
            and is_cap(cap.points, exhaustive=True)
            and got == want
        )
        details[tid.label] = {
            "size": cap.size,
            "dim": cap.dim,
            "extended_type": str(got),
        }
        if not ok:
            failures.append(tid.label)
    return _timed_claim(
        "template-validity",
        not failures,
        {"templates": details, "failures": failures},
        started,
    )


def check_dim7_counts(table7: ClassTable) -> ClaimResult:
    """Exactly {8:1, 9:2, 10:2, 11:1, 12:1, 13:0} classes in dimension 7."""
    started = time.perf_counter()
    expected = {8: 1, 9: 2, 10: 2, 11: 1, 12: 1, 13: 0}
    got = table7.counts()
    return _timed_claim(
        "dim7-classification-counts",
        got == expected,
        {"expected": expected, "got": got},
        started,
    )


def check_dim6_counts(table6: ClassTable) -> ClaimResult:
    """Exactly {7:1, 8:2, 9:1, 10:0} classes in dimension 6."""
    started = time.perf_counter()
    expected = {7: 1, 8: 2, 9: 1, 10: 0}
    got = table6.counts()
    return _timed_claim(
        "dim6-classification-counts",
        got == expected,
        {"expected": expected, "got": got},
        started,
    )


def check_completeness(table7: ClassTable) -> ClaimResult:
    """Only the 12-caps are complete; smaller caps extend, with named witnesses."""
    started = time.perf_counter()
    problems = []
    witness: dict = {}

    twelve = table7.entries(12)
    for entry in twelve:
        closure = quad_closure_1(entry.cap.points)
        span = affine_span(entry.cap.points)
        cands = extension_candidates(entry.cap)
        witness["twelve_cap"] = {
            "qc1_size": len(closure),
            "span_size": len(span),
            "extension_candidates": len(cands),
        }
        if not (entry.complete and len(closure) == 128 == len(span) and len(cands) == 0):
            problems.append("12-cap completeness")

    for size in (10, 11):
        for i, entry in enumerate(table7.entries(size)):
            if entry.complete or len(extension_candidates(entry.cap)) == 0:
                problems.append(f"{size}-cap representative {i} should be extendable")

    named = [
        ("T10_55_2", (1, 2, 5, 6, 7)),
        ("T10_55_3", (1, 3, 6, 7, 8)),
        ("T11_555_332", (2, 3, 4, 6, 8)),
    ]
    for label, generators in named:
        cap = templates.instantiate(label)
        point = 0
        for g in generators:
            point ^= templates.FRAME_MASKS[g - 1]
        ok = point in extension_candidates(cap)
        witness[f"witness_{label}"] = {"point": point, "admissible": ok}
        if not ok:
            problems.append(f"extension witness for {label}")
    return _timed_claim("completeness-witnesses", not problems, dict(witness, problems=problems), started)


def check_equivalence_structure() -> ClaimResult:
    """The template equivalences and non-equivalences, each with a checked map."""
    started = time.perf_counter()
    problems = []
    witness: dict = {"isomorphisms": {}}

    equivalent_pairs = [
        ("T10_75_4", "T10_55_2"),
        ("T11_755_443", "T11_555_333"),
        ("T11_755_443", "T11_555_332"),
        ("T11_555_333", "T11_555_332"),
        ("T12_7555", "T12_5555_233333"),
        ("T12_7555", "T12_5555_233332"),
        ("T12_5555_233333", "T12_5555_233332"),
    ]
    for a, b in equivalent_pairs:
        ca, cb = templates.instantiate(a), templates.instantiate(b)
        t = find_isomorphism(ca, cb)
        if t is None or not verify_map(t, ca, cb):
            problems.append(f"{a} ~ {b}")
        else:
            witness["isomorphisms"][f"{a}->{b}"] = _map_payload(t)

    ca, cb = templates.instantiate("T10_55_2"), templates.instantiate("T10_55_3")
    distinct = not (canonical_form(ca) == canonical_form(cb)) and find_isomorphism(ca, cb) is None
    witness["ten_cap_classes_distinct"] = distinct
    if not distinct:
        problems.append("T10_55_2 vs T10_55_3 must differ")
    return _timed_claim("equivalence-structure", not problems, dict(witness, problems=problems), started)


def check_census_theorems(table7: ClassTable) -> ClaimResult:
    """Census facts: forced basis types at sizes 10, 11, and 12."""
    started = time.perf_counter()
    problems = []

    type_55_2 = ExtendedType((5, 5), (2,))
    type_75_4 = ExtendedType((7, 5), (4,))
    type_55_3 = ExtendedType((5, 5), (3,))
    type_11 = ExtendedType((5, 5, 5), (3, 3, 2))
    type_12 = ExtendedType((5, 5, 5, 5), (2, 3, 3, 3, 3, 3))

    ten = [entry.census for entry in table7.entries(10)]
    expected_tens = {
        frozenset({type_55_2, type_75_4}),
        frozenset({type_55_3}),
    }
    if {frozenset(c) for c in ten} != expected_tens:
        problems.append("size-10 censuses")

    for entry in table7.entries(11):
        if type_11 not in entry.census:
            problems.append("size-11 census misses 5-5-5-(3,3,2)")
    for entry in table7.entries(12):
        if type_12 not in entry.census:
            problems.append("size-12 census misses 5-5-5-5-(2,3,3,3,3,3)")

    witness = {
        "size10": [sorted(str(t) for t in c) for c in ten],
        "size11": [sorted(str(t) for t in entry.census) for entry in table7.entries(11)],
        "size12": [sorted(str(t) for t in entry.census) for entry in table7.entries(12)],
    }
    return _timed_claim("census-theorems", not problems, dict(witness, problems=problems), started)


def _exchange_prediction_holds(dec: BasisDecomposition, a: Point, x: Point) -> bool:
    """Re-derive the closed-form supports and compare against a fresh exchange."""
    old = {p.mask: {b.mask for b in dec.support_points(i)} for i, (p, _) in enumerate(dec.dependents)}
    abit = 1 << dec.basis_masks().index(a.mask)
    partners = [
        p.mask
        for p, sup in dec.dependents
        if sup & abit and p.mask != x.mask
    ]
    result = exchange_basis(dec, a, x)
    x_support = old[x.mask]
    for i, (p, _) in enumerate(result.dependents):
        got = {b.mask for b in result.support_points(i)}
        if p.mask == a.mask:
            want = (x_support - {a.mask}) | {x.mask}
        elif p.mask in partners:
            want = (old[p.mask] ^ x_support) | {x.mask}
        else:
            want = old[p.mask]
        if got != want:
            return False
    return set(result.points.sorted_masks()) == set(dec.points.sorted_masks())


def check_exchange_contract(
    table7: ClassTable,
    trials: int = DEFAULT_EXCHANGE_TRIALS,
    seed: int = DEFAULT_EXCHANGE_SEED,
) -> ClaimResult:
    """Random exchanges match their closed-form support predictions."""
    started = time.perf_counter()
    rng = random.Random(seed)
    pool = []
    for size in (9, 10, 11, 12):
        for entry in table7.entries(size):
            cap = entry.cap
            bases = _basis_scan(cap.sorted_masks(), cap.dim + 1)
            pool.append((cap, bases))
    performed = 0
    failures = 0
    attempts = 0
    while performed < trials and attempts < trials * 20:
        attempts += 1
        cap, bases = pool[rng.randrange(len(pool))]
        subset, sups = bases[rng.randrange(len(bases))]
        masks = cap.sorted_masks()
        basis_pts = [Point(masks[i], cap.n) for i in subset]
        dec = decompose(cap, basis_pts)
        valid = []
        for i, (_, sup) in enumerate(dec.dependents):
            for pos in range(len(basis_pts)):
                if not sup >> pos & 1:
                    continue
                others = sum(
                    1
                    for j, (_, s2) in enumerate(dec.dependents)
                    if j != i and s2 >> pos & 1
                )
                if others <= 1:
                    valid.append((pos, i))
        if not valid:
            continue
        pos, i = valid[rng.randrange(len(valid))]
        a = dec.basis[pos]
        x = dec.dependents[i][0]
        if not _exchange_prediction_holds(dec, a, x):
            failures += 1
        performed += 1

    # the worked example: an 11-point set of basis type 7-5-5-(4,4,3) turns
    # into 5-5-5-(2,3,3) by swapping a3 with its second dependent
    frame = templates.FRAME_MASKS
    worked = Cap(PointSet(7, frame + (63, 0 ^ 1 ^ 2 ^ 4 ^ 64, 0 ^ 1 ^ 8 ^ 16 ^ 64)))
    dec = decompose(worked, [Point(m, 7) for m in frame])
    before = extended_type(dec)
    swapped = exchange_basis(dec, Point(2, 7), Point(0 ^ 1 ^ 2 ^ 4 ^ 64, 7))
    after = extended_type(swapped)
    example_ok = before == ExtendedType((7, 5, 5), (4, 4, 3)) and after == ExtendedType(
        (5, 5, 5), (2, 3, 3)
    )

    ten = templates.instantiate("T10_75_4")
    dec10 = decompose(ten, templates.generating_basis("T10_75_4"))
    swapped10 = exchange_basis(dec10, Point(4, 7), Point(124, 7))
    ten_ok = extended_type(swapped10) == ExtendedType((5, 5), (2,))

    passed = failures == 0 and performed == trials and example_ok and ten_ok
    witness = {
        "trials": performed,
        "failures": failures,
        "worked_example": {"before": str(before), "after": str(after)},
        "seven_five_exchange": str(extended_type(swapped10)),
    }
    return _timed_claim("exchange-contract", passed, witness, started)


def _lemma_violations(cap: Cap) -> list[str]:
    """All per-basis structural laws for one cap; empty list means clean."""
    masks = cap.sorted_masks()
    out = []
    for subset, sups in _basis_scan(masks, cap.dim + 1):
        sizes = [s.bit_count() for s in sups]
        r = len(sups)
        if any(size not in (5, 7) for size in sizes):
            out.append(f"support size outside {{5,7}} at basis {subset}")
        if sizes.count(7) > 1:
            out.append(f"two size-7 supports at basis {subset}")
        for i in range(r):
            for j in range(i + 1, r):
                inter = (sups[i] & sups[j]).bit_count()
                if sizes[i] == 5 and sizes[j] == 5 and inter not in (2, 3):
                    out.append(f"5-5 intersection {inter} at basis {subset}")
                if {sizes[i], sizes[j]} == {5, 7} and inter != 4:
                    out.append(f"7-5 intersection {inter} at basis {subset}")
        for i, j, k in combinations(range(r), 3):
            union = (sups[i] | sups[j] | sups[k]).bit_count()
            if union != 8:
                out.append(f"triple union {union} at basis {subset}")
            if sizes[i] == sizes[j] == sizes[k] == 5:
                pij = (sups[i] & sups[j]).bit_count()
                pik = (sups[i] & sups[k]).bit_count()
                pjk = (sups[j] & sups[k]).bit_count()
                triple = (sups[i] & sups[j] & sups[k]).bit_count()
                if triple != pij + pik + pjk - 7:
                    out.append(f"triple intersection identity at basis {subset}")
                if sum(1 for v in (pij, pik, pjk) if v == 2) > 1:
                    out.append(f"two 2-intersections in a triple at basis {subset}")
        for quad in combinations(range(r), 4):
            if any(sizes[i] != 5 for i in quad):
                continue
            pair_twos = [
                (i, j)
                for i, j in combinations(quad, 2)
                if (sups[i] & sups[j]).bit_count() == 2
            ]
            if not pair_twos:
                out.append(f"all-3 quadruple at basis {subset}")
                continue
            if len(pair_twos) > 2:
                out.append(f"three 2-intersections in a quadruple at basis {subset}")
            if len(pair_twos) == 2 and set(pair_twos[0]) & set(pair_twos[1]):
                out.append(f"overlapping 2-pairs at basis {subset}")
            four_fold = sups[quad[0]]
            for i in quad[1:]:
                four_fold &= sups[i]
            expected = 1 if len(pair_twos) == 1 else 0
            if four_fold.bit_count() != expected:
                out.append(f"quadruple intersection {four_fold.bit_count()} at basis {subset}")
    return out


def check_lemma_suite(table7: ClassTable) -> ClaimResult:
    """Structural laws hold for every basis of every dim-7 representative."""
    started = time.perf_counter()
    violations = []
    checked = 0
    for size, entries in table7.rows.items():
        for entry in entries:
            checked += 1
            violations += [f"size {size}: {v}" for v in _lemma_violations(entry.cap)]
    return _timed_claim(
        "lemma-suite",
        not violations,
        {"caps_checked": checked, "violations": violations[:10], "violation_count": len(violations)},
        started,
    )


def check_invariance_fuzz(trials_per_template: int = DEFAULT_INVARIANCE_TRIALS) -> ClaimResult:
    """Canonical form, cap-ness, completeness, and census survive affine maps."""
    started = time.perf_counter()
    maps = [random_invertible_affine(7, s) for s in range(trials_per_template)]
    violations = []
    for tid in templates.TEMPLATES:
        cap = templates.instantiate(tid.label)
        base_form = canonical_form(cap)
        base_complete = is_complete(cap)
        base_census = type_census(cap)
        for seed, t in enumerate(maps):
            image_set = apply_affine_map(t, cap.points)
            if not is_cap(image_set):
                violations.append(f"{tid.label} seed {seed}: image is not a cap")
                continue
            image = Cap(image_set)
            if canonical_form(image) != base_form:
                violations.append(f"{tid.label} seed {seed}: canonical form changed")
            if is_complete(image) != base_complete:
                violations.append(f"{tid.label} seed {seed}: completeness changed")
            if type_census(image) != base_census:
                violations.append(f"{tid.label} seed {seed}: census changed")
    return _timed_claim(
        "invariance-fuzz",
        not violations,
        {
            "templates": len(templates.TEMPLATES),
            "maps_per_template": trials_per_template,
            "violations": violations[:10],
            "violation_count": len(violations),
        },
        started,
    )


def check_higherdim_pair() -> ClaimResult:
    """Equal extended types need not mean equivalence one dimension up."""
    started = time.perf_counter()
    c1, c2 = templates.higherdim_pair()
    basis = templates.higherdim_generating_basis()
    t1 = extended_type(decompose(c1, basis))
    t2 = extended_type(decompose(c2, basis))
    want = ExtendedType((5, 5, 5), (3, 3, 3))
    equivalent = find_isomorphism(c1, c2) is not None
    passed = t1 == want and t2 == want and not equivalent
    witness = {
        "types": [str(t1), str(t2)],
        "equivalent": equivalent,
        "caps": [_cap_payload(c1), _cap_payload(c2)],
    }
    return _timed_claim("higher-dimension-pair", passed, witness, started)


def check_size_bounds(table7: ClassTable, table6: ClassTable) -> ClaimResult:
    """Closed-form bounds evaluate exactly and bracket the observed maxima."""
    started = time.perf_counter()
    lo7, hi7 = tait_won_bounds(7)
    lo6, hi6 = tait_won_bounds(6)
    max7 = table7.max_size()
    max6 = table6.max_size()
    tol = 1e-9
    passed = (
        abs(lo7 - 8.0) < tol
        and abs(hi7 - 17.0) < tol
        and lo7 <= max7 <= hi7
        and max7 == 12
        and lo6 <= max6 <= hi6
        and max6 == 9
    )
    witness = {
        "bounds7": [lo7, hi7],
        "bounds6": [lo6, hi6],
        "max7": max7,
        "max6": max6,
    }
    return _timed_claim("size-bounds", passed, witness, started)


def check_toy_oracle(dims: Sequence[int] = DEFAULT_TOY_DIMS) -> ClaimResult:
    """classify agrees with the exhaustive orbit oracle in toy dimensions."""
    started = time.perf_counter()
    mismatches = []
    witness: dict = {}
    for dim in dims:
        oracle = brute_force_class_counts(dim)
        table = classify(dim, _MAX_CLASSIFY_SIZE)
        cls = table.counts()
        sizes = set(oracle) | {s for s, c in cls.items() if c}
        for size in sorted(sizes):
            if cls.get(size, 0) != oracle.get(size, 0):
                mismatches.append(f"dim {dim} size {size}: classify {cls.get(size, 0)} vs oracle {oracle.get(size, 0)}")
        witness[f"dim{dim}"] = {"classify": cls, "oracle": oracle}
    return _timed_claim("toy-scale-oracle", not mismatches, dict(witness, mismatches=mismatches), started)


def verify_paper(
    *,
    invariance_trials: int = DEFAULT_INVARIANCE_TRIALS,
    exchange_trials: int = DEFAULT_EXCHANGE_TRIALS,
    toy_dims: Sequence[int] = DEFAULT_TOY_DIMS,
    threads: int | None = None,
) -> VerificationReport:
    """Re-derive the classification and check every claim, returning the report."""
    table7 = classify(7, 13, threads=threads)
    table6 = classify(6, 10, threads=threads)
    claims = (
        check_template_validity(),
        check_dim7_counts(table7),
        check_dim6_counts(table6),
        check_completeness(table7),
        check_equivalence_structure(),
        check_census_theorems(table7),
        check_exchange_contract(table7, trials=exchange_trials),
        check_lemma_suite(table7),
        check_invariance_fuzz(trials_per_template=invariance_trials),
        check_higherdim_pair(),
        check_size_bounds(table7, table6),
        check_toy_oracle(toy_dims),
    )
    return VerificationReport(claims)
