"""The acceptance suite: every headline computation, one criterion per entry.

Each criterion is a function returning (passed, detail).  The CLI prints one
line per criterion; the test suite asserts each one individually.  All checks
are exact; the only randomness is in the property-based entries and is driven
by an explicit seed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .lattice import YClass, arithmetic_genus, canonical_class
from .delpezzo import (LAT, classify_exceptional, eff_decompose, enumerate_nef,
                       nef_decompose, to_symmetric)
from .config import standard_config, ramification_span_index
from .picard import (GeneratorTable, build_generator_table, image_index,
                     picard_image_index, torsion_subgroup, parse_xclass,
                     xclass_to_text)
from .effective import (ALL_BITS, InS, NonEffective, decide,
                        exceptional_induction, is_minimal, s_membership,
                        scan, step3_tables)
from .degeneration import (DEGENERATE, SMOOTH, exceptional_collection_check)

DEFAULT_SEED = 20240901

CASES = ((6, "plain"), (5, "plain"), (4, "nodal"),
         (4, "non-nodal"), (3, "plain"), (2, "plain"))


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _c1_torsion_ranks(seed: int) -> tuple[bool, str]:
    expected = (6, 5, 4, 4, 3, 3)
    dims = tuple(len(torsion_subgroup(standard_config(k, v))) for k, v in CASES)
    return dims == expected, f"dims={dims} expected={expected}"


def _c2_indices(seed: int) -> tuple[bool, str]:
    notes = []
    ok = True
    expected_span = {(6, "plain"): 3, (5, "plain"): 6, (4, "nodal"): 12,
                     (4, "non-nodal"): 12, (3, "plain"): 24}
    for case, want in expected_span.items():
        cfg = standard_config(*case)
        got = image_index(cfg)
        full = picard_image_index(cfg)
        ok &= got == want == full
        notes.append(f"K2={case[0]}{case[1][0]}:{got}")
    # K^2 = 2: the full Picard image has index 3*2^3 = 24 by covolume, but
    # the twelve curves and the E_s only span a subgroup of twice that index;
    # the factor two is exactly the ramification-span gap.
    cfg2 = standard_config(2)
    span2, full2, gap = image_index(cfg2), picard_image_index(cfg2), \
        ramification_span_index(cfg2)
    ok &= full2 == 24 and span2 == 48 and gap == 2 and span2 == gap * full2
    notes.append(f"K2=2:full={full2},span={span2},gap={gap}")
    ram = tuple(ramification_span_index(standard_config(k, v)) for k, v in CASES)
    ok &= ram == (1, 1, 1, 1, 1, 2)
    notes.append(f"ram={ram}")
    return ok, " ".join(notes)


def _c3_table_consistency(seed: int) -> tuple[bool, str]:
    built = []
    for k, v in CASES:
        GeneratorTable(standard_config(k, v))  # suite runs at construction
        built.append(f"{k}{v[0]}")
    t6 = build_generator_table(6)
    img = t6.phi({"A1": 1, "A2": -1})
    ok = img.bits == (0, 0, 1, 0, 0, 0) and img.d == 0
    return ok, f"tables {','.join(built)} consistent; A1-A2 -> 00 10 00"


def _c4_genus_exceptions(seed: int) -> tuple[bool, str]:
    counts: dict[str, int] = {}
    for c in enumerate_nef(12):
        pa = arithmetic_genus(c)
        et = classify_exceptional(c)
        counts[et.family] = counts.get(et.family, 0) + 1
        if et.family == "NonExceptional":
            if pa <= 0 and not c.is_zero():
                return False, f"untyped class {c} has p_a={pa}"
        else:
            want = -(et.n - 1) if et.family == "Type1" else 0
            if pa != want:
                return False, f"{c} classified {et.family} but p_a={pa}"
    return True, f"nef d<=12 family counts {counts}"


def _oracle_eff(cls: YClass) -> bool:
    nh, n1, n2, n3 = cls.coeffs
    if nh < 0:
        return False
    for x4 in range(nh + 1):
        for x5 in range(nh - x4 + 1):
            x6 = nh - x4 - x5
            if n1 + x5 + x6 >= 0 and n2 + x4 + x6 >= 0 and n3 + x4 + x5 >= 0:
                return True
    return False


def _oracle_nef(cls: YClass) -> bool:
    nh, n1, n2, n3 = cls.coeffs
    top = min(-n1, -n2, -n3)
    for xh2 in range(0, max(top, 0) + 1):
        f = (-n1 - xh2, -n2 - xh2, -n3 - xh2)
        xh1 = nh + n1 + n2 + n3 + xh2
        if all(v >= 0 for v in f) and xh1 >= 0:
            return True
    return False


def _c5_decomposition_oracles(seed: int) -> tuple[bool, str]:
    lo, hi = -4, 8
    checked = 0
    for nh in range(-5, 11):
        for n1 in range(-8, 5):
            for n2 in range(-8, 5):
                for n3 in range(-8, 5):
                    cls = YClass((nh, n1, n2, n3))
                    s = to_symmetric(cls)
                    if not all(lo <= v <= hi for v in s.as_tuple()):
                        continue
                    checked += 1
                    dec = eff_decompose(cls)
                    if (dec is not None) != _oracle_eff(cls):
                        return False, f"eff mismatch at {cls}"
                    if dec is not None:
                        total = LAT.zero()
                        for name, mult in dec.items():
                            from .delpezzo import BOUNDARY_CLASS
                            total = total + mult * BOUNDARY_CLASS[name]
                        if total != cls:
                            return False, f"eff re-sum fails at {cls}"
                    ndec = nef_decompose(cls)
                    if (ndec is not None) != _oracle_nef(cls):
                        return False, f"nef mismatch at {cls}"
                    if ndec is not None:
                        from .delpezzo import NEF_CLASS
                        total = LAT.zero()
                        for name, mult in ndec.items():
                            total = total + mult * NEF_CLASS[name]
                        if total != cls:
                            return False, f"nef re-sum fails at {cls}"
    return True, f"{checked} classes against exhaustive search"


def _c6_step2(seed: int) -> tuple[bool, str]:
    t = build_generator_table(6)
    r3 = scan(t, 3)
    survivors3 = sorted(xclass_to_text(r.x) for r in r3.minimal_non_in_s)
    # the printed degree-3 list; the entry printed (3; 1 00; 1 00; 1 00) is
    # the canonical class (d(K) = K.K = 6 in this encoding) and therefore
    # appears as the degree-6 survivor, while its degree-3 print reduces to
    # negative degree.  all three printed literals must be non-effective.
    printed = ["(3; 1 10; 1 10; 1 10)", "(3; 0 00; 0 00; 0 00)",
               "(3; 1 00; 1 00; 1 00)"]
    for lit in printed:
        v = decide(t, parse_xclass(lit))
        if not isinstance(v, NonEffective):
            return False, f"printed class {lit} not proven non-effective"
    if survivors3 != ["(3; 0 00; 0 00; 0 00)", "(3; 1 10; 1 10; 1 10)"]:
        return False, f"unexpected degree<=3 survivors {survivors3}"
    r6 = scan(t, 6)
    survivors6 = sorted(xclass_to_text(r.x) for r in r6.minimal_non_in_s)
    want6 = ["(3; 0 00; 0 00; 0 00)", "(3; 1 10; 1 10; 1 10)",
             "(6; 1 00; 1 00; 1 00)"]
    if survivors6 != want6:
        return False, f"survivors at d<=6: {survivors6}"
    r8 = scan(t, 8)
    if r6.unresolved or r8.unresolved:
        return False, "unresolved classes in scan(6)/scan(8)"
    hits = dict(r6.trusted_hits)
    return True, (f"3 survivors at d<=6 (canonical-class entry at d=6), "
                  f"unresolved(6)={len(r6.unresolved)} unresolved(8)={len(r8.unresolved)}, "
                  f"trusted hits {sorted(hits)}")


def _c7_step3(seed: int) -> tuple[bool, str]:
    rep = step3_tables(build_generator_table(6))
    return rep.ok, (f"twists {rep.twist_ok}/63, shifts {rep.shift_ok}/384, "
                    f"bare canonical not in S: {rep.canonical_not_in_s}")


def _c8_step4(seed: int) -> tuple[bool, str]:
    t = build_generator_table(6)
    minus_k = -canonical_class(LAT)
    direct = induct = 0
    for ycls in enumerate_nef(12):
        d = ycls.dot(minus_k)
        if d < 7 or classify_exceptional(ycls).family == "NonExceptional":
            continue
        for bits in ALL_BITS:
            x = t.from_y(ycls, bits)
            if not is_minimal(t, x):
                continue
            if d <= 8:
                if s_membership(t, x) is None:
                    return False, f"direct search failed at {x}"
                direct += 1
            else:
                if not isinstance(exceptional_induction(t, x), InS):
                    return False, f"induction failed at {x}"
                induct += 1
    return True, f"degrees 7-8: {direct} by search; degrees 9-12: {induct} by induction"


def _c9_collection(seed: int) -> tuple[bool, str]:
    rs = exceptional_collection_check(SMOOTH)
    rd = exceptional_collection_check(DEGENERATE)
    ok = rs.all_pass and rd.all_pass and rs.chi_table() == rd.chi_table()
    return ok, (f"smooth {sum(r.passed for r in rs.pairs)}/15 pairs, "
                f"degenerate {sum(r.passed for r in rd.pairs)}/15, "
                f"chi tables identical: {rs.chi_table() == rd.chi_table()}")


def _c10_properties(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    # p_a additivity on 1000 random pairs
    for _ in range(1000):
        d1 = YClass(tuple(rng.randint(-6, 6) for _ in range(4)))
        d2 = YClass(tuple(rng.randint(-6, 6) for _ in range(4)))
        lhs = arithmetic_genus(d1 + d2)
        rhs = arithmetic_genus(d1) + arithmetic_genus(d2) + d1.dot(d2) - 1
        if lhs != rhs:
            return False, f"p_a additivity fails at {d1}, {d2}"
    # certificate and trace re-validation over a scan
    t = build_generator_table(6)
    rep = scan(t, 3)
    for r in rep.records:
        if isinstance(r.verdict, InS):
            if t.phi(r.verdict.as_dict()) != r.x:
                return False, f"certificate fails to re-sum at {r.x}"
        elif isinstance(r.verdict, NonEffective):
            r.verdict.trace.validate(t)
    # determinism: two scans render byte-identically
    if scan(t, 3).to_text() != scan(t, 3).to_text():
        return False, "scan is not deterministic"
    return True, "1000 genus pairs, full scan(3) re-validation, scan determinism"


CRITERIA: list[tuple[int, str, Callable[[int], tuple[bool, str]]]] = [
    (1, "torsion-ranks", _c1_torsion_ranks),
    (2, "picard-indices", _c2_indices),
    (3, "table-consistency", _c3_table_consistency),
    (4, "genus-exceptions", _c4_genus_exceptions),
    (5, "decomposition-oracles", _c5_decomposition_oracles),
    (6, "step2-replication", _c6_step2),
    (7, "step3-tables", _c7_step3),
    (8, "step4-induction", _c8_step4),
    (9, "exceptional-collection", _c9_collection),
    (10, "property-suites", _c10_properties),
]


def run_criterion(number: int, seed: int = DEFAULT_SEED) -> CriterionResult:
    for num, name, fn in CRITERIA:
        if num == number:
            t0 = time.time()
            passed, detail = fn(seed)
            return CriterionResult(num, name, passed, detail, time.time() - t0)
    raise ValueError(f"no criterion {number}")


def run_all(seed: int = DEFAULT_SEED,
            only: str | None = None) -> list[CriterionResult]:
    results = []
    for num, name, fn in CRITERIA:
        if only is not None and only not in name:
            continue
        t0 = time.time()
        passed, detail = fn(seed)
        results.append(CriterionResult(num, name, passed, detail, time.time() - t0))
    if only is not None and not results:
        raise ValueError(f"no criterion matches {only!r}")
    return results
