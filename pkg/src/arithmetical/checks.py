"""Named theorem checks run by ``arith verify``.

Each check returns a :class:`CheckResult`.  A failing check carries a short
diagnostic naming the first thing that went wrong.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .algebra import critical_group
from .bijections import (
    Triangulation,
    apply_plan,
    f_map,
    f_map_inductive,
    iter_ballot_words,
    iter_multisets,
    omega,
    omega_canonical,
    omega_inverse,
    plan_from_structure,
    quiddity,
    rotate_triangulation,
    structure_from_triangulation,
    triangulation_from_structure,
    word_decode,
    word_encode,
)
from .combinatorics import (
    aigner_schulze_count,
    ballot,
    binomial,
    catalan,
    cycle_count_refined,
    dsum_census_closed,
    path_count_refined,
)
from .core import ArithmeticalError, ArithmeticalStructure, validate
from .cycle_enum import enumerate_cycles, iter_cycle_pairs
from .oracle import brute_force_cycle, brute_force_path
from .path_enum import SubdivisionPlan, enumerate_paths
from .transforms import rotate, rotate_multiset, subdivide_cycle, subdivide_path

__all__ = ["CheckResult", "CHECKS", "run_checks", "thread_cap"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"check": self.name, "status": "pass" if self.passed else "fail", "detail": self.detail}


class _Fail(Exception):
    pass


def _expect(cond: bool, msg: str):
    if not cond:
        raise _Fail(msg)


def _census(structures: Iterable[ArithmeticalStructure], key) -> dict:
    out: dict = {}
    for s in structures:
        k = key(s)
        out[k] = out.get(k, 0) + 1
    return out


# -- individual checks; each takes the limits dict ---------------------------


def check_path_count(lim):
    for n in range(2, lim["max_path"] + 1):
        got = sum(1 for _ in enumerate_paths(n))
        _expect(got == catalan(n - 1), f"n={n}: {got} structures, expected {catalan(n - 1)}")
    return f"n <= {lim['max_path']}"


def check_path_refined(lim):
    for n in range(2, lim["max_path"] + 1):
        got = _census(enumerate_paths(n), lambda s: s.r.count(1))
        for k in range(1, n + 1):
            _expect(
                got.get(k, 0) == path_count_refined(n, k),
                f"n={n}, r(1)={k}: {got.get(k, 0)} vs {path_count_refined(n, k)}",
            )
    return f"n <= {lim['max_path']}"


def check_path_d_entry(lim):
    top = min(lim["max_path"], 10)
    for n in range(2, top + 1):
        structures = list(enumerate_paths(n))
        for i in range(n):
            got = _census(structures, lambda s: s.d[i])
            for k in range(0, n - 1):
                want = ballot(n - 2, k)
                _expect(got.get(n - k - 1, 0) == want, f"n={n}, i={i + 1}, d_i={n - k - 1}")
            _expect(sum(got.values()) == catalan(n - 1), f"n={n}, i={i + 1}: stray d values")
    return f"n <= {top}"


def check_path_dsum(lim):
    for n in range(2, lim["max_path"] + 1):
        got = _census(enumerate_paths(n), lambda s: sum(s.d))
        _expect(min(got) == 2 * n - 2 and max(got) == 3 * n - 4 or n == 2, f"n={n}: support {sorted(got)}")
        for t in range(2 * n - 2, 3 * n - 3):
            _expect(got.get(t, 0) == dsum_census_closed(n, t), f"n={n}, sum={t}")
    return f"n <= {lim['max_path']}"


def check_path_identity(lim):
    for n in range(2, lim["max_path"] + 1):
        for s in enumerate_paths(n):
            _expect(sum(s.d) == 3 * n - 2 - s.r.count(1), f"n={n}: r={s.r}")
    return f"n <= {lim['max_path']}"


def check_path_oracle(lim):
    top = min(lim["max_path"], 10)
    for n in range(2, top + 1):
        _expect({s.r for s in enumerate_paths(n)} == set(brute_force_path(n)), f"n={n}")
    return f"n <= {top}"


def check_cycle_count(lim):
    for n in range(2, lim["max_cycle"] + 1):
        got = _census(enumerate_cycles(n), lambda s: s.r.count(1))
        total = sum(got.values())
        _expect(total == binomial(2 * n - 1, n - 1), f"n={n}: {total} structures")
        for k in range(1, n + 1):
            _expect(got.get(k, 0) == cycle_count_refined(n, k), f"n={n}, r(1)={k}")
    return f"n <= {lim['max_cycle']}"


def check_cycle_identity(lim):
    for n in range(2, lim["max_cycle"] + 1):
        for s in enumerate_cycles(n):
            _expect(sum(s.d) == 3 * n - s.r.count(1), f"n={n}: r={s.r}")
    return f"n <= {lim['max_cycle']}"


def check_cycle_oracle(lim):
    for n in range(2, lim["max_cycle"] + 1):
        _expect({s.r for s in enumerate_cycles(n)} == set(brute_force_cycle(n)), f"n={n}")
    return f"n <= {lim['max_cycle']}"


def check_cycle_d_one(lim):
    # d_i = 1 is counted by C_{n-1} structures (smoothing); r_i = 1 by paths
    # on n + 1 vertices; r_i = r_{i+1} = 1 by the Catalan number C_{n-1}.
    for n in range(3, lim["max_cycle"] + 1):
        structures = list(enumerate_cycles(n))
        for i in range(n):
            got = sum(1 for s in structures if s.d[i] == 1)
            _expect(got == binomial(2 * n - 3, n - 2), f"d_{i + 1}=1 on C_{n}: {got}")
            got = sum(1 for s in structures if s.r[i] == 1)
            _expect(got == catalan(n), f"r_{i + 1}=1 on C_{n}: {got}")
            got = sum(1 for s in structures if s.r[i] == 1 and s.r[(i + 1) % n] == 1)
            _expect(got == catalan(n - 1), f"r_{i + 1}=r_{i + 2}=1 on C_{n}: {got}")
    return f"3 <= n <= {lim['max_cycle']}"


def check_critical_group(lim):
    top_p = min(lim["max_path"], 10)
    for n in range(2, top_p + 1):
        for s in enumerate_paths(n):
            _expect(critical_group(s).torsion == (), f"path r={s.r}")
    top_c = min(lim["max_cycle"], 9)
    for n in range(2, top_c + 1):
        for s in enumerate_cycles(n):
            k = s.r.count(1)
            _expect(critical_group(s).torsion == ((k,) if k > 1 else ()), f"cycle r={s.r}")
    return f"paths n <= {top_p}, cycles n <= {top_c}"


def check_subdivision_invariance(lim):
    rng = random.Random(lim.get("seed", 0))
    top = min(max(lim["max_path"], lim["max_cycle"]), 9)
    for n in range(2, top + 1):
        for family, structures in (
            ("path", list(enumerate_paths(n))),
            ("cycle", list(enumerate_cycles(n))),
        ):
            for _ in range(lim.get("samples", 100)):
                s = rng.choice(structures)
                if family == "path":
                    t = subdivide_path(s, rng.randint(2, n))
                else:
                    t = subdivide_cycle(s, rng.randint(1, n))
                validate(t.graph, t.d, t.r)
                _expect(critical_group(s) == critical_group(t), f"{family} r={s.r}")
    return f"n <= {top}"


def check_plan_word(lim):
    top = min(lim["max_path"], 10)
    for n in range(2, top + 1):
        for s in enumerate_paths(n):
            p = plan_from_structure(s)
            _expect(p.is_normal() and apply_plan(p, n) == s, f"plan round trip r={s.r}")
            _expect(word_decode(word_encode(s), n) == s, f"word round trip r={s.r}")
    return f"n <= {top}"


def check_omega(lim):
    top = min(lim["max_cycle"], 8)
    for n in range(2, top + 1):
        seen = set()
        for S, s in iter_cycle_pairs(n):
            _expect(omega_inverse(s) == S, f"n={n}, S={list(S)}")
            seen.add(s.r)
        _expect(len(seen) == binomial(2 * n - 1, n - 1), f"n={n}: image size {len(seen)}")
    top_e = min(top, 7)
    for n in range(2, top_e + 1):
        for size in range(n):
            for S in iter_multisets(n, size):
                base = omega(S, n).r
                for t in range(n):
                    _expect(
                        omega(rotate_multiset(S, t, n), n).r == rotate(base, t),
                        f"equivariance n={n}, S={list(S)}, t={t}",
                    )
    return f"round trip n <= {top}, equivariance n <= {top_e}"


def check_f_map(lim):
    top = min(lim["max_path"], 8)
    for n in range(1, top + 1):
        words = list(iter_ballot_words(n))
        _expect(len(words) == catalan(n + 1), f"n={n}: {len(words)} words")
        images = [f_map(w) for w in words]
        _expect(images == [f_map_inductive(w) for w in words], f"n={n}: definitions differ")
        _expect(len(set(images)) == len(words), f"n={n}: not injective")
        for w in words:
            x = w
            for _ in range(n + 3):
                x = f_map(x)
            _expect(x == w, f"n={n}: order of f_n does not divide n+3 at {w}")
        for s in enumerate_paths(n + 2):
            T = triangulation_from_structure(s)
            lhs = word_encode(structure_from_triangulation(rotate_triangulation(T)))
            _expect(lhs == f_map(word_encode(s)), f"conjugation fails at r={s.r}")
    return f"n <= {top}"


def check_aigner_schulze(lim):
    top = min(lim["max_path"] - 2, 10)
    for n in range(1, top + 1):
        got = _census(
            (s for s in enumerate_paths(n + 2, r1=2)), lambda s: s.d.count(1)
        )
        for k in range(1, n + 2):
            _expect(got.get(k, 0) == aigner_schulze_count(n, k), f"n={n}, k={k}")
    return f"n <= {top}"


F3_TABLE = {
    (1, 1, 1): (0, 2, 2), (0, 1, 1): (1, 2, 2), (0, 0, 1): (1, 1, 2),
    (1, 1, 2): (0, 2, 3), (0, 1, 2): (1, 2, 3), (0, 0, 2): (1, 1, 3),
    (1, 1, 3): (0, 0, 2), (0, 1, 3): (0, 1, 2), (0, 0, 3): (0, 1, 1),
    (1, 2, 2): (0, 0, 3), (0, 2, 2): (0, 1, 3), (0, 0, 0): (1, 1, 1),
    (1, 2, 3): (0, 0, 0), (0, 2, 3): (0, 0, 1),
}


def check_literals(lim):
    c2 = {s.r: s.d for s in enumerate_cycles(2)}
    _expect(c2 == {(1, 1): (2, 2), (2, 1): (1, 4), (1, 2): (4, 1)}, f"C_2 structures {c2}")
    s = apply_plan(SubdivisionPlan(2, (1, 2, 2)), 5)
    _expect(s.d == (2, 3, 1, 2, 3) and s.r == (1, 2, 5, 3, 1), "A_5(1,2,2)")
    for w, img in F3_TABLE.items():
        _expect(f_map(w) == img, f"f_3{w}")
    _expect(omega_canonical((1, 1, 3, 5), 6) == (3, 2, 3, 1, 2, 1), "Algorithm A on [1,1,3,5]")
    _expect(omega_canonical((1, 1, 4, 4), 6) == (3, 2, 1, 3, 2, 1), "Algorithm A on [1,1,4,4]")
    pent = Triangulation(5, [(0, 1, 4), (1, 3, 4), (1, 2, 3)])
    _expect(quiddity(pent) == (1, 3, 1, 2, 2), "pentagon quiddity")
    hexa = Triangulation(6, [(0, 1, 5), (1, 4, 5), (1, 2, 4), (2, 3, 4)])
    _expect(quiddity(hexa) == (1, 3, 2, 1, 3, 2), "hexagon quiddity")
    return "ok"


def check_validate_all(lim):
    structures = [s for n in range(2, min(lim["max_path"], 8) + 1) for s in enumerate_paths(n)]
    structures += [s for n in range(2, min(lim["max_cycle"], 7) + 1) for s in enumerate_cycles(n)]
    if lim.get("inject_fault"):
        s = structures[len(structures) // 2]
        d = list(s.d)
        d[1] += 1
        structures.insert(len(structures) // 2, ArithmeticalStructure(s.graph, tuple(d), s.r))
    for s in structures:
        try:
            validate(s.graph, s.d, s.r)
        except ArithmeticalError as e:
            raise _Fail(f"{s.graph.kind} n={s.n} d={list(s.d)}: {e}") from None
    return f"{len(structures)} structures"


CHECKS: dict[str, Callable] = {
    "validate-all": check_validate_all,
    "path-count": check_path_count,
    "path-refined": check_path_refined,
    "path-d-entry": check_path_d_entry,
    "path-dsum": check_path_dsum,
    "path-identity": check_path_identity,
    "path-oracle": check_path_oracle,
    "cycle-count": check_cycle_count,
    "cycle-identity": check_cycle_identity,
    "cycle-oracle": check_cycle_oracle,
    "cycle-d-one": check_cycle_d_one,
    "critical-group": check_critical_group,
    "subdivision-invariance": check_subdivision_invariance,
    "plan-word": check_plan_word,
    "omega": check_omega,
    "f-map": check_f_map,
    "aigner-schulze": check_aigner_schulze,
    "literals": check_literals,
}


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("ARITH_THREADS", "1")))
    except ValueError:
        return 1


def _run_one(name: str, lim: dict) -> CheckResult:
    try:
        return CheckResult(name, True, CHECKS[name](lim))
    except _Fail as e:
        return CheckResult(name, False, str(e))


def run_checks(
    max_path: int = 12,
    max_cycle: int = 8,
    only: Iterable[str] | None = None,
    inject_fault: bool = False,
    workers: int | None = None,
) -> list[CheckResult]:
    """Run the named checks (all by default); results come back in suite order."""
    names = list(CHECKS) if not only else list(only)
    unknown = [x for x in names if x not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    lim = {"max_path": max_path, "max_cycle": max_cycle, "inject_fault": inject_fault}
    workers = workers or thread_cap()
    if workers == 1:
        return [_run_one(x, lim) for x in names]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda x: _run_one(x, lim), names))
