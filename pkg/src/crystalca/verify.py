"""Verification suites: reference traces, scattering laws, and invariants.

Each suite returns a list of named pass/fail results.  Randomized suites
take an explicit seed and are deterministic for a fixed one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from crystalca import golden
from crystalca.algebra import Algebra, FAMILIES, min_rank, min_scattering_rank
from crystalca.automaton import AutomatonState, conserved_E, evolve_Tl, soliton_spectrum
from crystalca.crystals import (
    elem_weight,
    enumerate_B1,
    enumerate_Bl,
    letter_to_coords,
    u_element,
    word_apply,
    word_weight,
)
from crystalca.natural import check_commutations, t_natural, t_natural_on_label
from crystalca.rmatrix import (
    AffineElement,
    build_hw_table,
    c_companion,
    energy,
    eta,
    omega,
    omega_inverse,
    r_apply_at,
    r_general,
    yang_baxter_check,
)
from crystalca.solitons import (
    SolitonLabel,
    auto_place,
    inhomogeneous_experiment,
    iota,
    predict_outgoing,
    scattering_experiment,
    state_of_solitons,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status}  {self.name}{extra}  [{self.seconds:.2f}s]"


def automaton_algebras() -> list[Algebra]:
    return [Algebra(f, min_rank(f)) for f in FAMILIES]


def scattering_algebras() -> list[Algebra]:
    return [Algebra(f, min_scattering_rank(f)) for f in FAMILIES]


def _timed(name: str, fn) -> CheckResult:
    t0 = time.time()
    try:
        ok, detail = fn()
    except Exception as exc:  # a failing check must not kill the suite
        return CheckResult(name, False, f"error: {exc}", time.time() - t0)
    return CheckResult(name, ok, detail, time.time() - t0)


# -- reference traces --------------------------------------------------------

def suite_golden() -> list[CheckResult]:
    out = []
    for name, alg, rows, r in golden.iter_runs():
        t0 = time.time()
        bad = golden.replay(alg, rows, r)
        dt = time.time() - t0
        detail = "" if bad is None else f"row {bad} differs"
        if dt >= 1.0:
            bad = bad or -1
            detail += f" too slow: {dt:.2f}s"
        out.append(CheckResult(f"golden:{name}", bad is None and dt < 1.0, detail, dt))
    return out


# -- two-soliton scattering law ----------------------------------------------

def suite_scattering(seed: int, runs: int = 200) -> list[CheckResult]:
    out = []
    for alg in scattering_algebras():
        def check(alg=alg):
            rng = random.Random((seed, alg.descriptor()).__repr__())
            low = alg.rank_lowered()
            pools = {l: enumerate_Bl(low, l) for l in range(1, 6)}
            bad = 0
            for _ in range(runs):
                l = rng.randint(2, 5)
                k = rng.randint(1, l - 1)
                labs = auto_place(
                    alg, [(l, rng.choice(pools[l])), (k, rng.choice(pools[k]))]
                )
                res = scattering_experiment(alg, labs, r=l + 1)
                if not res.match:
                    bad += 1
            return bad == 0, f"{runs} runs, {bad} mismatches"

        out.append(_timed(f"scattering:{alg.descriptor()}", check))
    return out


def suite_three_soliton(seed: int, runs: int = 50) -> list[CheckResult]:
    out = []
    for alg in scattering_algebras():
        def check(alg=alg):
            rng = random.Random((seed, "3sol", alg.descriptor()).__repr__())
            low = alg.rank_lowered()
            pools = {l: enumerate_Bl(low, l) for l in (5, 3, 1)}
            bad = 0
            for _ in range(runs):
                labs = auto_place(
                    alg, [(l, rng.choice(pools[l])) for l in (5, 3, 1)]
                )
                res = scattering_experiment(alg, labs, r=6)
                word = [lab.affine(alg) for lab in labs]
                alt = word
                for pos in (1, 0, 1):
                    alt = r_apply_at(low, alt, pos)
                if not res.match or alt != res.predicted:
                    bad += 1
            return bad == 0, f"{runs} runs, {bad} mismatches"

        out.append(_timed(f"three-soliton:{alg.descriptor()}", check))
    return out


# -- conservation and commutation --------------------------------------------

def _random_state(alg: Algebra, rng: random.Random, width: int = 10) -> AutomatonState:
    letters = []
    pool = enumerate_B1(alg)
    for _ in range(width):
        letters.append("1" if rng.random() < 0.5 else rng.choice(pool))
    return AutomatonState.from_letters(alg, letters)


def suite_conservation(seed: int, states: int = 100, lmax: int = 6) -> list[CheckResult]:
    out = []
    for alg in automaton_algebras():
        def check(alg=alg):
            rng = random.Random((seed, "cons", alg.descriptor()).__repr__())
            for _ in range(states):
                p = _random_state(alg, rng)
                base = [conserved_E(p, l) for l in range(lmax + 1)]
                evolved = {lp: evolve_Tl(p, lp).state for lp in range(1, lmax + 1)}
                for lp, q in evolved.items():
                    for l in range(lmax + 1):
                        if conserved_E(q, l) != base[l]:
                            return False, f"E_{l} changed under T_{lp}"
                for l in range(1, lmax + 1):
                    for lp in range(l + 1, lmax + 1):
                        if evolve_Tl(evolved[l], lp).state != evolve_Tl(evolved[lp], l).state:
                            return False, f"T_{l} and T_{lp} do not commute"
            return True, f"{states} states"

        out.append(_timed(f"conservation:{alg.descriptor()}", check))

    for alg in scattering_algebras():
        def check_counts(alg=alg):
            rng = random.Random((seed, "Nl", alg.descriptor()).__repr__())
            low = alg.rank_lowered()
            for _ in range(20):
                lengths = rng.choice([(5, 3), (4, 2), (5, 3, 1), (4, 3, 2)])
                labs = auto_place(
                    alg, [(l, rng.choice(enumerate_Bl(low, l))) for l in lengths]
                )
                spec = soliton_spectrum(state_of_solitons(alg, labs))
                want = {}
                for l in lengths:
                    want[l] = want.get(l, 0) + 1
                if spec != want:
                    return False, f"{lengths}: spectrum {spec}"
            return True, "20 placements"

        out.append(_timed(f"soliton-count:{alg.descriptor()}", check_counts))
    return out


# -- R-matrix properties ------------------------------------------------------

def suite_rmatrix(seed: int, yb_triples: int = 500) -> list[CheckResult]:
    out = []
    for alg in automaton_algebras():
        def check_props(alg=alg):
            for l in range(1, 4):
                for k in range(1, 4):
                    Bl, Bk = enumerate_Bl(alg, l), enumerate_Bl(alg, k)
                    for b in Bl:
                        for c in Bk:
                            c2, b2, h = r_general(alg, l, b, k, c)
                            wl = elem_weight(alg, b)
                            wr = [x + y for x, y in zip(wl, elem_weight(alg, c))]
                            back = [
                                x + y
                                for x, y in zip(elem_weight(alg, c2), elem_weight(alg, b2))
                            ]
                            if wr != back:
                                return False, f"weight broken at {b} (x) {c}"
                            rb, rc, h2 = r_general(alg, k, c2, l, b2)
                            if (rb, rc, h2) != (b, c, h):
                                return False, f"involution broken at {b} (x) {c}"
                            for i in range(1, alg.n_classical + 1):
                                for op in ("e", "f"):
                                    moved = word_apply(alg, [(l, b), (k, c)], i, op)
                                    image = word_apply(alg, [(k, c2), (l, b2)], i, op)
                                    if moved is None and image is None:
                                        continue
                                    if moved is None or image is None:
                                        return False, f"operator {op}_{i} kills one side only"
                                    mc2, mb2, mh = r_general(
                                        alg, l, moved[0][1], k, moved[1][1]
                                    )
                                    if (mc2, mb2) != (image[0][1], image[1][1]):
                                        return False, f"{op}_{i} does not commute with R"
                                    if mh != h:
                                        return False, f"H not classically invariant ({op}_{i})"
            return True, "l,k <= 3 exhaustive"

        out.append(_timed(f"rmatrix-props:{alg.descriptor()}", check_props))

    def check_norm():
        for alg in automaton_algebras():
            mins = {"A1": 1, "A2odd": 0, "A2even": 2, "B1": 0, "C1": 1, "D1": 0, "D2": 2}
            for l in range(1, 5):
                for k in range(1, 5):
                    h = energy(alg, l, u_element(alg, l), k, u_element(alg, k))
                    if h != 2 * alg.varsigma * min(l, k):
                        return False, f"{alg} H(u_{l} (x) u_{k}) = {h}"
                    if l >= k:
                        tab = build_hw_table(alg, l, k)
                        lo = min(hh for *_, hh in tab.entries())
                        if lo != mins[alg.family] * k:
                            return False, f"{alg} min H on B_{l} (x) B_{k} is {lo}"
        return True, "l,k <= 4"

    out.append(_timed("rmatrix-normalization", check_norm))

    def check_yb():
        alg = Algebra("C1", 2)
        B1 = enumerate_Bl(alg, 1)
        triples = [(a, b, c) for a in B1 for b in B1 for c in B1]
        if not yang_baxter_check(alg, 1, 1, 1, triples):
            return False, "C1:2 exhaustive triple failed"
        for alg in automaton_algebras():
            rng = random.Random((seed, "yb", alg.descriptor()).__repr__())
            pools = {l: enumerate_Bl(alg, l) for l in (1, 2, 3)}
            sample = []
            caps = []
            for _ in range(yb_triples):
                ls = [rng.randint(1, 3) for _ in range(3)]
                caps.append(ls)
                sample.append(tuple(rng.choice(pools[l]) for l in ls))
            for ls, tri in zip(caps, sample):
                if not yang_baxter_check(alg, ls[0], ls[1], ls[2], [tri]):
                    return False, f"{alg} triple {tri} at {ls}"
        return True, f"{yb_triples} random triples per algebra"

    out.append(_timed("yang-baxter", check_yb))
    return out


# -- the auxiliary-crystal machinery ------------------------------------------

def suite_natural() -> list[CheckResult]:
    out = []
    for desc in ("A2odd:3", "B1:3", "D1:4", "C1:3"):
        alg = Algebra.parse(desc)
        for l, k in ((3, 2), (4, 2), (4, 3)):
            def check(alg=alg, l=l, k=k):
                rep = check_commutations(alg, l, k)
                return rep.ok, f"{rep.pairs} highest-weight pairs"

            out.append(_timed(f"natural:{desc}:l={l},k={k}", check))

        def check_labels(alg=alg):
            up = alg.rank_raised()
            carriers = [("1", "2")] + ([("1", "2b")] if alg.type_class == "II" else [])
            n_checked = 0
            for k in range(1, 7):
                for d in range(k + 1):
                    for c in range(k + 1 - d):
                        for b in range(k + 1 - d - c):
                            s = d + c + b
                            if alg.type_class == "I" and s != k:
                                continue
                            if alg.type_class == "II" and (k - s) % 2:
                                continue
                            coords = [0] * alg.coord_len
                            coords[0], coords[1] = d, c
                            coords[-1] += b
                            coords = tuple(coords)
                            for v0 in carriers:
                                g = k + 4
                                st = state_of_solitons(up, [SolitonLabel(k, g, coords)])
                                res = t_natural(st, v0)
                                from crystalca.solitons import detect_solitons

                                det = detect_solitons(res)
                                want = t_natural_on_label(
                                    alg, v0, AffineElement(g, k, coords)
                                )
                                if (
                                    det is None
                                    or len(det) != 1
                                    or det[0].coords != want.coords
                                    or det[0].gamma != want.d
                                ):
                                    return False, f"k={k} {coords} carrier {v0}"
                                n_checked += 1
            return True, f"{n_checked} one-soliton cases"

        out.append(_timed(f"natural-labels:{desc}", check_labels))
    return out


# -- doubled families ----------------------------------------------------------

def suite_type_iii(seed: int, runs: int = 200) -> list[CheckResult]:
    out = []
    for desc in ("A2even:2", "A2even:3", "D2:2", "D2:3"):
        alg = Algebra.parse(desc)

        def check_reduction(alg=alg):
            rng = random.Random((seed, "iii", alg.descriptor()).__repr__())
            calg = c_companion(alg)
            pools = {l: enumerate_Bl(alg, l) for l in (1, 2, 3)}
            for _ in range(runs):
                l, k = rng.randint(1, 3), rng.randint(1, 3)
                b, c = rng.choice(pools[l]), rng.choice(pools[k])
                c2, b2, h = r_general(alg, l, b, k, c)
                cc2, cb2, ch = r_general(calg, 2 * l, omega(alg, b), 2 * k, omega(alg, c))
                if (omega_inverse(alg, cc2), omega_inverse(alg, cb2), ch) != (c2, b2, h):
                    return False, f"doubling mismatch at {b} (x) {c}"
                rb, rc, h2 = r_general(alg, k, c2, l, b2)
                if (rb, rc, h2) != (b, c, h):
                    return False, f"involution broken at {b} (x) {c}"
                wl = word_weight(alg, [(l, b), (k, c)])
                if word_weight(alg, [(k, c2), (l, b2)]) != wl:
                    return False, f"weight broken at {b} (x) {c}"
                i = rng.randint(1, alg.n_classical)
                op = rng.choice(("e", "f"))
                moved = word_apply(alg, [(l, b), (k, c)], i, op)
                image = word_apply(alg, [(k, c2), (l, b2)], i, op)
                if (moved is None) != (image is None):
                    return False, f"{op}_{i} kills one side only at {b} (x) {c}"
                if moved is not None:
                    mc2, mb2, mh = r_general(alg, l, moved[0][1], k, moved[1][1])
                    if (mc2, mb2, mh) != (image[0][1], image[1][1], h):
                        return False, f"{op}_{i} does not commute at {b} (x) {c}"
            return True, f"{runs} random pairs"

        out.append(_timed(f"doubling:{desc}", check_reduction))

        def check_box_diagram(alg=alg):
            calg = c_companion(alg)
            for L in range(1, 4):
                for b in enumerate_Bl(alg, L):
                    for a in enumerate_B1(alg):
                        ca = letter_to_coords(alg, a)
                        c2, b2, _ = r_general(alg, L, b, 1, ca)
                        from crystalca.crystals import coords_to_letter

                        e1, e2 = eta(alg, coords_to_letter(alg, c2))
                        want = (
                            letter_to_coords(calg, e1),
                            letter_to_coords(calg, e2),
                            omega(alg, b2),
                        )
                        d1, d2 = eta(alg, a)
                        x1, y1, _ = r_general(
                            calg, 2 * L, omega(alg, b), 1, letter_to_coords(calg, d1)
                        )
                        x2, y2, _ = r_general(calg, 2 * L, y1, 1, letter_to_coords(calg, d2))
                        if (x1, x2, y2) != want:
                            return False, f"box diagram at {b} (x) {a}"
            return True, "L <= 3 exhaustive"

        out.append(_timed(f"doubling-boxes:{desc}", check_box_diagram))

        def check_word_doubling(alg=alg):
            low = alg.rank_lowered()
            calg = c_companion(alg)
            for l in range(1, 4):
                for b in enumerate_Bl(low, l):
                    word = iota(alg, l, b)
                    doubled = []
                    for a in word:
                        doubled += list(eta(alg, a))
                    tilde = iota(calg, 2 * l, omega(low, b))
                    s = sum(b)
                    if (l - s) % 2 == 0:
                        want = doubled + ["1"]
                        got = tilde + ["1"]
                    else:
                        want = doubled + ["1"]
                        got = ["1"] + tilde
                    if want != got:
                        return False, f"word doubling at l={l}, {b}"
            return True, "l <= 3 exhaustive"

        out.append(_timed(f"doubling-words:{desc}", check_word_doubling))
    return out


# -- mixed-capacity lattices ----------------------------------------------------

def suite_inhomogeneous(seed: int, runs: int = 100) -> list[CheckResult]:
    out = []

    def check_golden():
        bad = golden.replay(
            golden.INHOMO["alg"], golden.INHOMO["rows"], golden.INHOMO["r"]
        )
        return bad is None, "" if bad is None else f"row {bad} differs"

    out.append(_timed("inhomogeneous:golden", check_golden))

    def check_random():
        alg = Algebra.parse("C1:3")
        low = alg.rank_lowered()
        rng = random.Random((seed, "inhomo").__repr__())
        pools = {l: enumerate_Bl(low, l) for l in range(1, 5)}
        for _ in range(runs):
            l = rng.randint(2, 4)
            k = rng.randint(1, l - 1)
            caps = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
            labs = auto_place(alg, [(l, rng.choice(pools[l])), (k, rng.choice(pools[k]))])
            res = inhomogeneous_experiment(alg, labs, caps, r=l + 1)
            if not res.match:
                return False, f"l={l},k={k},caps={caps}"
        return True, f"{runs} runs"

    out.append(_timed("inhomogeneous:random", check_random))
    return out


# ---------------------------------------------------------------------------

SUITES = {
    "golden": lambda seed: suite_golden(),
    "scattering": lambda seed: suite_scattering(seed),
    "three-soliton": lambda seed: suite_three_soliton(seed),
    "conservation": lambda seed: suite_conservation(seed),
    "rmatrix": lambda seed: suite_rmatrix(seed),
    "natural": lambda seed: suite_natural(),
    "type-iii": lambda seed: suite_type_iii(seed),
    "inhomogeneous": lambda seed: suite_inhomogeneous(seed),
}


def run_suites(names, seed: int) -> list[CheckResult]:
    out = []
    for name in names:
        out.extend(SUITES[name](seed))
    return out
