"""The auxiliary two-box crystal and the soliton-transforming operator.

For the single-family classes I and II, a small crystal of column pairs
(alpha beta) acts on automaton states by carrying the pair (1 2) through
the state.  On one-soliton states the action has a closed form on labels;
combined with its commutation with the time evolutions and with the
combinatorial R, it gives an executable induction that pins down the
scattering rule.  Everything here is for verification: steps outside the
verified image lists raise instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from crystalca.algebra import Algebra
from crystalca.automaton import AutomatonState
from crystalca.crystals import Coords, letter_to_coords, letter_weight
from crystalca.rmatrix import AffineElement, r_affine

BNatElement = tuple[str, str] | str  # column pair, or "phi" (class I only)
PHI = "phi"


class NaturalError(Exception):
    pass


# ---------------------------------------------------------------------------
# the crystal as a set, with its affine arrows
# ---------------------------------------------------------------------------

def _j_order(alg: Algebra) -> list[str]:
    letters = [a for a in alg.letters() if a != PHI]
    return letters


def enumerate_bnat(alg: Algebra) -> list[BNatElement]:
    if alg.type_class not in ("I", "II"):
        raise ValueError("the pair crystal exists for class I and II algebras only")
    J = _j_order(alg)
    idx = {a: i for i, a in enumerate(J)}
    out: list[BNatElement] = []
    for a in J:
        for b in J:
            if idx[a] < idx[b] and (a, b) != ("1", "1b"):
                out.append((a, b))
    if alg.classical[0] == "B":
        out.append(("0", "0"))
    if alg.classical[0] == "D":
        n = alg.n
        out.append((f"{n}b", str(n)))
    if alg.type_class == "I":
        out.append(PHI)
    return out


def bnat_weight(alg: Algebra, v: BNatElement) -> Coords:
    if v == PHI:
        return (0,) * alg.n
    wa, wb = letter_weight(alg, v[0]), letter_weight(alg, v[1])
    return tuple(x + y for x, y in zip(wa, wb))


def bnat_f0(alg: Algebra, v: BNatElement) -> BNatElement | None:
    """The affine lowering arrow on the pair crystal."""
    if alg.type_class == "I":
        if v == ("2b", "1b"):
            return PHI
        if v == PHI:
            return ("1", "2")
        if isinstance(v, tuple) and v[1] == "2b" and v[0] not in ("1", "2"):
            return ("1", v[0])
        if isinstance(v, tuple) and v[1] == "1b" and v[0] not in ("2", "2b"):
            return ("2", v[0])
        return None
    if alg.type_class == "II":
        if isinstance(v, tuple) and v[1] == "1b" and v[0] != "1":
            return ("1", v[0])
        return None
    raise ValueError("affine arrows are defined for class I and II only")


def bnat_e0(alg: Algebra, v: BNatElement) -> BNatElement | None:
    for w in enumerate_bnat(alg):
        if bnat_f0(alg, w) == v:
            return w
    return None


# ---------------------------------------------------------------------------
# the pair (x) box exchange step
# ---------------------------------------------------------------------------

# (v, letter) -> (letter', v'), letters written generically for any rank
_COMMON = [
    (("1", "2"), "3", "1", ("2", "3")),
    (("1", "3"), "2", "3", ("1", "2")),
    (("2", "3"), "1", "2", ("1", "3")),
    (("2", "2b"), "1", "2", ("1", "2b")),
    (("2", "1b"), "1", "2", ("2", "2b")),
    (("3", "1b"), "1", "3", ("2", "2b")),
    (("3", "1b"), "2", "3", ("2", "1b")),
    (("2b", "1b"), "1", "2b", ("2", "2b")),
    (("2b", "1b"), "2", "2b", ("2", "1b")),
    (("2b", "1b"), "3", "2b", ("3", "1b")),
]
_CLASS_I = [
    (("1", "2"), "2b", "1", PHI),
    (PHI, "3", "1", ("3", "1b")),
    (PHI, "2b", "1", ("2b", "1b")),
    # the two phi rows below are not weight-forced (each weight space is
    # two-dimensional); they are pinned by the closed-form label action on
    # one-soliton states, which the agreement sweep verifies exhaustively
    (PHI, "1", "1", ("2", "2b")),
    (PHI, "2", "1", ("2", "1b")),
]
_CLASS_II = [
    (("1", "2"), "2b", "1", ("2", "2b")),
    (("1", "2"), "1b", "1", ("2", "1b")),
    (("1", "2b"), "2", "2b", ("1", "2")),
    (("1", "2b"), "3", "2b", ("1", "3")),
    (("1", "2b"), "1b", "1", ("2b", "1b")),
    (("2", "2b"), "2b", "1b", ("1", "2b")),
    (("2", "1b"), "3", "1b", ("2", "3")),
    (("2", "1b"), "2b", "1b", ("2", "2b")),
    # not weight-forced; pinned by the closed-form label action on
    # one-soliton states, exhaustively verified by the agreement sweep
    (("2", "2b"), "3", "1b", ("1", "3")),
    (("2", "2b"), "2", "1b", ("1", "2")),
]

_step_cache: dict = {}


def _step_table(alg: Algebra):
    key = (alg.family, alg.n)
    tab = _step_cache.get(key)
    if tab is not None:
        return tab
    letters = set(alg.letters())
    rows = _COMMON + (_CLASS_I if alg.type_class == "I" else _CLASS_II)
    tab = {}
    for v, a, a2, v2 in rows:
        parts = [a, a2]
        parts += list(v) if isinstance(v, tuple) else []
        parts += list(v2) if isinstance(v2, tuple) else []
        if all(p in letters or p == PHI for p in parts):
            tab[(v, a)] = (a2, v2)
    # weight-forced exchanges: (i jb) passes its own letters through, and any
    # pair (1 x) passes the vacuum box, the image being unique in its weight
    n = alg.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                v = (str(i), f"{j}b")
                tab.setdefault((v, str(i)), (str(i), v))
                tab.setdefault((v, f"{j}b"), (f"{j}b", v))
    _step_cache[key] = tab
    return tab


def _weight_forced(alg: Algebra, v: BNatElement, a: str):
    target = tuple(
        x + y for x, y in zip(bnat_weight(alg, v), letter_weight(alg, a))
    )
    hits = []
    for a2 in alg.letters():
        wa = letter_weight(alg, a2)
        for v2 in enumerate_bnat(alg):
            if tuple(x + y for x, y in zip(wa, bnat_weight(alg, v2))) == target:
                hits.append((a2, v2))
    if len(hits) == 1:
        return hits[0]
    return None


def bnat_b1_step(alg: Algebra, v: BNatElement, a: str) -> tuple[str, BNatElement]:
    """One exchange (v (x) box) -> (box' (x) v'), from the verified images.

    Pairs outside the listed tables are resolved only when the image is
    forced by weight; anything else raises rather than guessing.
    """
    tab = _step_table(alg)
    hit = tab.get((v, a))
    if hit is not None:
        return hit
    forced = _weight_forced(alg, v, a)
    if forced is not None:
        tab[(v, a)] = forced
        return forced
    raise NaturalError(f"exchange of {v} with box {a} is outside the verified table")


def t_natural(state: AutomatonState, v0: BNatElement = ("1", "2")) -> AutomatonState:
    """Carry the pair through the state left to right."""
    from crystalca.crystals import coords_to_letter

    alg = state.alg
    v = v0
    out = []
    for m, c in state.cells:
        if m != 1:
            raise NaturalError("the pair operator runs on single-box states")
        a2, v = bnat_b1_step(alg, v, coords_to_letter(alg, c))
        out.append((1, letter_to_coords(alg, a2)))
    guard = 0
    while True:
        a2, v2 = bnat_b1_step(alg, v, "1")
        if a2 == "1" and v2 == v:
            break
        out.append((1, letter_to_coords(alg, a2)))
        v = v2
        guard += 1
        if guard > len(state.cells) + 2 * len(enumerate_bnat(alg)) + 4:
            raise NaturalError("carrier pair failed to stabilize over the vacuum")
    return AutomatonState(alg, tuple(out), state.pos_left).trimmed()


# ---------------------------------------------------------------------------
# the closed form on soliton labels
# ---------------------------------------------------------------------------

def _dcb(coords: Coords) -> tuple[int, int, int]:
    if any(coords[2:-1]):
        raise NaturalError(f"{coords} is not of the (d, c, b) shape")
    return coords[0], coords[1], coords[-1]


def _from_dcb(alg: Algebra, d: int, c: int, b: int) -> Coords:
    out = [0] * alg.coord_len
    out[0], out[1], out[-1] = d, c, b
    return tuple(out)


def t_natural_on_label(
    alg: Algebra, v: BNatElement, x: AffineElement
) -> AffineElement:
    """Closed form of the carrier action on a one-soliton label z^m(d,c,b)."""
    d, c, b = _dcb(x.coords)
    k, m = x.l, x.d
    cls = alg.type_class
    if cls == "I":
        if v != ("1", "2"):
            raise NaturalError("class I uses the carrier (1 2) only")
        if b > 0:
            return AffineElement(m - 2, k, _from_dcb(alg, d + 1, c, b - 1))
        if c > 0:
            return AffineElement(m - 1, k, _from_dcb(alg, d + 1, c - 1, 0))
        return AffineElement(m, k, _from_dcb(alg, d, 0, 0))
    if cls != "II":
        raise NaturalError("label action exists for class I and II only")
    a = (k - b - c - d) // 2
    if v == ("1", "2"):
        if a == 0 and b == 0 and c == 0:
            return AffineElement(m, k, _from_dcb(alg, k, 0, 0))
        if b > 0 and d > 0:
            return AffineElement(m - 1, k, _from_dcb(alg, d - 1, c, b - 1))
        if c > 0:
            return AffineElement(
                m - 1, k, _from_dcb(alg, d + max(0, 1 - b), c - 1, max(0, b - 1))
            )
        return AffineElement(
            m - 1, k, _from_dcb(alg, d + max(0, 2 - b), 0, max(0, b - 2))
        )
    if v == ("1", "2b"):
        if a > 0:
            return AffineElement(m - 1, k, _from_dcb(alg, d + 1, c, b + 1))
        if d > 0:
            return AffineElement(m, k, _from_dcb(alg, d - 1, c, b + 1))
        if c > 0:
            return AffineElement(m, k, _from_dcb(alg, 0, c - 1, b + 1))
        return AffineElement(m, k, _from_dcb(alg, 0, 0, b))
    raise NaturalError(f"no label action for carrier {v}")


def _is_u_form(coords: Coords) -> bool:
    return not any(coords[1:])


def t_natural_on_pair(
    alg: Algebra, pair: tuple[AffineElement, AffineElement]
) -> tuple[AffineElement, AffineElement]:
    """Carrier action on a separated two-soliton label pair (hw form)."""
    first, second = pair
    out1 = t_natural_on_label(alg, ("1", "2"), first)
    v2: BNatElement = ("1", "2")
    if alg.type_class == "II":
        if not _is_u_form(first.coords):
            raise NaturalError("pair action needs a u-shaped first factor")
        if first.coords[0] <= first.l - 2:
            v2 = ("1", "2b")
    out2 = t_natural_on_label(alg, v2, second)
    return (out1, out2)


def degree(alg: Algebra, pair: tuple[AffineElement, AffineElement]) -> int:
    """Number of carrier applications to reach a fixed label pair."""
    cap = 4 * (pair[0].l + pair[1].l)
    cur = pair
    for steps in range(cap + 1):
        nxt = t_natural_on_pair(alg, cur)
        if nxt == cur:
            return steps
        cur = nxt
    raise NaturalError("degree iteration exceeded its bound")


# ---------------------------------------------------------------------------
# executable checks
# ---------------------------------------------------------------------------

def hw_label_pairs(alg: Algebra, l: int, k: int):
    """Classical highest-weight pairs of B_l (x) B_k at this algebra."""
    from crystalca.rmatrix import build_hw_table

    return sorted(build_hw_table(alg, l, k).forward)


@dataclass
class CommutationReport:
    algebra: str
    l: int
    k: int
    pairs: int
    r_commutes: bool
    t_commutes: bool
    weight_separated: bool
    degree_monotone: bool

    @property
    def ok(self) -> bool:
        return (
            self.r_commutes
            and self.t_commutes
            and self.weight_separated
            and self.degree_monotone
        )


def check_commutations(alg: Algebra, l: int, k: int, r_values=None) -> CommutationReport:
    """Exhaustive checks over the highest-weight pairs of B_l (x) B_k.

    ``alg`` is the label algebra; realized states live one rank up.
    """
    from crystalca.crystals import elem_weight
    from crystalca.solitons import SolitonLabel, state_of_solitons

    if alg.type_class not in ("I", "II"):
        raise ValueError("checks apply to class I and II algebras")
    if l <= k:
        raise ValueError("checks need l > k")
    up = alg.rank_raised()
    pairs = hw_label_pairs(alg, l, k)
    r_values = r_values or (1, l + 1)

    r_comm = True
    for b1, b2 in pairs:
        p = (AffineElement(0, l, b1), AffineElement(0, k, b2))
        lhs = t_natural_on_pair(alg, tuple(r_affine(alg, *p)))
        rhs = r_affine(alg, *t_natural_on_pair(alg, p))
        if lhs != tuple(rhs):
            r_comm = False
            break

    t_comm = True
    g2 = k + 2
    g1 = g2 + 2 * l + 2
    for b1, b2 in pairs:
        labels = [SolitonLabel(l, g1, b1), SolitonLabel(k, g2, b2)]
        st = state_of_solitons(up, labels)
        from crystalca.automaton import evolve_Tl

        for r in r_values:
            if evolve_Tl(t_natural(st), r).state != t_natural(evolve_Tl(st, r).state):
                t_comm = False
                break
        if not t_comm:
            break

    wt_sep = True
    seen: dict = {}
    for b1, b2 in pairs:
        wt = tuple(
            x + y for x, y in zip(elem_weight(alg, b1), elem_weight(alg, b2))
        )
        for m1 in range(3):
            for m2 in range(3):
                p = (AffineElement(m1, l, b1), AffineElement(m2, k, b2))
                img = t_natural_on_pair(alg, p)
                key = (wt, img)
                if key in seen and seen[key] != p:
                    wt_sep = False
                seen[key] = p

    deg_ok = True
    for b1, b2 in pairs:
        p = (AffineElement(0, l, b1), AffineElement(0, k, b2))
        dg = degree(alg, p)
        if dg == 0:
            if not (_is_u_form(b1) and b1[0] == l and _is_u_form(b2) and b2[0] == k):
                deg_ok = False
        else:
            if degree(alg, t_natural_on_pair(alg, p)) != dg - 1:
                deg_ok = False

    return CommutationReport(
        alg.descriptor(), l, k, len(pairs), r_comm, t_comm, wt_sep, deg_ok
    )
