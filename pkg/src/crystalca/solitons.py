"""Solitons: construction, detection with phases, and scattering experiments.

A soliton of length l is a block of letters riding the vacuum sea, built by
embedding an element of B_l of the rank-lowered algebra into l consecutive
single-box cells.  Its phase is the slot position of its first letter,
counted from the right anchor.  Scattering of solitons with distinct
lengths is predicted by the combinatorial R of the rank-lowered algebra,
the phase shifts by the energy function; experiments here verify that
prediction against the actual carrier dynamics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from crystalca.algebra import Algebra
from crystalca.automaton import AutomatonState, evolve_Tl
from crystalca.crystals import Coords, is_valid_element, letter_to_coords, u_element
from crystalca.rmatrix import AffineElement, r_affine, r_apply_at


class ScatteringIncomplete(Exception):
    """Raised when collisions have not resolved within the step budget."""


@dataclass(frozen=True)
class SolitonLabel:
    """(length, phase, element of B_l at lowered rank)."""

    l: int
    gamma: int
    coords: Coords

    def leading_phi(self, alg: Algebra) -> bool:
        return alg.type_class == "III" and (self.l - sum(self.coords)) % 2 == 1

    def affine_exponent(self, alg: Algebra) -> int:
        """z-exponent of the associated affine element; doubled families
        count two exponent units per slot, one less with a leading phi."""
        if alg.type_class != "III":
            return self.gamma
        return 2 * self.gamma - (1 if self.leading_phi(alg) else 0)

    def affine(self, alg: Algebra) -> AffineElement:
        return AffineElement(self.affine_exponent(alg), self.l, self.coords)

    def __str__(self) -> str:
        return f"z^{self.gamma} B[{self.l}](" + ",".join(map(str, self.coords)) + ")"


# ---------------------------------------------------------------------------
# the embedding of labels into words of single boxes
# ---------------------------------------------------------------------------

def iota(alg: Algebra, l: int, coords: Coords) -> list[str]:
    """Word of l letters of ``alg`` realizing a label from B_l one rank down."""
    low = alg.rank_lowered()
    if not is_valid_element(low, l, coords):
        raise ValueError(f"{coords} is not in B_{l} of {low}")
    word: list[str] = []
    if alg.family == "A1":
        for i in range(low.coord_len, 0, -1):
            word += [str(i + 1)] * coords[i - 1]
        return word
    s = sum(coords)
    sp = 0
    if alg.family == "C1" or alg.type_class == "III":
        sp = (l - s) // 2
        if alg.type_class == "III" and (l - s) % 2:
            word.append("phi")
    word += ["1b"] * sp
    for i in range(1, low.n + 1):
        word += [f"{i + 1}b"] * coords[low.coord_len - i]
    if low.zero_index is not None:
        word += ["0"] * coords[low.zero_index]
    for i in range(low.n, 0, -1):
        word += [str(i + 1)] * coords[i - 1]
    word += ["1"] * sp
    if len(word) != l:
        raise ValueError(f"label {coords} does not fill {l} boxes")
    return word


def _iota_alphabet(alg: Algebra) -> set[str]:
    low = alg.rank_lowered()
    if alg.family == "A1":
        return {str(i + 1) for i in range(1, low.coord_len + 1)}
    out = {str(i + 1) for i in range(1, low.n + 1)}
    out |= {f"{i + 1}b" for i in range(1, low.n + 1)}
    if alg.family == "C1" or alg.type_class == "III":
        out |= {"1", "1b"}
    if low.zero_index is not None:
        out.add("0")
    return out


def _letter_rank(alg: Algebra, a: str) -> int:
    """Position in the decreasing alphabet order (barred high, unbarred low)."""
    order = list(reversed(alg.letters()))
    if "phi" in order:
        order.remove("phi")
    return order.index(a)


def _invert_block(alg: Algebra, letters: list[str]) -> tuple[Coords, int, bool] | None:
    """Parse one maximal non-vacuum run into (label coords, trailing 1s, phi)."""
    low = alg.rank_lowered()
    has_phi = False
    body = list(letters)
    if body and body[0] == "phi":
        if alg.type_class != "III":
            return None
        has_phi = True
        body = body[1:]
    if any(a == "phi" for a in body):
        return None
    alphabet = _iota_alphabet(alg)
    if any(a not in alphabet for a in body):
        return None
    ranks = [_letter_rank(alg, a) for a in body]
    if any(ranks[i] > ranks[i + 1] for i in range(len(ranks) - 1)):
        return None
    sp = 0
    while sp < len(body) and body[sp] == "1b":
        sp += 1
    if sp and not (alg.family == "C1" or alg.type_class == "III"):
        return None
    coords = [0] * low.coord_len
    for a in body[sp:]:
        if a == "0":
            coords[low.zero_index] += 1
        elif a.endswith("b"):
            coords[low.coord_len - (int(a[:-1]) - 1)] += 1
        else:
            coords[int(a) - 2] += 1
    l = len(letters) + sp
    coords = tuple(coords)
    if not is_valid_element(low, l, coords):
        return None
    return coords, sp, has_phi


def detect_solitons(state: AutomatonState) -> list[SolitonLabel] | None:
    """Labels of a fully separated multi-soliton state, or None.

    None signals a configuration that is not a clean soliton state:
    mid-collision blocks, content inside capacity > 1 sites, or solitons
    closer together than the length of the left one.
    """
    alg = state.alg
    st = state.trimmed()
    positions = st.slot_positions()
    entries: list[tuple[int, str]] = []  # (pos, letter) of capacity-1 cells
    barriers: list[int] = []  # leftmost slot positions of capacity>1 sites
    for (m, c), pos in zip(st.cells, positions):
        if m == 1:
            from crystalca.crystals import coords_to_letter

            entries.append((pos, coords_to_letter(alg, c)))
        else:
            if c != u_element(alg, m):
                return None
            barriers.append(pos)

    # maximal runs of non-vacuum letters over contiguous capacity-1 cells
    blocks: list[tuple[int, list[str]]] = []
    cur: list[tuple[int, str]] = []
    prev_pos = None
    for pos, a in entries:
        contiguous = prev_pos is not None and pos == prev_pos - 1
        if a != "1":
            if cur and not contiguous:
                blocks.append((cur[0][0], [x[1] for x in cur]))
                cur = []
            cur.append((pos, a))
        else:
            if cur:
                blocks.append((cur[0][0], [x[1] for x in cur]))
                cur = []
        prev_pos = pos
    if cur:
        blocks.append((cur[0][0], [x[1] for x in cur]))

    stored = dict(entries)
    out: list[SolitonLabel] = []
    min_stored = positions[-1] - st.cells[-1][0] + 1 if st.cells else 0
    for start, letters in blocks:
        parsed = _invert_block(alg, letters)
        if parsed is None:
            return None
        coords, sp, _ = parsed
        # the sp padding boxes after the block belong to the soliton
        for j in range(sp):
            pos = start - len(letters) - j
            if pos >= min_stored and stored.get(pos) != "1":
                return None
        l = len(letters) + sp
        out.append(SolitonLabel(l, start, coords))

    # separation: at least l_i vacuum slots after soliton i's word
    for left, right in zip(out, out[1:]):
        gap = (left.gamma - left.l + 1) - right.gamma - 1
        if gap < left.l:
            return None
    return out


# ---------------------------------------------------------------------------
# scattering experiments
# ---------------------------------------------------------------------------

def state_of_solitons(alg: Algebra, labels: list[SolitonLabel]) -> AutomatonState:
    """Place soliton words at their phases in a vacuum sea."""
    if not labels:
        return AutomatonState(alg, (), 0)
    for a, b in zip(labels, labels[1:]):
        gap = (a.gamma - a.l + 1) - b.gamma - 1
        if gap < a.l:
            raise ValueError("solitons closer than the separation rule allows")
    top = labels[0].gamma
    bottom = labels[-1].gamma - labels[-1].l + 1
    letters = ["1"] * (top - bottom + 1)
    for lab in labels:
        word = iota(alg, lab.l, lab.coords)
        start = top - lab.gamma
        letters[start:start + lab.l] = word
    return AutomatonState.from_letters(alg, letters, pos_left=top)


def auto_place(alg: Algebra, pairs: list[tuple[int, Coords]]) -> list[SolitonLabel]:
    """Assign phases with gaps of (left length + 1) vacuum boxes."""
    labels = []
    pos = 0
    rev = list(reversed(pairs))
    for idx, (l, coords) in enumerate(rev):
        pos += l
        labels.append(SolitonLabel(l, pos, coords))
        if idx + 1 < len(rev):
            pos += rev[idx + 1][0] + 1
    return list(reversed(labels))


def predict_outgoing(alg_low: Algebra, incoming: list[AffineElement]):
    """Reverse the incoming word by adjacent R maps; also return the energies."""
    word = list(incoming)
    energies = []
    m = len(word)
    for k in range(m - 1, 0, -1):
        for j in range(k):
            before = word[j]
            word = r_apply_at(alg_low, word, j)
            energies.append(before.d - word[j + 1].d)
    return word, energies


@dataclass
class ScatteringOutcome:
    incoming: list[SolitonLabel]
    outgoing: list[SolitonLabel]
    predicted: list[AffineElement]
    observed: list[AffineElement]
    pair_energies: list[int] = field(default_factory=list)
    t_final: int = 0
    match: bool = False


def scattering_experiment(
    alg: Algebra,
    incoming: list[SolitonLabel],
    r: int,
    t_max: int = 60,
) -> ScatteringOutcome:
    """Run T_r until all collisions resolve; compare against the R prediction.

    Incoming solitons must have strictly decreasing lengths left to right and
    r must exceed every non-leading length for the collisions to happen.
    """
    lengths = [lab.l for lab in incoming]
    if any(a <= b for a, b in zip(lengths, lengths[1:])):
        raise ValueError("incoming lengths must be strictly decreasing")
    low = alg.rank_lowered()
    state = state_of_solitons(alg, incoming)
    want = sorted(lengths)
    predicted, energies = predict_outgoing(low, [lab.affine(alg) for lab in incoming])
    for t in range(1, t_max + 1):
        state = evolve_Tl(state, r).state
        found = detect_solitons(state)
        if found is None or [lab.l for lab in found] != want:
            continue
        observed = [
            AffineElement(
                lab.affine_exponent(alg) + alg.varsigma * min(r, lab.l) * t,
                lab.l,
                lab.coords,
            )
            for lab in found
        ]
        return ScatteringOutcome(
            incoming, found, predicted, observed, energies, t, observed == predicted
        )
    raise ScatteringIncomplete(f"collisions unresolved after {t_max} steps of T_{r}")


# ---------------------------------------------------------------------------
# inhomogeneous lattices
# ---------------------------------------------------------------------------

def delta_penalty(capacities: list[int], i: int) -> int:
    """Phase penalty a length-i soliton pays crossing the capacity block."""
    return sum(max(0, m - i) for m in capacities)


def predict_inhomogeneous(
    alg: Algebra,
    first: SolitonLabel,
    second: SolitonLabel,
    capacities: list[int],
) -> list[AffineElement]:
    """Outgoing pair with the capacity-block phase penalties applied."""
    if first.l <= second.l:
        raise ValueError("expected strictly decreasing lengths")
    low = alg.rank_lowered()
    out2, out1 = r_affine(low, first.affine(alg), second.affine(alg))
    vs = alg.varsigma
    dk = delta_penalty(capacities, second.l)
    dl = delta_penalty(capacities, first.l)
    return [
        AffineElement(out2.d - vs * dk, out2.l, out2.coords),
        AffineElement(out1.d - vs * dl, out1.l, out1.coords),
    ]


def inhomogeneous_state(
    alg: Algebra,
    labels: list[SolitonLabel],
    capacities: list[int],
    block_gap: int = 2,
) -> AutomatonState:
    """Solitons in the left detector region, then the capacity block."""
    left = state_of_solitons(alg, labels)
    vac = (1, u_element(alg, 1))
    cells = list(left.cells) + [vac] * block_gap
    for m in capacities:
        cells.append((m, u_element(alg, m)))
    return AutomatonState(alg, tuple(cells), left.pos_left)


def inhomogeneous_experiment(
    alg: Algebra,
    incoming: list[SolitonLabel],
    capacities: list[int],
    r: int,
    t_max: int = 80,
) -> ScatteringOutcome:
    """Two-soliton collision across a block of higher-capacity sites."""
    if len(incoming) != 2:
        raise ValueError("inhomogeneous experiments are two-soliton")
    state = inhomogeneous_state(alg, incoming, capacities)
    # positions of the capacity block, to require full penetration
    block_min = None
    for (m, _), pos in zip(state.cells, state.slot_positions()):
        if m > 1:
            block_min = pos - m + 1 if block_min is None else min(block_min, pos - m + 1)
    predicted = predict_inhomogeneous(alg, incoming[0], incoming[1], capacities)
    want = sorted(lab.l for lab in incoming)
    vs = alg.varsigma
    for t in range(1, t_max + 1):
        state = evolve_Tl(state, r).state
        found = detect_solitons(state)
        if found is None or [lab.l for lab in found] != want:
            continue
        if block_min is not None and any(lab.gamma >= block_min for lab in found):
            continue  # not yet fully through the block
        observed = [
            AffineElement(
                lab.affine_exponent(alg) + vs * min(r, lab.l) * t, lab.l, lab.coords
            )
            for lab in found
        ]
        return ScatteringOutcome(
            incoming, found, predicted, observed, [], t, observed == predicted
        )
    raise ScatteringIncomplete(f"collisions unresolved after {t_max} steps of T_{r}")
