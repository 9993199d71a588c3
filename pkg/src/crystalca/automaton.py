"""States and carrier time evolutions of the cellular automaton.

A state is a finite window of cells inside a two-sided vacuum sea.  Every
cell has a site capacity m (its crystal is B_m) and content u_m outside the
window; the homogeneous automaton has m = 1 everywhere with vacuum letter 1.

Positions are counted from a fixed anchor at the right end and decrease
rightward; a capacity-m site occupies m consecutive slots.  The evolution
T_l threads a carrier u_l through the state left to right via the
combinatorial R, extending the window with vacuum until the carrier comes
back to u_l.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from crystalca.algebra import Algebra
from crystalca.crystals import (
    Coords,
    Factor,
    coords_to_letter,
    format_element,
    letter_to_coords,
    parse_element,
    u_element,
)
from crystalca.rmatrix import r_general


class EvolutionError(Exception):
    pass


@dataclass(frozen=True)
class AutomatonState:
    alg: Algebra
    cells: tuple[Factor, ...]
    pos_left: int  # slot position of the leftmost stored cell, from the right anchor

    @staticmethod
    def from_cells(alg: Algebra, cells, pos_left: int | None = None) -> "AutomatonState":
        cells = tuple(cells)
        if pos_left is None:
            pos_left = sum(m for m, _ in cells)
        return AutomatonState(alg, cells, pos_left)

    @staticmethod
    def from_letters(alg: Algebra, letters, pos_left: int | None = None) -> "AutomatonState":
        return AutomatonState.from_cells(
            alg, [(1, letter_to_coords(alg, a)) for a in letters], pos_left
        )

    def is_vacuum_cell(self, j: int) -> bool:
        m, c = self.cells[j]
        return c == u_element(self.alg, m)

    def letters(self) -> list[str]:
        return [coords_to_letter(self.alg, c) for m, c in self.cells]

    def slot_positions(self) -> list[int]:
        """Leftmost slot position of every cell."""
        out, p = [], self.pos_left
        for m, _ in self.cells:
            out.append(p)
            p -= m
        return out

    def trimmed(self) -> "AutomatonState":
        cells = list(self.cells)
        pos = self.pos_left
        while cells and cells[0][1] == u_element(self.alg, cells[0][0]) and cells[0][0] == 1:
            pos -= cells.pop(0)[0]
        while cells and cells[-1][1] == u_element(self.alg, cells[-1][0]) and cells[-1][0] == 1:
            cells.pop()
        return AutomatonState(self.alg, tuple(cells), pos)

    def padded(self, left: int, right: int) -> "AutomatonState":
        vac = (1, u_element(self.alg, 1))
        return AutomatonState(
            self.alg,
            (vac,) * left + self.cells + (vac,) * right,
            self.pos_left + left,
        )

    def __eq__(self, other):
        if not isinstance(other, AutomatonState):
            return NotImplemented
        a, b = self.trimmed(), other.trimmed()
        return (a.alg, a.cells, a.pos_left) == (b.alg, b.cells, b.pos_left)

    def __hash__(self):
        t = self.trimmed()
        return hash((t.alg, t.cells, t.pos_left))


@dataclass
class EvolutionReport:
    state: AutomatonState
    site_energies: list[int] = field(default_factory=list)
    ebar: int = 0
    e: int = 0
    exit_element: Coords = ()


def evolve_Tl(state: AutomatonState, l: int) -> EvolutionReport:
    """One carrier pass of T_l, with per-site energies."""
    alg = state.alg
    ul = u_element(alg, l)
    carrier = ul
    out: list[Factor] = []
    energies: list[int] = []
    e_reg = 0
    for m, c in state.cells:
        c2, carrier, h = r_general(alg, l, carrier, m, c)
        out.append((m, c2))
        energies.append(h)
        e_reg -= h - 2 * alg.varsigma * min(l, m)
    u1 = u_element(alg, 1)
    limit = len(state.cells) + l + 1
    grown = 0
    while carrier != ul:
        if grown > limit:
            raise EvolutionError("carrier failed to return to vacuum")
        c2, carrier, h = r_general(alg, l, carrier, 1, u1)
        out.append((1, c2))
        energies.append(h)
        e_reg -= h - 2 * alg.varsigma
        grown += 1
    new = AutomatonState(alg, tuple(out), state.pos_left).trimmed()
    return EvolutionReport(new, energies, -sum(energies), e_reg, carrier)


def evolve_T(state: AutomatonState) -> EvolutionReport:
    """The stable evolution: T_l for l large enough that it no longer changes."""
    prev = evolve_Tl(state, 1)
    l = 2
    while True:
        cur = evolve_Tl(state, l)
        if cur.state == prev.state:
            return cur
        prev = cur
        l += 1


def evolve_inverse_Tl(state: AutomatonState, l: int) -> AutomatonState:
    """Right-to-left carrier pass undoing T_l."""
    alg = state.alg
    ul = u_element(alg, l)
    u1 = u_element(alg, 1)
    carrier = ul
    out: list[Factor] = []
    for m, c in reversed(state.cells):
        carrier, c2, _ = r_general(alg, m, c, l, carrier)
        out.append((m, c2))
    pos = state.pos_left
    limit = len(state.cells) + l + 1
    grown = 0
    while carrier != ul:
        if grown > limit:
            raise EvolutionError("inverse carrier failed to return to vacuum")
        carrier, c2, _ = r_general(alg, 1, u1, l, carrier)
        out.append((1, c2))
        pos += 1
        grown += 1
    return AutomatonState(alg, tuple(reversed(out)), pos).trimmed()


def conserved_E(state: AutomatonState, l: int) -> int:
    if l == 0:
        return 0
    return evolve_Tl(state, l).e


def soliton_spectrum(state: AutomatonState) -> dict[int, int]:
    """Soliton counts per length, from second differences of the energies."""
    alg = state.alg
    width = sum(m for m, _ in state.trimmed().cells)
    top = width + 1
    E = [conserved_E(state, l) for l in range(top + 2)]
    spectrum: dict[int, int] = {}
    for l in range(1, top + 1):
        num = -E[l - 1] + 2 * E[l] - E[l + 1]
        if num % alg.varsigma:
            raise EvolutionError(f"non-integer soliton count at length {l}")
        n = num // alg.varsigma
        if n < 0:
            raise EvolutionError(f"negative soliton count at length {l}")
        if n:
            spectrum[l] = n
    return spectrum


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def parse_state(line: str) -> AutomatonState:
    """``alg=C1:3 | 1 1 2b B[3](3,0,0,0,0,0) 1 ...``"""
    head, _, body = line.partition("|")
    key, _, desc = head.strip().partition("=")
    if key.strip() != "alg":
        raise ValueError("state line must start with alg=<descriptor>")
    alg = Algebra.parse(desc.strip())
    cells: list[Factor] = []
    for tok in body.split():
        if tok.startswith("B["):
            cells.append(parse_element(tok))
        else:
            cells.append((1, letter_to_coords(alg, tok)))
    return AutomatonState.from_cells(alg, cells)


def render_cells(state: AutomatonState) -> str:
    toks = []
    for m, c in state.cells:
        toks.append(coords_to_letter(state.alg, c) if m == 1 else format_element(m, c))
    return " ".join(toks)


def render_state(state: AutomatonState) -> str:
    return f"alg={state.alg.descriptor()} | {render_cells(state)}"
