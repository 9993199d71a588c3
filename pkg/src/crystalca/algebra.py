"""Algebra descriptors: family, rank, and everything derived from them.

A letter of the single-box crystal is encoded as a plain string:
``"1"``..``"n"`` (unbarred), ``"0"``, ``"1b"``..``"nb"`` (barred), ``"phi"``.
"""

from __future__ import annotations

from dataclasses import dataclass

# family -> (minimum rank, energy unit, type class, classical series)
_FAMILY = {
    "A1": (2, 1, "A", "A"),
    "A2odd": (3, 1, "I", "C"),
    "A2even": (2, 2, "III", "C"),
    "B1": (3, 1, "I", "B"),
    "C1": (2, 1, "II", "C"),
    "D1": (4, 1, "I", "D"),
    "D2": (2, 2, "III", "B"),
}

FAMILIES = tuple(_FAMILY)


def letter(i: int, barred: bool = False) -> str:
    return f"{i}b" if barred else str(i)


@dataclass(frozen=True)
class Algebra:
    """One of the supported affine families at a given rank n."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in _FAMILY:
            raise ValueError(f"unknown family {self.family!r}")
        nmin = _FAMILY[self.family][0]
        if self.n < nmin:
            raise ValueError(f"{self.family} needs rank n >= {nmin}, got {self.n}")

    # -- basic derived data ------------------------------------------------

    @property
    def varsigma(self) -> int:
        return _FAMILY[self.family][1]

    @property
    def type_class(self) -> str:
        return _FAMILY[self.family][2]

    @property
    def classical(self) -> tuple[str, int]:
        """Classical series and rank of the subalgebra acting on letters."""
        return (_FAMILY[self.family][3], self.n)

    @property
    def n_classical(self) -> int:
        """Number of classical crystal operator colors (1..n)."""
        return self.n

    @property
    def has_zero_letter(self) -> bool:
        return self.family in ("B1", "D2")

    @property
    def has_phi(self) -> bool:
        return self.family in ("A2even", "D2")

    @property
    def coord_len(self) -> int:
        """Length of a one-row coordinate vector."""
        if self.family == "A1":
            return self.n + 1
        return 2 * self.n + (1 if self.has_zero_letter else 0)

    @property
    def zero_index(self) -> int | None:
        """Index of the x_0 slot in the coordinate vector, if present."""
        return self.n if self.has_zero_letter else None

    @property
    def sum_rule(self) -> str:
        """'exact' (sum = l), 'atmost' (sum <= l) or 'parity' (sum <= l, = l mod 2)."""
        if self.family in ("A1", "A2odd", "B1", "D1"):
            return "exact"
        if self.family == "C1":
            return "parity"
        return "atmost"

    # -- alphabet ----------------------------------------------------------

    def letters(self) -> list[str]:
        """The single-box alphabet in the canonical order, phi last."""
        if self.family == "A1":
            return [str(i) for i in range(1, self.n + 2)]
        out = [str(i) for i in range(1, self.n + 1)]
        if self.has_zero_letter:
            out.append("0")
        out += [f"{i}b" for i in range(self.n, 0, -1)]
        if self.has_phi:
            out.append("phi")
        return out

    # -- rank shifts -------------------------------------------------------

    def rank_lowered(self) -> "Algebra":
        """Same family one rank down; the home of soliton labels."""
        if self.n - 1 < 1:
            raise ValueError("cannot lower rank below 1")
        return Algebra.__new_unchecked(self.family, self.n - 1)

    def rank_raised(self) -> "Algebra":
        return Algebra(self.family, self.n + 1)

    @property
    def label_rank_supported(self) -> bool:
        """True when the rank-lowered algebra meets its own rank bound."""
        return self.n - 1 >= _FAMILY[self.family][0]

    @classmethod
    def __new_unchecked(cls, family: str, n: int) -> "Algebra":
        # label crystals may sit below the family's automaton rank bound;
        # they only ever need enumeration and classical structure
        obj = object.__new__(cls)
        object.__setattr__(obj, "family", family)
        object.__setattr__(obj, "n", n)
        return obj

    # -- text form ---------------------------------------------------------

    def descriptor(self) -> str:
        return f"{self.family}:{self.n}"

    def __str__(self) -> str:
        return self.descriptor()

    @staticmethod
    def parse(text: str) -> "Algebra":
        try:
            family, n = text.split(":")
            return Algebra(family, int(n))
        except ValueError as exc:
            raise ValueError(f"bad algebra descriptor {text!r}") from exc


def min_rank(family: str) -> int:
    return _FAMILY[family][0]


def min_scattering_rank(family: str) -> int:
    """Smallest rank whose label algebra meets its own rank bound."""
    return _FAMILY[family][0] + 1
