"""One-row crystals, Kashiwara operators, and the tensor product rule.

Elements of the capacity-l crystal B_l are integer coordinate vectors:

* ``A1``                    (x_1, .., x_{n+1}),            sum = l
* ``A2odd`` ``C1`` ``A2even`` (x_1..x_n, xb_n..xb_1),      sum = l / parity / <= l
* ``D1``                    same layout, x_n = 0 or xb_n = 0, sum = l
* ``B1`` ``D2``             (x_1..x_n, x_0, xb_n..xb_1),   x_0 in {0,1}

Classical operators act through the row word of an element: its letters
written in weakly decreasing alphabet order (barred first, then 0, then
unbarred descending), acted on letter-wise by the tensor rule over the
vector crystal, and read back by counting letters.
"""

from __future__ import annotations

from itertools import product

from crystalca.algebra import Algebra

Coords = tuple[int, ...]
Factor = tuple[int, Coords]  # (capacity, coordinates)


class CrystalError(Exception):
    pass


# ---------------------------------------------------------------------------
# letter-level structure
# ---------------------------------------------------------------------------

_letter_tables: dict = {}


def _build_letter_tables(alg: Algebra):
    """Edge maps f[i][letter] and e[i][letter] of the vector crystal."""
    series, n = alg.classical
    f: dict[int, dict[str, str]] = {i: {} for i in range(1, n + 1)}
    if series == "A":
        for i in range(1, n + 1):
            f[i][str(i)] = str(i + 1)
    else:
        for i in range(1, n):
            f[i][str(i)] = str(i + 1)
            f[i][f"{i + 1}b"] = f"{i}b"
        if series == "B":
            f[n][str(n)] = "0"
            f[n]["0"] = f"{n}b"
        elif series == "C":
            f[n][str(n)] = f"{n}b"
        elif series == "D":
            if n >= 2:
                f[n][str(n - 1)] = f"{n}b"
                f[n][str(n)] = f"{n - 1}b"
    e = {i: {v: k for k, v in fi.items()} for i, fi in f.items()}
    # chain lengths epsilon/phi per letter
    stats: dict[int, dict[str, tuple[int, int]]] = {}
    for i in range(1, n + 1):
        stats[i] = {}
        for a in alg.letters():
            eps = 0
            b = a
            while b in e[i]:
                b = e[i][b]
                eps += 1
            phi = 0
            b = a
            while b in f[i]:
                b = f[i][b]
                phi += 1
            stats[i][a] = (eps, phi)
    return f, e, stats


def _tables(alg: Algebra):
    key = (alg.family, alg.n)
    tab = _letter_tables.get(key)
    if tab is None:
        tab = _letter_tables[key] = _build_letter_tables(alg)
    return tab


def letter_f(alg: Algebra, a: str, i: int) -> str | None:
    return _tables(alg)[0][i].get(a)


def letter_e(alg: Algebra, a: str, i: int) -> str | None:
    return _tables(alg)[1][i].get(a)


def letter_eps_phi(alg: Algebra, a: str, i: int) -> tuple[int, int]:
    return _tables(alg)[2][i][a]


def letter_weight(alg: Algebra, a: str) -> Coords:
    dim = alg.n + 1 if alg.family == "A1" else alg.n
    w = [0] * dim
    if a not in ("0", "phi"):
        if a.endswith("b"):
            w[int(a[:-1]) - 1] = -1
        else:
            w[int(a) - 1] = 1
    return tuple(w)


# ---------------------------------------------------------------------------
# coordinates <-> letters / row words
# ---------------------------------------------------------------------------

def letter_to_coords(alg: Algebra, a: str) -> Coords:
    c = [0] * alg.coord_len
    if a == "phi":
        pass
    elif a == "0":
        c[alg.zero_index] = 1
    elif a.endswith("b"):
        c[alg.coord_len - int(a[:-1])] = 1
    else:
        c[int(a) - 1] = 1
    return tuple(c)


def coords_to_letter(alg: Algebra, c: Coords) -> str:
    if sum(c) == 0:
        if alg.has_phi:
            return "phi"
        raise CrystalError(f"{c} is not a single-box element")
    w = row_word(alg, c)
    if len(w) != 1:
        raise CrystalError(f"{c} is not a single-box element")
    return w[0]


def row_word(alg: Algebra, coords: Coords) -> list[str]:
    """Letters of an element in weakly decreasing alphabet order."""
    n, L = alg.n, alg.coord_len
    out: list[str] = []
    if alg.family == "A1":
        for i in range(n + 1, 0, -1):
            out += [str(i)] * coords[i - 1]
        return out
    for i in range(1, n + 1):
        out += [f"{i}b"] * coords[L - i]
    if alg.has_zero_letter and coords[alg.zero_index]:
        out += ["0"] * coords[alg.zero_index]
    for i in range(n, 0, -1):
        out += [str(i)] * coords[i - 1]
    return out


def coords_of_letters(alg: Algebra, letters) -> Coords:
    c = [0] * alg.coord_len
    for a in letters:
        if a == "phi":
            raise CrystalError("phi cannot appear inside a one-row element")
        if a == "0":
            c[alg.zero_index] += 1
        elif a.endswith("b"):
            c[alg.coord_len - int(a[:-1])] += 1
        else:
            c[int(a) - 1] += 1
    return tuple(c)


def is_valid_element(alg: Algebra, l: int, coords: Coords) -> bool:
    if len(coords) != alg.coord_len or any(x < 0 for x in coords):
        return False
    s = sum(coords)
    if alg.zero_index is not None and coords[alg.zero_index] > 1:
        return False
    if alg.family == "D1" and coords[alg.n - 1] and coords[alg.n]:
        return False
    rule = alg.sum_rule
    if rule == "exact":
        return s == l
    if rule == "parity":
        return s <= l and (l - s) % 2 == 0
    return s <= l


def u_element(alg: Algebra, l: int) -> Coords:
    """The vacuum element u_l = (l, 0, .., 0)."""
    return (l,) + (0,) * (alg.coord_len - 1)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_B1(alg: Algebra) -> list[str]:
    return alg.letters()


def enumerate_Bl(alg: Algebra, l: int) -> list[Coords]:
    """All of B_l, in lexicographic coordinate order."""
    if l < 1:
        raise ValueError("capacity must be >= 1")
    n, L = alg.n, alg.coord_len
    rule = alg.sum_rule
    out = []

    def boxes(length, total):
        if length == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in boxes(length - 1, total - first):
                yield (first,) + rest

    if rule == "exact":
        sums = [l]
    elif rule == "parity":
        sums = list(range(l % 2, l + 1, 2))
    else:
        sums = list(range(l + 1))
    for s in sums:
        if alg.zero_index is None:
            for c in boxes(L, s):
                out.append(c)
        else:
            for x0 in (0, 1):
                if s - x0 < 0:
                    continue
                for c in boxes(L - 1, s - x0):
                    out.append(c[:n] + (x0,) + c[n:])
    if alg.family == "D1":
        out = [c for c in out if not (c[n - 1] and c[n])]
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Kashiwara operators on one-row elements and tensor words
# ---------------------------------------------------------------------------

_stat_cache: dict = {}
_op_cache: dict = {}


def _word_stats(alg: Algebra, word: list[str], i: int) -> tuple[int, int]:
    eps = phi = 0
    for a in word:
        e2, p2 = letter_eps_phi(alg, a, i)
        eps += max(0, e2 - phi)
        phi = p2 + max(0, phi - e2)
    return eps, phi


def elem_eps_phi(alg: Algebra, coords: Coords, i: int) -> tuple[int, int]:
    key = (alg.family, alg.n, coords, i)
    val = _stat_cache.get(key)
    if val is None:
        val = _stat_cache[key] = _word_stats(alg, row_word(alg, coords), i)
    return val


def _word_apply(alg: Algebra, word: list[str], i: int, op: str) -> list[str] | None:
    """Apply e~_i or f~_i to a letter word by the tensor rule."""
    m = len(word)
    suf: list[tuple[int, int]] = [(0, 0)] * (m + 1)
    for j in range(m - 1, -1, -1):
        e1, p1 = letter_eps_phi(alg, word[j], i)
        e2, p2 = suf[j + 1]
        suf[j] = (e1 + max(0, e2 - p1), p2 + max(0, p1 - e2))
    if (op == "e" and suf[0][0] == 0) or (op == "f" and suf[0][1] == 0):
        return None
    for j in range(m):
        e1, p1 = letter_eps_phi(alg, word[j], i)
        e2, _ = suf[j + 1]
        act_here = (p1 >= e2) if op == "e" else (p1 > e2)
        if act_here:
            b = letter_e(alg, word[j], i) if op == "e" else letter_f(alg, word[j], i)
            return word[:j] + [b] + word[j + 1:]
    raise CrystalError("signature scan failed")  # pragma: no cover


def elem_apply(alg: Algebra, coords: Coords, i: int, op: str) -> Coords | None:
    key = (alg.family, alg.n, coords, i, op)
    if key in _op_cache:
        return _op_cache[key]
    w = _word_apply(alg, row_word(alg, coords), i, op)
    val = None if w is None else coords_of_letters(alg, w)
    _op_cache[key] = val
    return val


def elem_e(alg: Algebra, coords: Coords, i: int) -> Coords | None:
    return elem_apply(alg, coords, i, "e")


def elem_f(alg: Algebra, coords: Coords, i: int) -> Coords | None:
    return elem_apply(alg, coords, i, "f")


def elem_weight(alg: Algebra, coords: Coords) -> Coords:
    n = alg.n
    if alg.family == "A1":
        return coords
    w = [coords[i - 1] for i in range(1, n + 1)]
    L = alg.coord_len
    for i in range(1, n + 1):
        w[i - 1] -= coords[L - i]
    return tuple(w)


# tensor words: lists of (capacity, coords) factors

def word_eps_phi(alg: Algebra, factors: list[Factor], i: int) -> tuple[int, int]:
    eps = phi = 0
    for _, c in factors:
        e2, p2 = elem_eps_phi(alg, c, i)
        eps += max(0, e2 - phi)
        phi = p2 + max(0, phi - e2)
    return eps, phi


def word_apply(alg: Algebra, factors: list[Factor], i: int, op: str) -> list[Factor] | None:
    m = len(factors)
    suf: list[tuple[int, int]] = [(0, 0)] * (m + 1)
    for j in range(m - 1, -1, -1):
        e1, p1 = elem_eps_phi(alg, factors[j][1], i)
        e2, p2 = suf[j + 1]
        suf[j] = (e1 + max(0, e2 - p1), p2 + max(0, p1 - e2))
    if (op == "e" and suf[0][0] == 0) or (op == "f" and suf[0][1] == 0):
        return None
    for j in range(m):
        _, p1 = elem_eps_phi(alg, factors[j][1], i)
        e2, _ = suf[j + 1]
        act_here = (p1 >= e2) if op == "e" else (p1 > e2)
        if act_here:
            cap, c = factors[j]
            c2 = elem_apply(alg, c, i, op)
            if c2 is None:
                raise CrystalError("signature scan failed")  # pragma: no cover
            return factors[:j] + [(cap, c2)] + factors[j + 1:]
    raise CrystalError("signature scan failed")  # pragma: no cover


def word_e(alg: Algebra, factors: list[Factor], i: int) -> list[Factor] | None:
    return word_apply(alg, factors, i, "e")


def word_f(alg: Algebra, factors: list[Factor], i: int) -> list[Factor] | None:
    return word_apply(alg, factors, i, "f")


def word_weight(alg: Algebra, factors: list[Factor]) -> Coords:
    dim = alg.n + 1 if alg.family == "A1" else alg.n
    w = [0] * dim
    for _, c in factors:
        for k, x in enumerate(elem_weight(alg, c)):
            w[k] += x
    return tuple(w)


def is_highest_weight(alg: Algebra, factors: list[Factor]) -> bool:
    return all(
        word_eps_phi(alg, factors, i)[0] == 0 for i in range(1, alg.n_classical + 1)
    )


def raise_to_hw(alg: Algebra, factors: list[Factor]) -> tuple[list[Factor], list[int]]:
    """Apply raising operators until none applies; return (result, path).

    Replaying f~ along the reversed path recovers the input exactly.
    """
    path: list[int] = []
    cur = factors
    while True:
        for i in range(1, alg.n_classical + 1):
            if word_eps_phi(alg, cur, i)[0] > 0:
                cur = word_apply(alg, cur, i, "e")
                path.append(i)
                break
        else:
            return cur, path


# ---------------------------------------------------------------------------
# text encoding of elements
# ---------------------------------------------------------------------------

def format_element(l: int, coords: Coords) -> str:
    return f"B[{l}](" + ",".join(str(x) for x in coords) + ")"


def parse_element(text: str) -> Factor:
    if not (text.startswith("B[") and text.endswith(")")):
        raise ValueError(f"bad element {text!r}")
    cap, rest = text[2:-1].split("](")
    return int(cap), tuple(int(x) for x in rest.split(","))
