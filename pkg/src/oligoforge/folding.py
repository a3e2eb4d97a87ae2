"""Minimum-free-energy folding prediction for DNA words.

The predictor fills a table E[i][j] holding the minimum energy of any
non-crossing set of complementary pairings within positions i..j, using
per-pair energies (A-T and G-C only) and a bifurcation minimum. All
energies are exact integers; the simpler screening score in
``linear_energy`` uses exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .seqcore import DnaSequence, _text

DEFAULT_STRUCTURE_THRESHOLD = -2


class EnergyParams:
    """Pairing energies: at for {A,T}, gc for {G,C}, zero elsewhere.

    Both values must be <= 0 (a pairing never raises the energy). Only the
    two complementary pair classes are tunable; traced structures then pair
    complementary bases exclusively.
    """

    __slots__ = ("at", "gc", "_alpha")

    def __init__(self, at: int = -1, gc: int = -2):
        if at > 0 or gc > 0:
            raise ValueError("pair energies must be <= 0")
        self.at = at
        self.gc = gc
        alpha = {}
        for x in "ACGT":
            for y in "ACGT":
                alpha[x + y] = 0
        alpha["AT"] = alpha["TA"] = at
        alpha["GC"] = alpha["CG"] = gc
        self._alpha = alpha

    def alpha(self, x: str, y: str) -> int:
        """Energy contributed by pairing bases x and y (order-free)."""
        return self._alpha[x + y]

    def __repr__(self) -> str:
        return f"EnergyParams(at={self.at}, gc={self.gc})"

    def __eq__(self, other) -> bool:
        if isinstance(other, EnergyParams):
            return self.at == other.at and self.gc == other.gc
        return NotImplemented


DEFAULT_ENERGY_PARAMS = EnergyParams()


class EnergyTable:
    """Upper-triangular table of minimum energies for one sequence.

    value(i, j) is defined for 1 <= i <= n and i-1 <= j <= n (the j = i and
    j = i-1 cells are the zero boundary); anything below that is outside
    the table.
    """

    __slots__ = ("n", "_grid")

    def __init__(self, n: int, grid: list[list[int]]):
        self.n = n
        self._grid = grid

    def value(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and j <= self.n and j >= i - 1 and j >= 1):
            raise IndexError(f"no entry ({i},{j}) in a table of size {self.n}")
        return self._grid[i][j]

    @property
    def min_free_energy(self) -> int:
        """E[1][n], the minimum energy over the whole sequence."""
        return self._grid[1][self.n]


def nussinov_table(q: DnaSequence | str, params: EnergyParams | None = None) -> EnergyTable:
    """Fill the energy table for q.

    Diagonal and first sub-diagonal start at zero; each remaining cell is
    the minimum of pairing the endpoints, E[i+1][j-1] + alpha(q_i, q_j),
    and every split E[i][k-1] + E[k][j] for i < k <= j. Runs in O(n^3).
    """
    params = params or DEFAULT_ENERGY_PARAMS
    s = _text(q)
    n = len(s)
    alpha = params._alpha
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for span in range(1, n):
        for i in range(1, n - span + 1):
            j = i + span
            row = grid[i]
            best = grid[i + 1][j - 1] + alpha[s[i - 1] + s[j - 1]]
            for k in range(i + 1, j + 1):
                v = row[k - 1] + grid[k][j]
                if v < best:
                    best = v
            row[j] = best
    return EnergyTable(n, grid)


def min_free_energy(q: DnaSequence | str, params: EnergyParams | None = None) -> int:
    """Minimum energy of q over all non-crossing complementary pairings."""
    return nussinov_table(q, params).min_free_energy


@dataclass(frozen=True)
class SecondaryStructure:
    """Disjoint complementary pairings (1-based, i < j) and their energy."""

    pairs: frozenset[tuple[int, int]]
    energy: int

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def traceback(
    table: EnergyTable,
    q: DnaSequence | str,
    params: EnergyParams | None = None,
) -> SecondaryStructure:
    """Recover one minimum-energy structure from a filled table.

    Deterministic tie-breaking: pair the endpoints whenever that branch
    achieves the cell value with a strictly negative pairing energy,
    otherwise take the split with the smallest k. The summed pair energies
    always equal table.value(1, n).
    """
    params = params or DEFAULT_ENERGY_PARAMS
    s = _text(q)
    if table.n != len(s):
        raise ValueError(f"table size {table.n} does not match sequence length {len(s)}")
    alpha = params._alpha
    grid = table._grid
    pairs = []
    stack = [(1, table.n)]
    while stack:
        i, j = stack.pop()
        if j <= i:
            continue
        e = grid[i][j]
        a = alpha[s[i - 1] + s[j - 1]]
        if a < 0 and e == grid[i + 1][j - 1] + a:
            pairs.append((i, j))
            stack.append((i + 1, j - 1))
            continue
        for k in range(i + 1, j + 1):
            if e == grid[i][k - 1] + grid[k][j]:
                stack.append((i, k - 1))
                stack.append((k, j))
                break
        else:
            raise ValueError("table is inconsistent with the sequence and parameters")
    energy = sum(alpha[s[i - 1] + s[j - 1]] for i, j in pairs)
    return SecondaryStructure(frozenset(pairs), energy)


def dot_bracket(structure: SecondaryStructure, n: int) -> str:
    """Render a structure as dots and matched parentheses."""
    chars = ["."] * n
    for i, j in structure.pairs:
        chars[i - 1] = "("
        chars[j - 1] = ")"
    return "".join(chars)


def has_structure(
    q: DnaSequence | str,
    params: EnergyParams | None = None,
    threshold: int = DEFAULT_STRUCTURE_THRESHOLD,
) -> bool:
    """Whether q folds at or below the energy threshold.

    The default threshold of -2 treats a single A-T pairing (energy -1) as
    too weak to count as a structure.
    """
    if threshold > 0:
        raise ValueError("threshold must be <= 0")
    return min_free_energy(q, params) <= threshold


class LinearEnergyModel:
    """Weighted sum of pairing energies along the first few diagonals.

    kappa is a constant offset; gammas must be positive and non-increasing,
    one weight per shift distance starting at 1.
    """

    __slots__ = ("kappa", "gammas")

    def __init__(self, kappa=0, gammas=(1,)):
        gammas = tuple(Fraction(g) for g in gammas)
        if not gammas:
            raise ValueError("at least one gamma weight is required")
        if any(g <= 0 for g in gammas):
            raise ValueError("gamma weights must be positive")
        if any(a < b for a, b in zip(gammas, gammas[1:])):
            raise ValueError("gamma weights must be non-increasing")
        self.kappa = Fraction(kappa)
        self.gammas = gammas

    @property
    def depth(self) -> int:
        return len(self.gammas)

    def __repr__(self) -> str:
        return f"LinearEnergyModel(kappa={self.kappa}, gammas={self.gammas})"


DEFAULT_LINEAR_MODEL = LinearEnergyModel(
    kappa=0, gammas=(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))
)


def linear_energy(
    q: DnaSequence | str,
    model: LinearEnergyModel | None = None,
    params: EnergyParams | None = None,
) -> Fraction:
    """Approximate folding score from the first model.depth shift diagonals.

    Returns kappa + sum over shift distances d of gamma_d times the summed
    pairing energies alpha(q_i, q_{i+d}). With a single unit weight this is
    the plain adjacent-pair sum; with unit alpha on complementary pairs the
    d-th inner sum is minus the shift-match count mu(q, d).
    """
    model = model or DEFAULT_LINEAR_MODEL
    params = params or DEFAULT_ENERGY_PARAMS
    s = _text(q)
    n = len(s)
    if model.depth >= n:
        raise ValueError(f"model depth {model.depth} requires length > {model.depth}")
    alpha = params._alpha
    total = model.kappa
    for d, gamma in enumerate(model.gammas, start=1):
        total += gamma * sum(alpha[s[i] + s[i + d]] for i in range(n - d))
    return total


def _render_cell(table: EnergyTable, i: int, j: int) -> str:
    if j >= i - 1:
        return str(table.value(i, j))
    return "*"


def format_table_text(q: DnaSequence | str, table: EnergyTable) -> str:
    """Pretty-print a table with base labels and '*' below the boundary."""
    s = _text(q)
    n = table.n
    cells = [[_render_cell(table, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    width = max(max(len(c) for row in cells for c in row), 1)
    header = " " + " ".join(b.rjust(width) for b in s)
    lines = [header]
    for i in range(1, n + 1):
        lines.append(s[i - 1] + " ".join(c.rjust(width) for c in cells[i - 1]))
    return "\n".join(lines)


def format_table_csv(q: DnaSequence | str, table: EnergyTable) -> str:
    """Same layout as the text table, comma-separated."""
    s = _text(q)
    n = table.n
    lines = ["," + ",".join(s)]
    for i in range(1, n + 1):
        lines.append(s[i - 1] + "," + ",".join(_render_cell(table, i, j) for j in range(1, n + 1)))
    return "\n".join(lines)
