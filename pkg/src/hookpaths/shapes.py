"""Partitions, Ferrers-diagram operations, and standard Young tableaux.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ().  Tableaux use the French convention: rows[0] is the bottom
row and entries strictly increase along rows and up columns.
"""

from itertools import combinations

Partition = tuple[int, ...]

SYT_SIZE_BOUND = 12


def check_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p <= 0:
            raise ValueError(f"partition parts must be positive: {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"partition parts must weakly decrease: {lam}")
    return lam


def normalize_shape(parts) -> Partition | None:
    """Canonical partition from a raw part sequence, or None if invalid.

    Trailing zeros are stripped; a negative part, or a zero followed by a
    positive part, or an increase, makes the shape invalid (the s_mu = 0
    convention for formulas that run off the edge of a diagram).
    """
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    lam = tuple(parts)
    for i, p in enumerate(lam):
        if p <= 0 or (i and lam[i - 1] < p):
            return None
    return lam


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text or text == "0" or text.lower() == "empty":
        return ()
    return check_partition(int(piece) for piece in text.split(","))


def partition_str(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "empty"


def conjugate(lam: Partition) -> Partition:
    """Reflect the diagram through the diagonal (column lengths)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def is_hook(lam: Partition) -> bool:
    """True for (), (a), and (a, 1^k)."""
    return len(lam) <= 1 or lam[1] <= 1


def make_hook(a: int, k: int) -> Partition:
    """The hook (a, 1^k); a=1 degenerates to the column (1^(k+1))."""
    if a <= 0:
        raise ValueError(f"hook arm must be positive, got {a}")
    if k < 0:
        raise ValueError(f"hook leg must be nonnegative, got {k}")
    return (a,) + (1,) * k


def hook_arm_leg(lam: Partition) -> tuple[int, int]:
    """(a, k) with lam = (a, 1^k); the empty partition gives (0, 0)."""
    if not is_hook(lam):
        raise ValueError(f"not a hook: {lam}")
    if not lam:
        return (0, 0)
    return (lam[0], len(lam) - 1)


def partitions_of(n: int):
    """All partitions of n, largest part first, in lexicographic descent."""
    if n == 0:
        yield ()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


class StdTableau:
    """A standard Young tableau, rows bottom-to-top (French convention)."""

    __slots__ = ("rows", "shape", "n", "_row_of")

    def __init__(self, rows):
        self.rows = tuple(tuple(int(e) for e in row) for row in rows)
        self.shape = check_partition(len(row) for row in self.rows)
        self.n = sum(self.shape)
        row_of = {}
        for r, row in enumerate(self.rows):
            for c, entry in enumerate(row):
                if entry in row_of:
                    raise ValueError(f"duplicate entry {entry}")
                row_of[entry] = r
                if c and not row[c - 1] < entry:
                    raise ValueError(f"row not increasing: {row}")
                if r and self.rows[r - 1][c] >= entry:
                    raise ValueError(f"column not increasing at ({r},{c})")
        if set(row_of) != set(range(1, self.n + 1)):
            raise ValueError("entries must be exactly 1..n")
        self._row_of = row_of

    def row_of(self, entry: int) -> int:
        return self._row_of[entry]

    def descent_set(self) -> frozenset:
        """Entries i whose successor i+1 sits in a strictly higher row."""
        return frozenset(
            i for i in range(1, self.n) if self._row_of[i + 1] > self._row_of[i]
        )

    def des(self) -> int:
        return len(self.descent_set())

    def maj(self) -> int:
        return sum(self.descent_set())

    def conjugate(self) -> "StdTableau":
        cols = [[] for _ in range(self.shape[0])] if self.shape else []
        for row in self.rows:
            for c, entry in enumerate(row):
                cols[c].append(entry)
        return StdTableau(cols)

    def __eq__(self, other):
        return isinstance(other, StdTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "/".join(",".join(str(e) for e in row) for row in self.rows)

    def __repr__(self):
        return f"StdTableau({self})"

    @classmethod
    def parse(cls, text: str) -> "StdTableau":
        return cls([piece.split(",") for piece in text.split("/")])


def enumerate_SYT(lam, bound: int = SYT_SIZE_BOUND) -> list[StdTableau]:
    """All standard Young tableaux of the given shape, by backtracking.

    Refuses shapes larger than `bound` cells; the exhaustive suites never
    need more and the bound guards against accidental blowups.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if n > bound:
        raise ValueError(f"shape size {n} exceeds the enumeration bound {bound}")
    if n == 0:
        return [StdTableau(())]
    out = []
    rows = [[] for _ in lam]

    def place(v):
        if v > n:
            out.append(StdTableau([tuple(r) for r in rows]))
            return
        for r, row in enumerate(rows):
            if len(row) >= lam[r]:
                continue
            if r and len(rows[r - 1]) <= len(row):
                continue
            row.append(v)
            place(v + 1)
            row.pop()

    place(1)
    return out


def hook_tableau_from_descents(S, n: int) -> StdTableau:
    """The unique hook-shaped tableau of size n with the given descent set.

    The leg entries are exactly the successors of the descents, so the shape
    comes out as (n - |S|, 1^|S|).
    """
    S = frozenset(S)
    if not S <= set(range(1, n)):
        raise ValueError(f"descents must lie in 1..{n - 1}: {sorted(S)}")
    leg = sorted(s + 1 for s in S)
    arm = [e for e in range(1, n + 1) if e not in set(leg)]
    return StdTableau([tuple(arm)] + [(e,) for e in leg])


def descent_stats(tau: StdTableau) -> tuple[frozenset, int, int]:
    """(descent set, des, maj) in one call."""
    des_set = tau.descent_set()
    return des_set, len(des_set), sum(des_set)


def hook_descent_subsets(n: int, k: int):
    """All k-element descent sets of hook tableaux of size n."""
    return (frozenset(c) for c in combinations(range(1, n), k))
