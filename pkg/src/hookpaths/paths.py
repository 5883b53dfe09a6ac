"""North-east paths in a staircase grid, their area/height statistics, and
the exact generating functions they realize.

A path family is indexed by an ambient size n and a start height s: the grid
is the (n-2)-staircase, paths start at (0, s), take n-s-2 unit steps over
{N, E}, and end on the anti-diagonal x + y = n - 2.  Any NE word of the
right length fits, so the family has 2^(n-s-2) elements.  The conventions:
start heights past the staircase clamp to s = n-2 (leaving only the empty
word), and n < 2 gives the empty family.
"""

from itertools import product

from .qpoly import LaurentPoly, ZERO, gauss_binomial, q_power


def binom2(m: int) -> int:
    """binomial(m, 2), tolerant of m < 2."""
    return m * (m - 1) // 2 if m >= 2 else 0


def clamp_start(n: int, s: int) -> int:
    """The effective start height; heights past the staircase clamp to n-2."""
    return min(s, n - 2)


class LatticePath:
    """One NE path with its ambient grid (n, s).

    The word is a plain string over {N, E}; the empty path renders "eps".
    Statistics depend on the ambient grid, so the grid travels with the
    path and equality compares (n, s, word).
    """

    __slots__ = ("n", "s", "word")

    def __init__(self, n: int, s: int, word: str):
        if n < 2:
            raise ValueError(f"no paths exist for n={n}")
        if not 0 <= s <= n - 2:
            raise ValueError(f"start height {s} outside 0..{n - 2}")
        if len(word) != n - s - 2 or any(ch not in "NE" for ch in word):
            raise ValueError(f"word {word!r} invalid for (n={n}, s={s})")
        self.n = n
        self.s = s
        self.word = word

    # -- statistics ---------------------------------------------------------

    def ht(self) -> int:
        """The y coordinate of the endpoint."""
        return self.s + self.word.count("N")

    def area(self) -> int:
        """Boxes of the staircase south-east of the path.

        Rows below the start height count fully; a row crossed by a north
        step at x = p contributes the n-2-row-p boxes to its east; rows at
        or above the endpoint contribute nothing.  This reproduces the
        empty-word convention area = binomial(n-1, 2).
        """
        n, y = self.n, self.s
        total = sum(n - 2 - j for j in range(self.s))
        x = 0
        for step in self.word:
            if step == "N":
                total += n - 2 - y - x
                y += 1
            else:
                x += 1
        return total

    def endpoint(self) -> tuple[int, int]:
        return (self.word.count("E"), self.ht())

    def east_count(self) -> int:
        return self.word.count("E")

    def north_count(self) -> int:
        return self.word.count("N")

    def leading_run(self, step: str) -> int:
        k = 0
        for ch in self.word:
            if ch != step:
                break
            k += 1
        return k

    def trailing_run(self, step: str) -> int:
        k = 0
        for ch in reversed(self.word):
            if ch != step:
                break
            k += 1
        return k

    # -- plumbing -----------------------------------------------------------

    def same_grid(self, other: "LatticePath") -> bool:
        return self.n == other.n and self.s == other.s

    def __eq__(self, other):
        return (
            isinstance(other, LatticePath)
            and (self.n, self.s, self.word) == (other.n, other.s, other.word)
        )

    def __hash__(self):
        return hash((self.n, self.s, self.word))

    def __str__(self):
        return self.word or "eps"

    def __repr__(self):
        return f"LatticePath(n={self.n}, s={self.s}, {self})"

    @classmethod
    def parse(cls, n: int, s: int, text: str) -> "LatticePath":
        word = "" if text in ("", "eps") else text.upper()
        return cls(n, clamp_start(n, s), word)


def enumerate_T(n: int, s: int) -> list[LatticePath]:
    """The full path family for (n, s), in lexicographic word order (E < N).

    Start heights s >= n-2 give exactly the empty word; n < 2 gives [].
    """
    if n < 2:
        return []
    if s < 0:
        raise ValueError(f"start height must be nonnegative, got {s}")
    s = clamp_start(n, s)
    length = n - s - 2
    return [
        LatticePath(n, s, "".join(w)) for w in product("EN", repeat=length)
    ]


def gf_T(n: int, s: int) -> LaurentPoly:
    """sum of q^area * z^ht over the family, by direct enumeration."""
    out = ZERO
    for path in enumerate_T(n, s):
        out = out + LaurentPoly.term(1, eq=path.area(), ez=path.ht())
    return out


def gf_closed(n: int, s: int) -> LaurentPoly:
    """The closed form of the same generating function.

    sum_{j=0..r} q^(binom(s+j+1,2) + s(r-j)) [r j]_q z^(j+s) with r = n-s-2;
    for s = 0 this is the rising q-Pochhammer product.
    """
    if n < 2:
        return ZERO
    s = clamp_start(n, s)
    r = n - s - 2
    out = ZERO
    for j in range(r + 1):
        expo = binom2(s + j + 1) + s * (r - j)
        out = out + q_power(expo) * gauss_binomial(r, j) * LaurentPoly.term(1, ez=j + s)
    return out


def hat_gf(m: int, j: int) -> LaurentPoly:
    """Skewed sum over paths of height >= j in the (m, 0) family.

    Each path is weighted (-q z)^(j - ht) q^area z^ht, so the z-degree
    concentrates at z^j.  For j = 0 the sum telescopes to 0 on any
    nonempty grid and to 1 on the empty one.
    """
    if j < 0:
        raise ValueError(f"height threshold must be nonnegative, got {j}")
    out = ZERO
    for path in enumerate_T(m, 0):
        h = path.ht()
        if h < j:
            continue
        sign = -1 if (j - h) % 2 else 1
        out = out + LaurentPoly.term(sign, eq=path.area() + (j - h), ez=j)
    return out


PREDICATES = (
    "height_eq",
    "at_least_k_easts",
    "starts_with_east",
    "starts_north_ends_exact_norths",
    "prefix",
    "suffix",
)


def filter_paths(n: int, s: int, predicate: str, **params) -> list[LatticePath]:
    """Named subsets of the (n, s) family used by the Pieri and bijection maps.

    height_eq(h): endpoint height h.
    at_least_k_easts(k): at least k east steps, i.e. n-2-ht >= k.
    starts_with_east: first step E.
    starts_north_ends_exact_norths(j): first step N and trailing north run
        exactly j.
    prefix(pattern) / suffix(pattern): literal word patterns over {N, E}.
    """
    paths = enumerate_T(n, s)
    if predicate == "height_eq":
        h = params["h"]
        return [p for p in paths if p.ht() == h]
    if predicate == "at_least_k_easts":
        k = params["k"]
        return [p for p in paths if p.east_count() >= k]
    if predicate == "starts_with_east":
        return [p for p in paths if p.word.startswith("E")]
    if predicate == "starts_north_ends_exact_norths":
        j = params["j"]
        return [
            p
            for p in paths
            if p.word.startswith("N") and p.trailing_run("N") == j
        ]
    if predicate == "prefix":
        return [p for p in paths if p.word.startswith(params["pattern"])]
    if predicate == "suffix":
        return [p for p in paths if p.word.endswith(params["pattern"])]
    raise ValueError(f"unknown predicate {predicate!r}; known: {PREDICATES}")
