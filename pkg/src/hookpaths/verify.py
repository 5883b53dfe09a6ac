"""The verification-suite runner: every stated identity, exhaustively at desk
scale, with counterexample witnesses rendered as the objects themselves
(words over N/E, descent sets) so failures can be checked by hand.

Statuses: "pass"/"fail" for asserted identities, "reported" for the
difference-formula comparisons whose printed source is under empirical
scrutiny rather than assertion.
"""

import time
from dataclasses import dataclass, field

from . import characters, pierimaps
from .paths import binom2, filter_paths, gf_T, gf_closed
from .qpoly import LaurentPoly, gauss_binomial, q_pochhammer, q_power, z as z_var
from .schur import e_perp, specialize2
from .shapes import hook_descent_subsets, hook_tableau_from_descents, make_hook, partitions_of, partition_str


@dataclass
class VerifyReport:
    suite: str
    params: dict
    status: str  # pass | fail | reported
    witness: str | None = None
    seconds: float = field(default=0.0, compare=False)

    def line(self, timings: bool = False) -> str:
        bits = [f"[{self.status.upper():8s}]", self.suite]
        bits.append(" ".join(f"{k}={v}" for k, v in self.params.items()))
        if self.witness:
            bits.append(f"-- {self.witness}")
        if timings:
            bits.append(f"({self.seconds:.3f}s)")
        return " ".join(bit for bit in bits if bit)

    def to_json_obj(self, timings: bool = False) -> dict:
        obj = {
            "suite": self.suite,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
        }
        if timings:
            obj["seconds"] = round(self.seconds, 6)
        return obj


def _timed(suite, params, check):
    """Run one instance; `check` returns a witness string or None."""
    start = time.perf_counter()
    try:
        witness = check()
        status = "pass" if witness is None else "fail"
    except Exception as exc:  # surface, never hide, an instance blowup
        witness = f"exception: {exc}"
        status = "fail"
    return VerifyReport(suite, params, status, witness, time.perf_counter() - start)


def _reported(suite, params, note):
    start = time.perf_counter()
    return VerifyReport(suite, params, "reported", note(), time.perf_counter() - start)


# -- individual suites -----------------------------------------------------------


def suite_gf(max_n: int = 14) -> list[VerifyReport]:
    out = []
    for n in range(2, max_n + 1):
        def poch(n=n):
            lhs = gf_T(n, 0)
            rhs = q_pochhammer(z_var, n - 2, rising=True)
            return None if lhs == rhs else f"{lhs} != {rhs}"

        out.append(_timed("gf", {"identity": "pochhammer", "n": n}, poch))

        def shifted(n=n):
            for s in range(0, n - 1):
                lhs = gf_T(n, s)
                if lhs != gf_closed(n, s):
                    return f"s={s}: enumeration != closed form"
                shift = q_power((n - 2 - s) * s + binom2(s + 1)) * LaurentPoly.term(1, ez=s)
                if lhs != gf_T(n - s, 0) * shift:
                    return f"s={s}: start-height shift identity fails"
            return None

        out.append(_timed("gf", {"identity": "start-shift", "n": n}, shifted))

        def slices(n=n):
            gf = gf_T(n, 0)
            for j in range(0, n - 1):
                expected = q_power(binom2(j + 1)) * gauss_binomial(n - 2, j)
                if gf.coefficient_of("z", j) != expected:
                    return f"height slice j={j} mismatch"
            return None

        out.append(_timed("gf", {"identity": "height-slice", "n": n}, slices))
    return out


def suite_alternating(max_n: int = 12) -> list[VerifyReport]:
    out = []
    for n in range(3, max_n + 1):
        for c in range(-2, 3):
            def check(n=n, c=c):
                ok = characters.alternating_identity_check(n, c, "all")
                return None if ok else "identity check returned false"

            out.append(_timed("alternating", {"n": n, "c": c}, check))
    return out


def suite_restriction2(max_n: int = 9) -> list[VerifyReport]:
    out = []
    for n in range(2, max_n + 1):
        for d in range(1, n + 1):
            mu = make_hook(d, n - d)

            def check(n=n, mu=mu):
                lhs = specialize2(characters.hook_formula(n, 1, mu).expansion)
                rhs = specialize2(characters.gl2_nabla_hooks(n, 1, mu))
                return None if lhs == rhs else f"{lhs} != {rhs}"

            out.append(
                _timed("restriction2", {"n": n, "mu": partition_str(mu)}, check)
            )
    return out


def suite_hrs_t0(max_n: int = 8) -> list[VerifyReport]:
    out = []
    for n in range(2, max_n + 1):
        def against_hooks(n=n):
            table = characters.hrs_t0(n, 0)
            for mu in partitions_of(n):
                lhs = specialize2(characters.hook_formula(n, 1, mu).expansion).at_zero("t")
                if lhs != table.coefficient(mu):
                    return f"mu={partition_str(mu)}"
            return None

        out.append(_timed("hrs-t0", {"check": "hook-formula", "n": n}, against_hooks))

        for k_pieri in range(0, n):
            def against_delta(n=n, k_pieri=k_pieri):
                table = characters.hrs_t0(n, n - 1 - k_pieri)
                for mu in partitions_of(n):
                    lhs = specialize2(
                        characters.gl2_delta_mu(n, k_pieri, mu)
                    ).at_zero("t")
                    if lhs != table.coefficient(mu):
                        return f"mu={partition_str(mu)}"
                return None

            out.append(
                _timed("hrs-t0", {"check": "delta-mu", "n": n, "k": k_pieri}, against_delta)
            )
    return out


def suite_pieri_paths(max_n: int = 9) -> list[VerifyReport]:
    out = []
    for n in range(3, max_n + 1):
        alternant = characters.alternant_formula(n, 1)
        for k in range(0, n - 1):
            def equality(n=n, k=k):
                lhs = pierimaps.perp_via_paths(n, k)
                rhs = e_perp(k, alternant)
                return None if lhs == rhs else f"{lhs} != {rhs}"

            out.append(_timed("pieri-paths", {"check": "perp", "n": n, "k": k}, equality))

            def positivity(n=n, k=k):
                sets = pierimaps.build_sets(n, k)
                if sets.tplus & sets.tminus:
                    return "plus/minus sets intersect"
                if not sets.v <= sets.tminus:
                    return "V escapes the minus set"
                total = len(sets.tplus) + len(sets.tminus)
                from math import comb

                if total != comb(n - 1, k) * 2 ** (n - k - 2):
                    return f"cardinality {total} off"
                gap = pierimaps.hook_sum(sets.tplus | sets.tminus) - (
                    pierimaps.hook_sum(sets.tplus) + pierimaps.hook_sum(sets.v)
                )
                return None if gap.is_schur_positive() else f"negative gap {gap}"

            out.append(
                _timed("pieri-paths", {"check": "positivity", "n": n, "k": k}, positivity)
            )
    return out


def suite_bijections(max_n: int = 10) -> list[VerifyReport]:
    out = []
    for n in range(3, max_n + 1):
        out.append(_timed("bijections", {"map": "plus", "n": n}, lambda n=n: _check_plus(n)))
        out.append(_timed("bijections", {"map": "minus", "n": n}, lambda n=n: _check_minus(n)))
        out.append(_timed("bijections", {"map": "east-start", "n": n}, lambda n=n: _check_phi(n)))
        out.append(_timed("bijections", {"map": "north-start", "n": n}, lambda n=n: _check_omega(n)))
        out.append(_timed("bijections", {"map": "descent-path", "n": n}, lambda n=n: _check_beta(n)))
        out.append(_timed("bijections", {"map": "slice-partition", "n": n}, lambda n=n: _check_slice(n)))
    return out


def _check_plus(n):
    for k in range(0, n - 1):
        sets = pierimaps.build_sets(n, k)
        domain = filter_paths(n, 0, "at_least_k_easts", k=k)
        images = set()
        for gamma in domain:
            tagged = pierimaps.e_plus_map(k, gamma)
            images.add(tagged)
            want = (gamma.area() + gamma.ht() + 1,) + (1,) * (n - 2 - gamma.ht() - k)
            if pierimaps.hook_of(tagged) != want:
                return f"k={k} hook law fails on {gamma}"
        if len(images) != len(domain):
            return f"k={k} not injective"
        if images != set(sets.tplus):
            return f"k={k} image is not the plus set"
    return None


def _check_minus(n):
    for k in range(1, n - 1):
        sets = pierimaps.build_sets(n, k)
        domain = [
            gamma
            for gamma in filter_paths(n, 0, "at_least_k_easts", k=k - 1)
            if gamma.north_count() > 0
        ]
        images = set()
        for gamma in domain:
            tagged = pierimaps.e_minus_map(k, gamma)
            images.add(tagged)
            arm = gamma.area() + gamma.ht()
            leg = n - 1 - gamma.ht() - k
            want = (arm,) + (1,) * leg if arm else ()
            if pierimaps.hook_of(tagged) != want:
                return f"k={k} hook law fails on {gamma}"
        if len(images) != len(domain):
            return f"k={k} not injective"
        if images != set(sets.v):
            return f"k={k} image is not the V set"
    return None


def _check_phi(n):
    for k in range(0, n - 2):
        domain = [
            p
            for p in filter_paths(n, 0, "height_eq", h=n - k - 3)
            if p.word.startswith("E")
        ]
        target = {
            hook_tableau_from_descents(d, n)
            for d in hook_descent_subsets(n, n - k - 1)
            if {1, 2} <= d
        }
        images = set()
        for gamma in domain:
            tab = pierimaps.phi_map(k, gamma)
            images.add(tab)
            if pierimaps.phi_inverse(k, tab) != gamma:
                return f"k={k} round trip fails on {gamma}"
            if gamma.area() + gamma.ht() + 1 != tab.maj() - tab.des():
                return f"k={k} statistic fails on {gamma}"
        if len(images) != len(domain) or images != target:
            return f"k={k} image mismatch"
    return None


def _check_omega(n):
    for k in range(0, n - 2):
        h = n - k - 3
        for j in range(0, h + 1):
            domain = filter_paths(n, 0, "starts_north_ends_exact_norths", j=j)
            domain = [p for p in domain if p.ht() == h]
            if j == h:
                # a north-start path of height h always carries k+1 >= 1
                # east steps, so its trailing run is < h; the descent-set
                # characterization is only meaningful below that edge
                if domain:
                    return f"k={k} j={j} unexpected all-north domain"
                continue
            target = {
                hook_tableau_from_descents(d, n)
                for d in hook_descent_subsets(n, n - k - 1)
                if set(range(1, j + 3)) | {n - 1} <= d
            }
            images = set()
            for gamma in domain:
                tab = pierimaps.omega_map(k, j, gamma)
                images.add(tab)
                if pierimaps.omega_inverse(k, j, tab) != gamma:
                    return f"k={k} j={j} round trip fails on {gamma}"
                if gamma.area() + gamma.ht() + 1 != tab.maj() - (j + 2):
                    return f"k={k} j={j} statistic fails on {gamma}"
            if len(images) != len(domain) or images != target:
                return f"k={k} j={j} image mismatch"
    return None


def _check_beta(n):
    for d in range(0, n - 1):
        tableaux = [
            hook_tableau_from_descents(s, n)
            for s in hook_descent_subsets(n, n - d - 1)
            if 1 in s
        ]
        target = set(filter_paths(n, 0, "height_eq", h=n - d - 2))
        images = set()
        for tab in tableaux:
            gamma = pierimaps.beta_map(d, tab)
            images.add(gamma)
            if pierimaps.beta_inverse(d, gamma) != tab:
                return f"d={d} round trip fails on {tab}"
            if tab.maj() != gamma.area() + gamma.ht() + 1:
                return f"d={d} statistic fails on {tab}"
        if len(images) != len(tableaux) or images != target:
            return f"d={d} image mismatch"
    return None


def _check_slice(n):
    for h in range(0, n - 1):
        slice_paths = set(filter_paths(n, 0, "height_eq", h=h))
        east = {p for p in slice_paths if p.word.startswith("E")}
        north_parts = []
        for j in range(0, h + 1):
            block = {
                p
                for p in filter_paths(n, 0, "starts_north_ends_exact_norths", j=j)
                if p.ht() == h
            }
            north_parts.append(block)
        union = set(east)
        total = len(east)
        for block in north_parts:
            union |= block
            total += len(block)
        if union != slice_paths or total != len(slice_paths):
            return f"h={h} east/north blocks do not partition the slice"
    return None


def suite_two_column(max_n: int = 9) -> list[VerifyReport]:
    out = []
    for n in range(5, max_n + 1):
        def forms(n=n):
            lifted = characters.two_column_formula(n, "lifted")
            path = characters.two_column_formula(n, "path")
            return None if lifted == path else f"{lifted} != {path}"

        out.append(_timed("two-column", {"check": "forms-agree", "n": n}, forms))

    for n in range(3, max_n + 2):  # the emptiness bound runs one size past
        def empty_w(n=n):
            w = pierimaps.build_sets(n, n - 2).w
            return None if not w else f"|W|={len(w)}"

        out.append(_timed("two-column", {"check": "top-W-empty", "n": n}, empty_w))
    return out


def suite_difference_w(max_n: int = 8) -> list[VerifyReport]:
    out = []
    for n in range(3, max_n + 1):
        for k in range(1, n - 1):
            def set_identity(n=n, k=k):
                sets = pierimaps.build_sets(n, k)
                direct = pierimaps.difference_W(n, k, "direct")
                via_sets = pierimaps.hook_sum(sets.tminus) - pierimaps.hook_sum(sets.v)
                return None if direct == via_sets else "W sum != minus-sum - V-sum"

            out.append(
                _timed("difference-W", {"check": "direct", "n": n, "k": k}, set_identity)
            )

            def comparison(n=n, k=k):
                report = pierimaps.compare_difference(n, k)
                bits = [
                    f"reindexed(conjugate-reading) {'agrees' if report['agree_conjugate'] else 'DISAGREES'}",
                    f"reindexed(literal-reading) {'agrees' if report['agree_literal'] else 'DISAGREES'}",
                ]
                if "agree_k1" in report:
                    bits.append(f"printed k=1 display {'agrees' if report['agree_k1'] else 'DISAGREES'}")
                return "; ".join(bits)

            out.append(
                _reported("difference-W", {"check": "display", "n": n, "k": k}, comparison)
            )
    return out


SUITES = {
    "gf": (suite_gf, 14),
    "alternating": (suite_alternating, 12),
    "restriction2": (suite_restriction2, 9),
    "hrs-t0": (suite_hrs_t0, 8),
    "pieri-paths": (suite_pieri_paths, 9),
    "bijections": (suite_bijections, 10),
    "two-column": (suite_two_column, 9),
    "difference-W": (suite_difference_w, 8),
}


def run_suite(name: str, max_n: int | None = None) -> list[VerifyReport]:
    """Run one named suite (or "all"); reports come back in deterministic order."""
    if name == "all":
        reports = []
        for suite_name, (fn, default) in SUITES.items():
            bound = default if max_n is None else min(max_n, default)
            reports.extend(fn(bound))
        return reports
    if name not in SUITES:
        known = ", ".join(list(SUITES) + ["all"])
        raise ValueError(f"unknown suite {name!r}; known: {known}")
    fn, default = SUITES[name]
    return fn(default if max_n is None else max_n)


def has_failure(reports) -> bool:
    return any(r.status == "fail" for r in reports)
