"""End-to-end checks, one per acceptance criterion, each printing a
single PASS or FAIL line so the verdicts can be read off a plain
``pytest -s`` run.  Every comparison here is exact."""

import random
import time
from fractions import Fraction

from vincat.bijections import (
    alpha,
    alpha_inv,
    beta,
    beta_inv,
    dyck_to_word,
    in_beta_domain,
    is_smooth,
    omega_to_avoider,
    transfer_runs,
    transfer_runs_back,
    word_to_dyck,
)
from vincat.cli import SERIES_ALIASES, available_methods, count_one
from vincat.counting import base, count_by_recurrence, refined_table
from vincat.generate import (
    FamilySpec,
    count_avoiders_many,
    gen_catalan,
    gen_family,
    gen_marked_increasing,
    refined_counts,
)
from vincat.genfun import aux_series, kernel_root, series_for
from vincat.golden import GOLDEN_COUNTS, GOLDEN_PATTERNS, SERIES_21_1
from vincat.series import Series, divide, one, poly, sqrt, t
from vincat.words import CatalanWord, contains, parse_pattern, pattern_reverse_runs


def report(number, label, failures):
    verdict = "PASS" if not failures else "FAIL"
    detail = "" if not failures else " (%d problems; first: %s)" % (
        len(failures), failures[0],
    )
    print("criterion %d: %s - %s%s" % (number, verdict, label, detail))
    assert not failures, failures[:5]


def test_criterion_1_reference_tables():
    failures = []
    start = time.perf_counter()
    for n in range(1, 11):
        got = count_avoiders_many(n, GOLDEN_PATTERNS)
        for pattern, value in zip(GOLDEN_PATTERNS, got):
            want = GOLDEN_COUNTS[pattern][n - 1]
            if value != want:
                failures.append("%s n=%d got %d want %d" % (pattern, n, value, want))
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        failures.append("sweep took %.1fs, limit 120s" % elapsed)
    report(1, "oracle reproduces all reference rows for n <= 10 "
              "(%.1fs)" % elapsed, failures)


def test_criterion_2_methods_agree(oracle12):
    failures = []
    multi = 0
    for pattern in GOLDEN_PATTERNS:
        fast = [m for m in available_methods(pattern) if m != "oracle"]
        if len(fast) >= 2:
            multi += 1
        for method in fast:
            if method == "genfun":
                key = SERIES_ALIASES.get(pattern, pattern)
                series = series_for(key, order=12)
                got = [int(series.coefficient(n)) for n in range(1, 13)]
            else:
                got = [count_one(pattern, n, method) for n in range(1, 13)]
            if tuple(got) != oracle12[pattern]:
                failures.append("%s via %s: %r" % (pattern, method, got))
    if multi < 5:
        failures.append("only %d patterns offer two fast methods" % multi)
    report(2, "every closed form, recurrence, and generating function "
              "matches the oracle for n <= 12", failures)


def test_criterion_3_hardest_series():
    failures = []
    coeffs = series_for("21-1", order=20).integer_coefficients()
    if coeffs[0] != 1 or coeffs[1:] != list(SERIES_21_1):
        failures.append("series coefficients %r" % coeffs)
    for n in range(1, 21):
        got = count_by_recurrence("21-1", n)
        if got != SERIES_21_1[n - 1]:
            failures.append("recurrence n=%d got %d" % (n, got))
    report(3, "21-1 generating function and recurrence give the printed "
              "twenty coefficients through 237152119", failures)


def test_criterion_4_refined_tables():
    failures = []

    def check_layer(pattern, layer, want_fn, max_n=10):
        table = refined_table(pattern, max_n)
        for n in range(1, max_n + 1):
            got = table.layer_at(layer, n)
            want = want_fn(n)
            if got != want:
                failures.append("%s layer %s n=%d" % (pattern, layer, n))

    check_layer("2-21", "u",
                lambda n: refined_counts(n, "2-21", ("max_letter", "last_letter")))
    check_layer("3-21", "v",
                lambda n: refined_counts(n, "3-21", ("max_letter", "last_letter")))
    check_layer("21-2", "u",
                lambda n: refined_counts(n, "21-2", ("last_letter",)))
    check_layer("21-3", "v",
                lambda n: refined_counts(n, "21-3", ("last_letter",)))

    def want_w(n):
        full = refined_counts(n, "31-2", ("ones_count", "one_runs"))
        return {k: v for k, v in full.items() if k != (n, 1)}

    check_layer("31-2", "w", want_w)
    check_layer("11-2", "m",
                lambda n: refined_counts(n, "11", ("last_letter",)))

    def want_r(n):
        full = refined_counts(n, "21-1", ("max_letter", "smallest_descent_bottom"))
        return {k: v for k, v in full.items() if k[1] is not None}

    check_layer("21-1", "r", want_r)
    check_layer("21-1", "r_total",
                lambda n: refined_counts(n, "21-1", ("max_letter",)))

    table = refined_table("21-1", 10)
    if table.get("r", 6, 4, 2) != 7:
        failures.append("r(6,4,2) = %d, want 7" % table.get("r", 6, 4, 2))

    tbl = refined_table("11-2", 10)
    for bound, top in ((1, 10), (2, 10), (3, 10), (4, 10), (5, 7), (6, 7)):
        if tbl.get("p_total", 0, bound) != 1:
            failures.append("p_total(0,%d) != 1" % bound)
        for n in range(1, top + 1):
            by_first = {}
            for word in gen_family(n, FamilySpec(alphabet_bound=bound, avoid="11-2")):
                by_first[word[0]] = by_first.get(word[0], 0) + 1
            for b in range(1, bound + 1):
                if tbl.get("p", n, bound, b) != by_first.get(b, 0):
                    failures.append("p(%d,%d,%d)" % (n, bound, b))
            if tbl.get("p_total", n, bound) != sum(by_first.values()):
                failures.append("p_total(%d,%d)" % (n, bound))

    report(4, "all refined recurrence layers equal exhaustive refined "
              "counts for n <= 10", failures)


def test_criterion_5_bijections():
    failures = []
    for n in range(1, 11):
        words = [CatalanWord(w) for w in gen_catalan(n)]
        paths = set()
        for w in words:
            path = word_to_dyck(w)
            if dyck_to_word(path) != w:
                failures.append("dyck round trip %s" % w)
            paths.add(path.steps)
        if len(paths) != base("catalan", n):
            failures.append("dyck image size at n=%d" % n)

        sources = [w for w in words if not contains(w, "11-1")]
        targets = {w for w in words if not contains(w, "1-11")}
        images = set()
        for w in sources:
            img = transfer_runs(w)
            if transfer_runs_back(img) != w:
                failures.append("transfer round trip %s" % w)
            if max(img) != max(w) or img[-1] != w[-1]:
                failures.append("transfer statistics %s" % w)
            images.add(img)
        if images != targets:
            failures.append("transfer image at n=%d" % n)

        marked = list(gen_marked_increasing(n))
        if len(marked) != base("fibonacci", 2 * n - 1):
            failures.append("marked count at n=%d" % n)
        omega_images = {omega_to_avoider(m) for m in marked}
        if len(omega_images) != len(marked):
            failures.append("omega not injective at n=%d" % n)
        if omega_images != {w for w in words if not contains(w, "1-32")}:
            failures.append("omega image at n=%d" % n)

        for w in words:
            if is_smooth(w) != (not contains(w, "2-31")):
                failures.append("smoothness at %s" % w)

    for n in range(1, 9):
        a_images = set()
        a_domain = 0
        b_images = set()
        b_domain = 0
        for w in gen_catalan(n):
            path = word_to_dyck(w)
            if path.avoids_udu():
                a_domain += 1
                img = alpha(path)
                if alpha_inv(img) != path:
                    failures.append("alpha round trip %s" % path)
                a_images.add(img.steps)
            if in_beta_domain(path):
                b_domain += 1
                img = beta(path)
                if beta_inv(img) != path:
                    failures.append("beta round trip %s" % path)
                b_images.add(img.steps)
        if a_domain != base("motzkin", n - 1) or len(a_images) != a_domain:
            failures.append("alpha domain at n=%d" % n)
        if b_domain != base("motzkin", n) or len(b_images) != b_domain:
            failures.append("beta domain at n=%d" % n)

    report(5, "all structural maps round-trip exhaustively with the "
              "advertised domains and statistics", failures)


def test_criterion_6_series_algebra():
    failures = []
    rng = random.Random(1206)
    for case in range(50):
        coeffs = [1] + [
            Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(32)
        ]
        f = Series(coeffs)
        if sqrt(f) * sqrt(f) != f:
            failures.append("sqrt case %d" % case)
        g = Series([rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(32)])
        if divide(f * g, g) != f:
            failures.append("divide case %d" % case)

    closed = aux_series("MotzkinGF", order=30)
    for n in range(31):
        if closed.coefficient(n) != base("motzkin", n):
            failures.append("motzkin coefficient %d" % n)

    T = aux_series("T", order=24)
    if t(24) * T * T != poly([1, 1], 24) * (T - one(24)):
        failures.append("head identity broken")

    for pattern in ("21-2", "21-3"):
        if not kernel_root(pattern, order=24).is_zero():
            failures.append("kernel root %s" % pattern)

    report(6, "series arithmetic round-trips on 50 random order-32 "
              "inputs and the radical identities hold through order 24", failures)


def test_criterion_7_equivalences():
    failures = []
    classical = ("1-12", "1-21", "1-23", "2-12", "3-12", "12-1", "12-2", "12-3", "23-1")
    for text in classical:
        pattern = parse_pattern(text)
        dashed = "-".join(str(x) for x in pattern.letters)
        for n in range(1, 11):
            lhs = sum(1 for w in gen_catalan(n) if not contains(w, pattern))
            rhs = sum(1 for w in gen_catalan(n) if not contains(w, dashed))
            if lhs != rhs:
                failures.append("%s vs %s at n=%d" % (text, dashed, n))

    for n in range(1, 11):
        lhs = refined_counts(n, "11-1", ("max_letter", "last_letter"))
        rhs = refined_counts(n, "1-11", ("max_letter", "last_letter"))
        if lhs != rhs:
            failures.append("11-1 refinement at n=%d" % n)

    for text in ("1-11", "11-1", "1-1-1"):
        pattern = parse_pattern(text)
        flipped = pattern_reverse_runs(pattern)
        for n in range(1, 11):
            lhs = sum(1 for w in gen_catalan(n) if not contains(w, pattern))
            rhs = sum(1 for w in gen_catalan(n) if not contains(w, flipped))
            if lhs != rhs:
                failures.append("%s vs %s at n=%d" % (text, flipped, n))

    report(7, "dashing out each adjacency and reversing run lengths "
              "both preserve the counts for n <= 10", failures)
