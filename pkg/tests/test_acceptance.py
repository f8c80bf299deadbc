"""Acceptance criteria, one check per criterion.

Each check returns a list of failure descriptions (empty means pass). Under
pytest every criterion prints one ``criterion N ... PASS|FAIL`` line; running
``python3 tests/test_acceptance.py`` prints the same lines without pytest.
Expected values below are transcribed by hand, independently of the tables in
the package.
"""

import io
import random
import subprocess
import sys
import tempfile
from contextlib import redirect_stderr
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    ext_order,
    hom_order,
    leibniz_det,
    partition_count,
    tensor_order,
    tor_order,
)
from stringtower.abgroup import (  # noqa: E402
    FgAbGroup,
    IntegerMatrix,
    Z,
    cokernel,
    direct_sum,
    ext,
    hom,
    parse_group,
    smith_normal_form,
    tensor,
    tor,
)
from stringtower.cli import run  # noqa: E402
from stringtower.cohomology import (  # noqa: E402
    bso_homology,
    bspin_homology,
    betti_bspin,
    cohomology,
    h2_bso_indefinite,
    product_cohomology,
    product_cohomology_parts,
)
from stringtower.homotopy import GroupDescriptor, pi, pi1_spin_indefinite  # noqa: E402
from stringtower.lift import Status, evaluate_lift, evaluate_twisted, parse_profile  # noqa: E402
from stringtower.tower import build_tower, green_schwarz_spec  # noqa: E402

# Rows pi_0..pi_7, columns O(1)..O(9); blanks of the printed table filled with
# the stabilized value to their left.
O_TABLE = [
    "Z/2 Z/2 Z/2 Z/2 Z/2 Z/2 Z/2 Z/2 Z/2",
    "0 Z Z/2 Z/2 Z/2 Z/2 Z/2 Z/2 Z/2",
    "0 0 0 0 0 0 0 0 0",
    "0 0 Z Z^2 Z Z Z Z Z",
    "0 0 Z/2 Z/2xZ/2 Z/2 0 0 0 0",
    "0 0 Z/2 Z/2xZ/2 Z/2 Z 0 0 0",
    "0 0 Z/12 Z/12xZ/12 0 0 0 0 0",
    "0 0 Z/2 Z/2xZ/2 Z Z Z Z^2 Z",
]

# Rows pi_1..pi_7, columns U(1)..U(6).
U_TABLE = [
    "Z Z Z Z Z Z",
    "0 0 0 0 0 0",
    "0 Z Z Z Z Z",
    "0 Z/2 0 0 0 0",
    "0 Z/2 Z Z Z Z",
    "0 Z/12 Z/6 0 0 0",
    "0 Z/2 0 Z Z Z",
]


def check_homotopy_table():
    failures, count = [], 0
    for i, row in enumerate(O_TABLE):
        for n, cell in enumerate(row.split(), start=1):
            count += 1
            got = pi(GroupDescriptor("O", n), i)
            if got != parse_group(cell):
                failures.append(f"pi_{i}(O({n})) = {got}, expected {cell}")
    for i, row in enumerate(U_TABLE, start=1):
        for n, cell in enumerate(row.split(), start=1):
            count += 1
            got = pi(GroupDescriptor("U", n), i)
            if got != parse_group(cell):
                failures.append(f"pi_{i}(U({n})) = {got}, expected {cell}")
    if count != 72 + 42:
        failures.append(f"covered {count} entries")
    so7 = GroupDescriptor("SO", 7)
    if (pi(so7, 6), pi(so7, 7)) != (parse_group("0"), Z):
        failures.append("pi_6/pi_7 of SO(7)")
    return failures


def expected_pi1_spin(p, q):
    p, q = max(p, q), min(p, q)
    if (p, q) in ((1, 1), (1, 0)):
        return "0"
    if p > 2 and q in (0, 1):
        return "0"
    if p == 2 and q in (0, 1):
        return "Z"
    if (p, q) == (2, 2):
        return "Z^2"
    if p > 2 and q == 2:
        return "Z"
    return "Z/2"


def check_pi1_spin():
    failures = []
    for p in range(1, 7):
        for q in range(0, p + 1):
            want = parse_group(expected_pi1_spin(p, q))
            for a, b in ((p, q), (q, p)):
                got = pi1_spin_indefinite(a, b)
                if got != want:
                    failures.append(f"pi_1(Spin({a},{b})) = {got}, expected {want}")
    return failures


def check_functor_oracles():
    failures, pairs = [], 0
    cases = [(tensor, tensor_order), (hom, hom_order), (ext, ext_order), (tor, tor_order)]
    for m in range(1, 13):
        for n in range(1, 13):
            pairs += 1
            a, b = FgAbGroup.of(m), FgAbGroup.of(n)
            for closed, oracle in cases:
                got = closed(a, b)
                if got.rank or len(got.invariant_factors) > 1 or got.order != oracle(m, n):
                    failures.append(f"{closed.__name__}(Z/{m}, Z/{n}) = {got}")
    if pairs != 144:
        failures.append(f"covered {pairs} pairs")
    return failures


def _is_smith(d):
    diag = d.diagonal_entries()
    if any(d[i, j] for i in range(d.rows) for j in range(d.cols) if i != j):
        return False
    if any(x < 0 for x in diag):
        return False
    return all((b % a == 0) if a else b == 0 for a, b in zip(diag, diag[1:]))


def check_snf_suite():
    rng = random.Random(20241)
    failures = []
    for trial in range(1000):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        data = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        m = IntegerMatrix.from_rows(data)
        d, u, v = smith_normal_form(m)
        if u @ m @ v != d:
            failures.append(f"trial {trial}: U M V != D")
        if abs(leibniz_det(u.to_rows())) != 1 or abs(leibniz_det(v.to_rows())) != 1:
            failures.append(f"trial {trial}: transform not unimodular")
        if not _is_smith(d):
            failures.append(f"trial {trial}: not a divisibility chain")
        if rows == cols:
            det = leibniz_det(data)
            if det:
                c = cokernel(m)
                if c.rank or c.order != abs(det):
                    failures.append(f"trial {trial}: cokernel {c} vs |det| {abs(det)}")
    return failures


def check_pipeline():
    failures = []
    for p in range(2, 9):
        for q in range(2, 9):
            got = product_cohomology(bspin_homology(p), bspin_homology(q), 4)
            if got != FgAbGroup(2):
                failures.append(f"H^4(BSpin({p}) x BSpin({q})) = {got}, expected Z^2")
    for q in range(2, 9):
        hom_part, _ = product_cohomology_parts(bspin_homology(1), bspin_homology(q), 4)
        if hom_part != Z:
            failures.append(f"Hom part of H^4(BSpin(1) x BSpin({q})) = {hom_part}, expected Z")
    single_h2 = {2: Z}
    for p in range(2, 9):
        for q in range(2, 9):
            got = h2_bso_indefinite(p, q)
            want = direct_sum(single_h2.get(p, FgAbGroup(0)), single_h2.get(q, FgAbGroup(0)))
            factors = direct_sum(cohomology(bso_homology(p), 2), cohomology(bso_homology(q), 2))
            if got != want or factors != want:
                failures.append(f"H^2 splitting at ({p},{q}): {got}, expected {want}")
    return failures


def q_series_degrees(n):
    # Q_{2m+1} = prod_{j<=m} (1-t^{4j})^-1 ; Q_{2m} = prod_{j<m} (1-t^{4j})^-1 (1-t^{2m})^-1
    m, odd = divmod(n, 2)
    if odd:
        return [4 * j for j in range(1, m + 1)]
    return [4 * j for j in range(1, m)] + [2 * m]


def check_betti():
    failures = []
    for n in range(3, 13):
        got = betti_bspin(n, 4)
        if got != 1:
            failures.append(f"q_{{{n},4}} = {got}, expected 1")
    for n in range(3, 10):
        degrees = q_series_degrees(n)
        for k in range(0, 25):
            if betti_bspin(n, k) != partition_count(degrees, k):
                failures.append(f"q_{{{n},{k}}} disagrees with the partition oracle")
    return failures


def expected_factor_classes(n):
    spin = [] if n <= 1 else [("sqrt_p1", "Z")] if n == 2 else [("w2", "Z/2")]
    string = [] if n <= 2 else [("half_p1", "Z")] * (2 if n == 4 else 1)
    return [("w1", "Z/2")], spin, string


TOWER_CASES = [(1, 3), (1, 6), (2, 2), (2, 3), (2, 7), (3, 3), (4, 5), (4, 8), (4, 4), (5, 5), (6, 9)]


def check_tower_matrix():
    failures = []
    for p, q in TOWER_CASES:
        tower = build_tower(GroupDescriptor("O", p, q))
        per_factor = [expected_factor_classes(p), expected_factor_classes(q)]
        for stage, degree in zip(tower.stages, (1, 2, 4)):
            want = per_factor[0][stage.index] + per_factor[1][stage.index]
            got = [(c.name, str(c.coefficient)) for c in stage.obstructions]
            want_coeff = direct_sum(*(parse_group(g) for _, g in want)) if want else FgAbGroup(0)
            if got != want or stage.coefficient != want_coeff:
                failures.append(f"O({p},{q}) stage {stage.index}: {got}")
            if any(c.degree != degree for c in stage.obstructions):
                failures.append(f"O({p},{q}) stage {stage.index}: wrong degree")
        if len(tower.stages) != 3:
            failures.append(f"O({p},{q}): {len(tower.stages)} stages")
    if build_tower(GroupDescriptor("O", 4, 5)).stages[2].coefficient != FgAbGroup(3):
        failures.append("O(4,5) String coefficient")
    if build_tower(GroupDescriptor("O", 4, 4)).stages[2].coefficient != FgAbGroup(4):
        failures.append("O(4,4) String coefficient")
    return failures


O33_ZERO = """space M
class w1.1 degree 1 coeff Z/2 value zero
class w1.2 degree 1 coeff Z/2 value zero
class w2.1 degree 2 coeff Z/2 value zero
class w2.2 degree 2 coeff Z/2 value zero
class half_p1.1 degree 4 coeff Z value zero
class half_p1.2 degree 4 coeff Z value zero
"""


def _gs(left, right):
    return parse_profile(
        f"space M\nclass half_p1.1 degree 4 coeff Z value ({left})\nclass c2.1 degree 4 coeff Z value ({right})\n")


def check_lift_verdicts():
    failures = []
    o33 = build_tower(GroupDescriptor("O", 3, 3))
    if evaluate_lift(parse_profile(O33_ZERO), o33, 2).status is not Status.LIFTS:
        failures.append("all-zero O(3,3) profile does not lift to String")
    blocked = O33_ZERO.replace("w2.1 degree 2 coeff Z/2 value zero", "w2.1 degree 2 coeff Z/2 value nonzero")
    v = evaluate_lift(parse_profile(blocked), o33)
    if (v.status, v.stage_index, v.class_ids) != (Status.OBSTRUCTED, 1, ("w2.1",)):
        failures.append(f"nonzero w2.1 gave {v}")
    missing = "\n".join(line for line in O33_ZERO.splitlines() if "half_p1.2" not in line)
    v = evaluate_lift(parse_profile(missing), o33)
    if (v.status, v.stage_index) != (Status.UNDETERMINED, 2):
        failures.append(f"missing half_p1.2 gave {v}")
    gs = green_schwarz_spec()
    for a in range(-3, 4):
        for b in range(-3, 4):
            v = evaluate_twisted(_gs(a, b), gs)
            if a == b and v.status is not Status.LIFTS:
                failures.append(f"GS ({a}),({b}) gave {v}")
            if a != b and (v.status is not Status.OBSTRUCTED or v.difference != Z.element([a - b])):
                failures.append(f"GS ({a}),({b}) gave {v}")
    return failures


def _cli_corpus(tmp):
    zero = tmp / "zero.prof"
    zero.write_text(O33_ZERO)
    bad = tmp / "bad.prof"
    bad.write_text(O33_ZERO.replace("w2.1 degree 2 coeff Z/2 value zero", "w2.1 degree 2 coeff Z/2 value (1)"))
    holes = tmp / "holes.prof"
    holes.write_text("space M\nclass w1.1 degree 1 coeff Z/2 value unknown\n")
    gs = tmp / "gs.prof"
    gs.write_text("space M\nclass half_p1.1 degree 4 coeff Z value (3)\nclass c2.1 degree 4 coeff Z value (5)\n")
    return [
        (["pi", "O(3,4)", "3"], 0),
        (["pi", "Spin(2,2)", "1"], 0),
        (["--unicode", "pi", "U(2)", "6"], 0),
        (["pi", "O(3)", "9"], 2),
        (["pi", "Q(3)", "1"], 1),
        (["tower", "O(4,5)"], 0),
        (["tower", "U(1,4)"], 0),
        (["tower", "Spin(3,3)"], 1),
        (["homology", "BSpin(1)", "3"], 0),
        (["homology", "BSO(3)", "7"], 2),
        (["betti", "BSpin(5)", "4"], 0),
        (["betti", "BSpin(4)", "4"], 0),
        (["h4", "BSpin(4)"], 0),
        (["h4", "BSpin(2)"], 2),
        (["ring", "BSOQ(4)"], 0),
        (["ring", "BSp(2)"], 0),
        (["abgroup", "tensor", "Z/4", "Z/6"], 0),
        (["abgroup", "ext", "Z/2", "Z"], 0),
        (["abgroup", "snf", "2 4; 6 8"], 0),
        (["abgroup", "hom", "Z/0", "Z"], 1),
        (["lift", "--profile", str(zero), "--target", "String", "O(3,3)"], 0),
        (["lift", "--profile", str(bad), "O(3,3)"], 3),
        (["lift", "--profile", str(holes), "O(3,3)"], 2),
        (["lift", "--profile", str(tmp / "absent.prof"), "O(3,3)"], 1),
        (["twisted", "--profile", str(gs), "--kind", "GS"], 3),
        (["twisted", "--profile", str(zero), "--kind", "Spin", "O(3,3)"], 0),
        (["twisted", "--profile", str(zero), "--kind", "Spin", "O(2,5)"], 1),
    ]


def check_cli_determinism():
    failures = []
    with tempfile.TemporaryDirectory() as tmpdir:
        corpus = _cli_corpus(Path(tmpdir))
        verbs = {next(a for a in argv if not a.startswith("--")) for argv, _ in corpus}
        if len(corpus) < 20 or len(verbs) != 9 or {c for _, c in corpus} != {0, 1, 2, 3}:
            failures.append("corpus does not cover every verb and exit code")
        for argv, code in corpus:
            with redirect_stderr(io.StringIO()) as err:
                first = run(argv)
                second = run(argv)
            expected_err_lines = 2 if code == 1 else 0
            if len(err.getvalue().splitlines()) != expected_err_lines:
                failures.append(f"{' '.join(argv)}: unexpected stderr {err.getvalue()!r}")
            proc = subprocess.run([sys.executable, "-m", "stringtower", *argv], capture_output=True)
            if first != second or proc.stdout != first[1].encode() or proc.returncode != first[0]:
                failures.append(f"{' '.join(argv)}: output differs between runs")
            if first[0] != code:
                failures.append(f"{' '.join(argv)}: exit {first[0]}, expected {code}")
    return failures


CRITERIA = [
    (1, "homotopy golden table", check_homotopy_table),
    (2, "pi_1(Spin(p,q)) case matrix", check_pi1_spin),
    (3, "abelian-group oracle equivalence", check_functor_oracles),
    (4, "SNF property suite", check_snf_suite),
    (5, "Kunneth/UCT pipeline", check_pipeline),
    (6, "Betti series", check_betti),
    (7, "tower case matrix", check_tower_matrix),
    (8, "lift engine verdicts", check_lift_verdicts),
    (9, "CLI determinism", check_cli_determinism),
]


def report_line(number, title, failures):
    if not failures:
        return f"criterion {number} ({title}): PASS"
    shown = "; ".join(failures[:3]) + (f"; ... {len(failures)} total" if len(failures) > 3 else "")
    return f"criterion {number} ({title}): FAIL: {shown}"


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    failures = check()
    with capsys.disabled():
        print("\n" + report_line(number, title, failures))
    assert not failures, report_line(number, title, failures)


if __name__ == "__main__":
    results = [(n, t, check()) for n, t, check in CRITERIA]
    for n, t, failures in results:
        print(report_line(n, t, failures))
    sys.exit(1 if any(f for _, _, f in results) else 0)
