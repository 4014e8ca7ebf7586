from fractions import Fraction

from hypothesis import strategies as st

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=7))
nonzero_rationals = rationals.filter(lambda q: q != 0)
coeff_lists = st.lists(rationals, max_size=6)

# parameter grid shared by the cross-validation tests
U_GRID = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(-3, 5))
LAMBDA_GRID = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-2, 3))


def pytest_addoption(parser):
    parser.addoption("--regen-golden", action="store_true",
                     help="rewrite tests/golden/*.out from the current CLI output")


ACCEPTANCE_LINES = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        doc = report.user_properties and dict(report.user_properties).get("criterion")
        if doc:
            status = "PASS" if report.passed else "FAIL"
            ACCEPTANCE_LINES.append(f"[{status}] {doc}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
