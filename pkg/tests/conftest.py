from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def rationals(lo: Fraction, hi: Fraction, max_den: int = 40):
    """Rationals in [lo, hi] with small denominators."""
    lo, hi = Fraction(lo), Fraction(hi)

    def build(args):
        num, den = args
        return lo + (hi - lo) * Fraction(num, den)

    return st.integers(1, max_den).flatmap(
        lambda den: st.tuples(st.integers(0, den), st.just(den))).map(build)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
