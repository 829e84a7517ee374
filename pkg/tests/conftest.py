from fractions import Fraction

from hypothesis import settings, strategies as st

from lcprop import ExactSeq

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

small_fracs = st.fractions(min_value=0, max_value=10, max_denominator=12)
pos_fracs = st.fractions(min_value=Fraction(1, 12), max_value=10, max_denominator=12)
params = st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50)


@st.composite
def lc_seqs(draw, max_len=8):
    """Log-concave, no internal zeros: positive start, non-increasing ratios."""
    start = draw(pos_fracs)
    ratios = sorted(draw(st.lists(pos_fracs, max_size=max_len - 1)), reverse=True)
    vals = [start]
    for r in ratios:
        vals.append(vals[-1] * r)
    if draw(st.booleans()) and draw(st.integers(0, 9)) == 0:
        vals.insert(0, Fraction(0))
    return ExactSeq(vals)


@st.composite
def pmfs(draw, max_len=8):
    """Finite mass function with mass at 0."""
    head = draw(pos_fracs)
    rest = draw(st.lists(small_fracs, max_size=max_len - 1))
    s = ExactSeq([head] + rest)
    return ExactSeq(v / s.total() for v in s.values)


seqs = st.lists(small_fracs, min_size=1, max_size=8).map(ExactSeq)


# per-criterion lines recorded by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
