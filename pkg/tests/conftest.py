from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from etalecurves.exact_arith import UniPoly

settings.register_profile(
    "repo", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("repo")


def rationals(max_num=20, max_den=6):
    return st.builds(lambda a, b: Fraction(a, b),
                     st.integers(-max_num, max_num), st.integers(1, max_den))


def polys(min_degree=0, max_degree=6, monic=False, coeffs=None):
    coeffs = coeffs or rationals()

    @st.composite
    def build(draw):
        deg = draw(st.integers(min_degree, max_degree))
        cs = draw(st.lists(coeffs, min_size=deg + 1, max_size=deg + 1))
        if monic:
            cs[-1] = 1
        elif deg >= 0 and cs[-1] == 0:
            cs[-1] = 1
        return UniPoly(cs)

    return build()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
