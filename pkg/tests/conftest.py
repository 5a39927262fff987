import pytest

from abelian_tm.morphisms import fixed_point_prefix, tm_morphism
from abelian_tm.words import factors, letter_glyph


def digit_sum_tm(k, length):
    """Generalized Thue-Morse prefix from base-k digit sums mod k.

    Independent of the morphism code: t_n = s_k(n) mod k.
    """
    out = []
    for n in range(length):
        s, x = 0, n
        while x:
            s += x % k
            x //= k
        out.append(letter_glyph(s % k))
    return "".join(out)


def scan_factor_set(m, n, length):
    return factors(fixed_point_prefix(m, length), n)


@pytest.fixture(params=[2, 3, 4, 5])
def tm(request):
    return tm_morphism(request.param)


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _CRITERIA[value] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_CRITERIA[label]}  {label}")
