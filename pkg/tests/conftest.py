import sympy
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_sympy(f, symbols):
    """Poly -> sympy expression with integer coefficients."""
    return sum(int(c) * sympy.prod([x ** e for x, e in zip(symbols, a)])
               for a, c in f.exponent_dict().items())


def from_sympy_poly(expr, symbols, p):
    return {m: int(c) % p for m, c in sympy.Poly(expr, *symbols, modulus=p).terms() if int(c) % p}


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[n]
        terminalreporter.write_line("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", title))
