import pathlib
import sys

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

import pytest

from polycrt import PrimeField, analyze_pair, parse_polynomial


@pytest.fixture(scope="session")
def f2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def f7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def f13():
    return PrimeField(13)


def poly(field, text):
    return parse_polynomial(text, field)


# Reference instance over F_2 used for golden tests throughout:
# m1 = (x^2+1)(x^6+x^3+1), m2 = (x^2+1)(x^9+x^7+x+1).
REF_M1 = "x^8+x^6+x^5+x^3+x^2+1"
REF_M2 = "x^11+x^7+x^3+x^2+x+1"
REF_A = "x^15+x^11+x^7+x^6+x+1"


@pytest.fixture(scope="session")
def reference_pair(f2):
    m1 = poly(f2, "x^2+1") * poly(f2, "x^6+x^3+1")
    m2 = poly(f2, "x^2+1") * poly(f2, "x^9+x^7+x+1")
    return analyze_pair(m1, m2)


# Small pair with one level: m1 = x^2(x+1), m2 = x^2(x^2+x+1);
# gcd x^2, lcm degree 5, K = 0, level 1 bounds: tau < 2, deg(a) < 5.
@pytest.fixture(scope="session")
def micro_pair(f2):
    m = poly(f2, "x^2")
    return analyze_pair(m * poly(f2, "x+1"), m * poly(f2, "x^2+x+1"))
