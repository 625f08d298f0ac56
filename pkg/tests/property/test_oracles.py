"""Randomized checks of the tracked-prime oracles on a mixed tower."""

import pytest
from hypothesis import assume, given, seed
from hypothesis import strategies as st

from ctower.ring.elements import PrimeId, is_zero
from ctower.sampling import brute_force_inverse
from tests.conftest import SEED
from tests.strategies import elements, mixed_tower

pytestmark = pytest.mark.property

TOWER = mixed_tower()
REGISTRY = TOWER.registry

# (level, live tracked prime) pairs, p_1 counted through its associate x:1:0 at level 3
LIVE = [
    (level, prime.id)
    for level in range(len(TOWER))
    for prime in REGISTRY.live_primes(level)
]


def test_expected_live_primes():
    assert (2, PrimeId.gen_x(1, 0)) in LIVE
    assert (2, PrimeId.gen_y(1, 0)) in LIVE
    assert (3, PrimeId.base(1)) in LIVE
    assert (1, PrimeId.base(0)) not in LIVE
    assert (3, PrimeId.gen_y(1, 0)) not in LIVE


@st.composite
def live_case(draw, count=2):
    level, pid = draw(st.sampled_from(LIVE))
    return (level, TOWER.prime(pid), *[draw(elements(TOWER, level)) for _ in range(count)])


@seed(SEED)
@given(case=live_case())
def test_oracle_is_prime(case):
    _, p, s, t = case
    if TOWER.divides(p, TOWER.mul(s, t)):
        assert TOWER.divides(p, s) or TOWER.divides(p, t)


@seed(SEED)
@given(case=live_case(1))
def test_oracle_agrees_with_exact_division(case):
    level, p, s = case
    p_element = REGISTRY.element(p.id, level)
    multiple = TOWER.mul(p_element, s)
    assert TOWER.divides(p, multiple)
    assert TOWER.equals(TOWER.exact_div(p, multiple), s)
    if TOWER.divides(p, s):
        assert TOWER.equals(TOWER.mul(p_element, TOWER.exact_div(p, s)), s)


@seed(SEED)
@given(case=live_case(2), k=st.integers(1, 3))
def test_prime_power_divides_products(case, k):
    level, p, a, c = case
    assume(not is_zero(a) and not is_zero(c))
    assume(not TOWER.divides(p, a))
    b = TOWER.mul(TOWER.power(REGISTRY.element(p.id, level), k), c)
    assert TOWER.prime_power_divides(p, k, b)
    product = TOWER.mul(a, b)
    assert TOWER.prime_power_divides(p, k, product)
    assert TOWER.equals(REGISTRY.exact_div_power(p, k, product), TOWER.mul(a, c))


@seed(SEED)
@given(e=elements(TOWER, 1, bound=9))
def test_units_of_the_localization_match_brute_force(e):
    assume(not is_zero(e))
    assert TOWER.is_unit(e) == (brute_force_inverse(TOWER, e, bound=500) is not None)


@seed(SEED)
@given(data=st.data(), level=st.integers(0, TOWER.top_index - 1))
def test_units_persist(data, level):
    e = data.draw(elements(TOWER, level))
    if TOWER.is_unit(e):
        assert TOWER.is_unit(TOWER.lift(e, TOWER.top_index))
