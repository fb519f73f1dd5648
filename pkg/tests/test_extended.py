"""Long computations, skipped unless --extended or RINGCOVER_EXTENDED=1."""
import pytest

from ringcover.constructors import construct
from ringcover.cover import is_cover, sigma_exact, verify_case1_sigma
from ringcover.formulas import sigma_field_power

pytestmark = pytest.mark.extended


@pytest.mark.parametrize("q,t", [(8, 3), (5, 5)])
def test_large_field_powers(q, t):
    R = construct("Prod(" + ",".join([f"F({q})"] * t) + ")")
    rep = sigma_exact(R, timeout=600, bound=4096)
    assert rep.exact and rep.sigma == sigma_field_power(q, t).sigma
    assert is_cover(R, rep.cover)


def test_a4_group_algebra_case1():
    R = construct("Trunc(GroupAlg(F(2),A4),2)")
    res = verify_case1_sigma(R, timeout=600, bound=1024)
    assert res.sigma == res.prediction == 5
    assert is_cover(R, res.cover)
