import hypothesis
import pytest

from jrjs_sim.model import SystemParams, dbm_to_mw

hypothesis.settings.register_profile(
    "suite", derandomize=True, max_examples=60, deadline=None
)
hypothesis.settings.load_profile("suite")


@pytest.fixture
def params14() -> SystemParams:
    """The workhorse operating point: 10 nodes, 14 dBm, target 3 bit/s/Hz."""
    return SystemParams(
        m=10,
        p_total=dbm_to_mw(14.0),
        noise=1.0,
        eps1=1.0,
        eps2=1.0,
        eps_sd=0.05,
        rd=3.0,
        seed=1234,
    )
