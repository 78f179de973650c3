import pytest

from planardirac.qnum import PhysicsConfig, QuantumState, enumerate_states


@pytest.fixture
def config():
    return PhysicsConfig(Z=1.0)


@pytest.fixture
def config_z10():
    return PhysicsConfig(Z=10.0)


def channels(n_max):
    """One state per (n, kappa) channel with m_kappa = +|kappa|."""
    seen = set()
    out = []
    for st in enumerate_states(n_max):
        key = (st.n, st.two_kappa)
        if key in seen:
            continue
        seen.add(key)
        out.append(QuantumState(st.n, st.two_kappa, abs(st.two_kappa)))
    return out
