import numpy as np
import pytest

from jrjs_sim import fcsi_pa, oracle, pcsi_pa
from jrjs_sim.exceptions import InfeasibleRate
from jrjs_sim.fcsi_pa import FcsiCandidateInput
from jrjs_sim.pcsi_pa import PcsiCandidateInput, allocate, objective

P14 = 10.0 ** 1.4


def _inp(g_sr, g_rd, eps1=1.0, eps2=1.0, p=P14, noise=1.0, rd=3.0):
    return PcsiCandidateInput(
        h_sr_sq=g_sr, h_rd_sq=g_rd, eps1=eps1, eps2=eps2, p_total=p, noise=noise, rd=rd
    )


def _random_feasible(rng, n, rd=3.0, p=P14):
    out = []
    while len(out) < n:
        g_sr, g_rd = rng.exponential(1.0, 2)
        eps1, eps2 = rng.uniform(0.3, 2.0, 2)
        inp = _inp(g_sr, g_rd, eps1, eps2, p=p, rd=rd)
        if pcsi_pa.feasible(inp):
            out.append(inp)
    return out


def test_mean_field_reduces_to_full_knowledge_coefficients():
    """With the wiretap magnitudes pinned at their means (h_se_sq = eps1,
    h_re_sq = eps2, lam_e = eps2) the two allocators describe the same
    problem, so the line coefficients and the solutions must agree exactly."""
    rng = np.random.default_rng(13)
    for _ in range(40):
        g_sr, g_rd = rng.exponential(1.0, 2)
        eps1, eps2 = rng.uniform(0.3, 2.0, 2)
        p_inp = _inp(g_sr, g_rd, eps1, eps2)
        f_inp = FcsiCandidateInput(
            h_sr_sq=g_sr,
            h_rd_sq=g_rd,
            h_se_sq=eps1,
            h_re_sq=eps2,
            lam_e=eps2,
            p_total=P14,
            noise=1.0,
            rd=3.0,
        )
        for line_p, line_f in (
            (pcsi_pa._source_line(p_inp, eps2), fcsi_pa._source_line(f_inp, eps2)),
            (pcsi_pa._relay_line(p_inp, eps2), fcsi_pa._relay_line(f_inp, eps2)),
        ):
            assert line_p.theta == line_f.theta
            assert line_p.phi_num == line_f.phi_num
            assert line_p.tau_num == line_f.tau_num
            assert line_p.phi_den == line_f.phi_den
            assert line_p.tau_den == line_f.tau_den
        if not pcsi_pa.feasible(p_inp):
            continue
        alloc_p, val_p = allocate(p_inp)
        alloc_f, val_f = fcsi_pa.allocate(f_inp)
        assert (alloc_p.p_s, alloc_p.p_r, alloc_p.p_z) == (
            alloc_f.p_s,
            alloc_f.p_r,
            alloc_f.p_z,
        )
        assert val_p == val_f


def test_allocation_invariants():
    rng = np.random.default_rng(29)
    for inp in _random_feasible(rng, 120):
        alloc, value = allocate(inp)
        assert inp.h_sr_sq * alloc.p_s == pytest.approx(inp.h_rd_sq * alloc.p_r, rel=1e-9)
        assert alloc.p_z >= 0.0
        assert alloc.p_s + alloc.p_r + alloc.p_z <= inp.p_total * (1.0 + 1e-12)
        assert np.log2(1.0 + inp.h_sr_sq * alloc.p_s / inp.noise) >= inp.rd - 1e-9
        assert value == pytest.approx(objective(inp, alloc.p_s, alloc.p_r), rel=1e-12)


def test_allocate_matches_line_oracle():
    rng = np.random.default_rng(31)
    for inp in _random_feasible(rng, 60):
        alloc, value = allocate(inp)
        best = -np.inf
        for line in ("source", "relay"):
            try:
                _, _, v = oracle.line_search(inp, line=line, n=2000)
            except InfeasibleRate:
                continue
            best = max(best, v)
        assert np.isfinite(best)
        assert value >= best - 1e-9 * max(1.0, abs(best))
        assert value == pytest.approx(best, rel=1e-6)


def test_closed_form_never_beats_full_region_scan():
    rng = np.random.default_rng(59)
    for inp in _random_feasible(rng, 25):
        _, value = allocate(inp)
        _, _, v_tri = oracle.grid_search_triangle(inp, n=300)
        assert value <= v_tri + 1e-9 * max(1.0, abs(v_tri))


def test_infeasible_target_raises():
    inp = _inp(0.05, 0.05, p=1.0, rd=4.0)
    with pytest.raises(InfeasibleRate):
        allocate(inp)


def test_vectorized_matches_scalar_loop():
    rng = np.random.default_rng(71)
    insts = _random_feasible(rng, 32)
    batched = PcsiCandidateInput(
        h_sr_sq=np.array([i.h_sr_sq for i in insts]),
        h_rd_sq=np.array([i.h_rd_sq for i in insts]),
        eps1=np.array([i.eps1 for i in insts]),
        eps2=np.array([i.eps2 for i in insts]),
        p_total=P14,
        noise=1.0,
        rd=3.0,
    )
    alloc_b, val_b = allocate(batched)
    for k, inp in enumerate(insts):
        alloc_s, val_s = allocate(inp)
        assert alloc_b.p_s[k] == pytest.approx(alloc_s.p_s, rel=1e-12, abs=1e-12)
        assert alloc_b.p_r[k] == pytest.approx(alloc_s.p_r, rel=1e-12, abs=1e-12)
        assert val_b[k] == pytest.approx(val_s, rel=1e-12)
