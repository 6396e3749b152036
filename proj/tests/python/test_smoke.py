"""Smoke tests for the python bindings."""

import tandemwalks as tw


def test_counts_and_closed_forms():
    assert tw.baxter_b(3) == "6"
    assert tw.tutte_a(2) == "5"
    assert tw.count_walks(p=3, z=["1", "1", "1", "1"], start=(0, 0), end=(0, 0), n=4) == "6"
    assert tw.count_walks(p=1, z=["0", "1"], start=(0, 0), end=(0, 0), n=6) == "5"
    assert tw.dangulation_sequence(2, 4) == ["1", "0", "1", "2", "14"]
    assert tw.exact_p1_endpoint(3, 0, 0) == "1"
    assert tw.lgv_qnk(4, 2, 0, 0, 0, 0) == "1"
    assert tw.marked_qnk_tilde(4, 2, 0, 0, 0, 0) == "1"


def test_bijection_round_trip():
    walk = [[0, 1], [], [1, 1], [1, 0], []]  # [] encodes the SE step
    stats = tw.walk_stats(walk)
    omap = tw.phi(walk)
    ok, msg = tw.validate_map(omap)
    assert ok, msg
    assert tw.phi_inverse(omap) == walk
    back = tw.sigma_on_walks(tw.sigma_on_walks(walk))
    assert back == walk
    a, b, c, d = stats
    sa, sb, sc, sd = tw.walk_stats(tw.sigma_on_walks(walk))
    assert (sa, sb, sc, sd) == (d, b, c, a)
    assert tw.rho_on_walks(tw.rho_on_walks(walk)) == walk


def test_series_and_harmonic():
    q = tw.q11_coeffs(1, ["0", "1"], 0, 0, 6)
    assert q == ["1", "1", "2", "4", "9", "21"]
    rows = tw.q0b_x0_coeffs(3, ["1", "1", "1", "1"], 0, 5)
    assert rows[4][0] == "6"  # six three-edge orientations
    rational, value = tw.harmonic_v(1, "1/3", ["0", "1/3"], 0, 0)
    assert rational == "6"
    assert abs(value - 6 * 3 ** 0.5) < 1e-12
    iota, alpha, gamma, sigma2, kappa = tw.kappa_bipolar([3], 0, 0)
    assert iota == 3
    assert abs(alpha - 1) < 1e-12
    assert abs(gamma - 3) < 1e-12


def test_samplers_deterministic():
    w1 = tw.sample_quadrant(1, "1/3", ["0", "1/3"], 8, 42)
    w2 = tw.sample_quadrant(1, "1/3", ["0", "1/3"], 8, 42)
    assert w1 == w2
    e = tw.sample_excursion_p1(6, 7)
    assert len(e) == 6
    x = y = 0
    for step in e:
        dx, dy = (1, -1) if step == [] else (-step[0], step[1])
        x, y = x + dx, y + dy
        assert x >= 0 and y >= 0
    assert (x, y) == (0, 0)
