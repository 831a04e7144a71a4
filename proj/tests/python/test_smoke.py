"""Smoke tests of the python module against small frozen instances."""

import math

import hermlab as hl


def test_dim_series_smallest_curve():
    recs = hl.dim_series(2, 2, hl.Gamma.degree_three)
    assert [(r.s, r.k, r.subdim) for r in recs] == [
        (0, 1, 1), (1, 3, 1), (2, 6, 5), (3, 8, 8)]


def test_rate_series_and_exact_moments():
    rs = hl.rate_series(2, 2, hl.Gamma.one_point)
    assert (rs.n, rs.genus, rs.deg_g) == (8, 1, 1)
    assert rs.dims == [1, 1, 1, 1, 3, 3, 5, 7, 7, 8]
    assert str(rs.rate(3)) == "1/8" and rs.rate(100).to_double() == 1.0
    m = hl.moments(rs)
    assert str(m.mean) == "43/8" and m.mean.render(2) == "5.38"
    assert m.variance.render(2) == "6.48"
    assert math.isclose(m.stddev, math.sqrt(415 / 64))


def test_table_row_q3():
    rs = hl.rate_series(3, 3, hl.Gamma.one_point)
    m = hl.moments(rs)
    assert str(m.mean) == "544/27" and m.mean.render(2) == "20.15"
    assert m.variance.render(2) == "53.46"
    assert hl.mean_ratio(rs, m).render(3) == "0.746"


def test_fit_ranking():
    rs = hl.rate_series(3, 3, hl.Gamma.one_point)
    xs = hl.empirical_sample(rs, hl.SampleMode.jumps_positive)
    assert len(xs) == 26 and min(xs) > 0
    fits = hl.rank_by_aic(xs)
    assert len(fits) == 9
    good = [f for f in fits if f.applicable]
    assert [f.aic for f in good] == sorted(f.aic for f in good)
    assert all(f.converged for f in good)
    ev = next(f for f in good if f.family == hl.DistFamily.extreme_value)
    # the fitted cdf is the minimum-type Gumbel
    z = (xs[0] - ev.params.p1) / ev.params.p2
    assert math.isclose(hl.dist_cdf(hl.DistFamily.extreme_value, ev.params, xs[0]),
                        1 - math.exp(-math.exp(z)), rel_tol=1e-12)


def test_keysize_profile():
    assert hl.key_bits(2, 8, 4) == 16.0
    rs = hl.rate_series(2, 2, hl.Gamma.one_point)
    prof = hl.keysize_profile(rs)
    assert len(prof.points) == 10
    assert prof.points[0].exact_bits == hl.key_bits(2, 8, 1)
    assert prof.points[-1].exact_bits == 0.0
    assert prof.csv().startswith("s,R,exact_bits,F,estimated_bits\n")
    peak = hl.estimated_peak_location(prof.model)
    assert math.isclose(
        hl.dist_cdf(hl.DistFamily.extreme_value, prof.model, peak), 0.5,
        abs_tol=1e-12)


def test_cached_series_round_trip(tmp_path):
    a = hl.cached_rate_series(2, 2, hl.Gamma.one_point, str(tmp_path))
    b = hl.cached_rate_series(2, 2, hl.Gamma.one_point, str(tmp_path))
    assert a.dims == b.dims == [1, 1, 1, 1, 3, 3, 5, 7, 7, 8]
    assert (tmp_path / "v1" / "2_2_1pt.csv").exists()
