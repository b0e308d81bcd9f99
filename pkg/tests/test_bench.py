from limitvar.bench import ScalingConfig, ScalingResult, measure_scaling


def test_slope_of_known_curve():
    res = ScalingResult(ScalingConfig(), {8: 1.0, 16: 4.0, 32: 16.0})
    assert abs(res.slope - 2.0) < 1e-9
    assert res.table().splitlines()[-1].startswith("slope\t2.000")


def test_measure_small():
    res = measure_scaling(ScalingConfig(lengths=(4, 8), pairs=3, seed=1))
    assert set(res.seconds) == {4, 8} and all(t > 0 for t in res.seconds.values())
