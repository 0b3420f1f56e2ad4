"""Smoke test for the fracdelta extension module.

Build and install first, e.g. ``pip install maturin && maturin build -m crates/py/Cargo.toml``
followed by ``pip install target/wheels/fracdelta-*.whl``.
"""

import math

import fracdelta as fd


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol * (1.0 + abs(b))


def main():
    assert fd.kernel_k(0.5, 2) == [1.0, 0.5, 0.375]
    assert close(fd.log_gamma(0.5), 0.5 * math.log(math.pi))

    shift = fd.Matrix.shift(2)
    s = fd.s_alpha_recurrence(shift, 1.0, 3)
    assert s[3].rows() == [[1, 3], [0, 1]]

    t = fd.Matrix([[0.2 + 0.1j, -0.3], [0.05, 0.4j]])
    rec = fd.s_alpha_recurrence(t, 0.5, 20)
    series = fd.s_alpha_gamma_sum(t, 0.5, 20)
    contour = fd.s_alpha_contour(t, 0.5, 20)
    for i in range(2):
        for j in range(2):
            assert close(series[i, j], rec[20][i, j], 1e-10)
            assert close(contour[i, j], rec[20][i, j], 1e-8)

    y = [[1.0, 0.5j] for _ in range(30)]
    u = fd.solve_frac(t, 0.7, [1.0, -1.0], y, 30)
    assert len(u) == 31
    assert max(fd.residual_frac(t, 0.7, u, y)) < 1e-12

    report = fd.sigma_condition_check(shift, 0.5)
    assert report["verdict"] is True
    bad = fd.sigma_condition_check(fd.Matrix([[-1 + 1j]]), 1.0)
    assert bad["verdict"] is False and abs(bad["min_angle"] - math.pi / 2) < 1e-2

    half = fd.s_alpha_recurrence(shift, 0.5, 2002)
    kt = fd.kt_diagnostic(half, 0, 1000, 2000)
    assert -1.7 <= kt["trend_slope"] <= -1.3
    fit = fd.growth_order_fit(half, 100, 2000)
    assert fit["classification"] == "polynomial"

    x = [complex(n) for n in range(60001)]
    scan = fd.resolvent_scan(x, 1.0, nu=1)
    assert abs(scan["order_hat"] - 2.0) < 0.2 and scan["is_singular"]

    jordan = fd.Matrix([[1, 1], [0, 1]])
    assert not fd.ablv_check(jordan, [0, 1], 1.0)["satisfied"]
    assert fd.ablv_check(fd.Matrix([[0.5]]), [1.0], 1.0)["satisfied"]

    k = [complex(v) for v in fd.kernel_k(0.5, 200)]
    assert close(fd.z_transform(k, 2.0), math.sqrt(2.0), 1e-12)

    try:
        fd.kernel_k(1.5, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("order above one accepted")
    try:
        fd.resolvent_scan([1.0] * 50, 1.0)
    except fd.NumericError:
        pass
    else:
        raise AssertionError("short sequence accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
