"""Smoke tests for the Python module: counts, polynomials, checks, tracing."""
import sys

import hooksum


def test_counts():
    assert hooksum.count_cayley([1, 2, 3, 4]) == 16
    assert hooksum.count_cayley([3, 7, 9]) == 3
    assert hooksum.count_increasing([1, 2, 3, 4, 5]) == 24
    assert len(hooksum.enumerate_increasing([1, 2, 3])) == 2


def test_polynomials():
    x, y = hooksum.x, hooksum.y
    assert str(x(1) * y(2, 2)) == "x[1]*y[2,2]"
    theta = hooksum.theta([1, 2, 3], form="product")
    assert theta == hooksum.theta([1, 2, 3], form="sum")
    assert theta == x(1) * y(3, 3) * (y(2, 2) * (x(1) + x(2)) + x(2) * y(2, 3))
    assert hooksum.theta_n(1) == y(1, 1)
    assert hooksum.theta_n(2) == x(1) * (y(1, 1) + y(1, 2)) * y(2, 2)
    assert hooksum.det_kirchhoff([1, 2, 3]) == theta
    assert hooksum.eval_int(x(1) * y(2, 2), {("x", 1): 3, ("y", 2, 2): 5}) == 15

    p = hooksum.poly_from_json(theta.to_json())
    assert p == theta
    assert hooksum.psi_map(y(1, 1), 1, 3) == y(1, 1) + y(1, 3)
    assert hooksum.derivative(x(1) * x(1), ("x", 1)) == hooksum.Poly(2) * x(1)


def test_weights():
    path = {"labels": [1, 2, 3], "father": {2: 1, 3: 2}}
    x, y = hooksum.x, hooksum.y
    assert hooksum.hook_weight(path) == x(1) * (y(2, 2) + y(2, 3)) * x(2) * y(3, 3)
    assert hooksum.cayley_weight(path) == x(1) * y(2, 2) * x(2) * y(3, 3)
    assert hooksum.decorated_weight(path, {2: 3, 3: 3}) == x(1) * y(2, 3) * x(2) * y(3, 3)


def test_bijection():
    path = {"labels": [1, 2, 3], "father": {2: 1, 3: 2}}
    assert hooksum.validate(path, {2: 3, 3: 3}) == (0, 1)
    tree, phi = hooksum.unsort_step(path, {2: 3, 3: 3})
    assert tree["father"] == {2: 3, 3: 1}
    assert phi == {3: 3}
    back_tree, back_phi = hooksum.resort_step(tree, phi)
    assert back_tree == path and back_phi == {2: 3, 3: 3}

    chain = hooksum.trace_unsort(path, {2: 3, 3: 3})
    assert len(chain) == 2
    assert chain[0]["weight"] == chain[1]["weight"]
    assert chain[-1]["index"] == {"i": 1, "j": 0}

    try:
        hooksum.validate(path, {2: 1, 3: 3})
    except ValueError:
        pass
    else:
        raise AssertionError("expected a validation error")


def test_verify():
    assert hooksum.verify("thm11", labels=[1, 2, 3])["pass"] is True
    report = hooksum.verify("abel", n=3, u=2, v=1)
    assert report["pass"] is True and report["params"]["u"] == "2"
    assert hooksum.verify("bijection", labels=[1, 2, 3])["pass"] is True
    assert hooksum.verify("matrixtree", labels=[2, 5, 9])["pass"] is True
    batch = hooksum.verify("all", labels_max=2)
    assert batch["pass"] is True and len(batch["results"]) > 0


def main():
    tests = [test_counts, test_polynomials, test_weights, test_bijection, test_verify]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
