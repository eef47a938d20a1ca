"""Smoke tests for the mlcss extension module.

Runnable standalone (python smoke_test.py) or under pytest.
"""

import mlcss


def test_solve_identity():
    sol = mlcss.solve(["ab"], ["ab"])
    assert sol["length"] == 2
    assert sol["witness"] == "ab"
    assert sol["end_in_y1"] == 2
    assert sol["cells_computed"] == 4
    assert sol["mode"] == "rolling"


def test_solve_disjoint():
    sol = mlcss.solve(["a"], ["b"], mode="full")
    assert sol["length"] == 0
    assert sol["witness"] == ""
    assert sol["end_in_y1"] == 0


def test_helpers():
    assert mlcss.is_subsequence("ace", "abcde")
    assert not mlcss.is_subsequence("ba", "ab")
    assert mlcss.occurs_as_substring("bd", "bdc")
    assert not mlcss.occurs_as_substring("bc", "bdc")


def test_verify_report():
    report = mlcss.verify(["ab"], ["ab"], "ba")
    assert report["pass"] is False
    assert report["x_ok"] == [False]
    assert report["y_ok"] == [False]
    assert mlcss.verify(["ab"], ["ab"], "")["pass"] is True


def test_matches_oracle():
    for seed in range(40):
        xs, ys = mlcss.gen_random(
            s=2, t=2, len_x=(0, 6), len_y=(0, 6), alphabet_size=2, seed=seed
        )
        fast = mlcss.solve(xs, ys)
        slow = mlcss.oracle_solve(xs, ys)
        assert fast["length"] == slow["length"], (xs, ys)
        assert mlcss.verify(xs, ys, fast["witness"])["pass"]


def test_planted_lower_bound():
    for seed in range(20):
        inst = mlcss.gen_planted(
            s=2, t=2, len_x=(3, 8), len_y=(3, 7), alphabet_size=3, seed=seed, planted_len=3
        )
        assert mlcss.verify(inst["xs"], inst["ys"], inst["planted"])["pass"]
        sol = mlcss.solve(inst["xs"], inst["ys"])
        assert sol["length"] >= 3


def test_budget_error():
    try:
        mlcss.solve(["ab" * 40], ["ab" * 40], mode="full", max_cells=100)
    except mlcss.BudgetExceeded:
        pass
    else:
        raise AssertionError("expected BudgetExceeded")


def test_oracle_guard():
    try:
        mlcss.oracle_solve(["a"], ["a" * 65])
    except mlcss.OracleGuardExceeded:
        pass
    else:
        raise AssertionError("expected OracleGuardExceeded")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL {name}: {exc}")
    raise SystemExit(1 if failures else 0)
