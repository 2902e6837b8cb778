from tiltgrowth import verify
from tiltgrowth.sequences import INF, b_sequence, l_sequence


def test_all_pass():
    for p in (2, 3, 5, INF):
        res = verify.run_all(p, 120, oracle_max=30)
        assert all(r.ok for r in res), [r.line() for r in res if not r.ok]


def test_corrupted_b_is_caught():
    b = list(b_sequence(2, 60).values)
    b[21] += 1
    res = {r.name: r for r in verify.run_all(2, 60, oracle_max=40, b=b)}
    bad = res["b_n = oracle_b(n)"]
    assert not bad.ok and bad.counterexample[0] == 21
    assert not res["b_(2n-1) = b_(2n)"].ok
    assert "FAIL" in bad.line() and "n=21" in bad.line()


def test_corrupted_l_is_caught():
    l = list(l_sequence(3, 40).values)
    l[10] = 0
    res = {r.name: r for r in verify.run_all(3, 40, oracle_max=None, l=l)}
    assert not res["b_n <= l_n"].ok and res["b_n <= l_n"].counterexample[0] == 10


def test_individual_checks():
    assert not verify.check_mono([1, 1, 5]).ok
    assert not verify.check_monotone([2, 1]).ok
    assert not verify.check_small_n([1, 1, 3], 5).ok
    assert verify.check_psi([1, 1, 2, 3, 6]).ok
    assert verify.check_parity([1, 1, 2, 2, 5], "l", offset=1).ok
    assert verify.check_gap([1, 1, 4]).ok
    assert not verify.check_gap([1, 1, 5]).ok
