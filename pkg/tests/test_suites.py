from hyperq.suites import SUITES, VerifyConfig, run_trial, run_verify


def test_every_suite_runs():
    res = run_trial(VerifyConfig(seed=5, n_max=6), 0)
    assert set(res) == set(SUITES)
    assert all(o.status != "fail" for o in res.values()), {k: o.detail for k, o in res.items()}


def test_order_independent():
    cfg = VerifyConfig(seed=2, n_max=6)
    assert run_trial(cfg, 3) == run_trial(cfg, 3)


def test_parallel_matches_serial():
    a = run_verify(6, seed=4, n_max=6, jobs=1)
    b = run_verify(6, seed=4, n_max=6, jobs=2)
    assert a == b and a["ok"]


def test_failure_reports_instance(monkeypatch):
    from hyperq import suites

    def broken(rng, cfg, ctx):
        suites._draw(ctx, rng, cfg.ks, cfg.n_max)
        raise suites.Failed("boom")

    monkeypatch.setitem(suites.SUITES, "factorizations", broken)
    doc = run_verify(2, seed=1, n_max=5)
    entry = doc["suites"]["factorizations"]
    assert not doc["ok"] and entry["fail"] == 2
    assert entry["counterexamples"][0]["instance"].startswith("k ")
