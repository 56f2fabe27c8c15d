from cliffpin.verify import SUITES, VerifyConfig, run_all


def test_invariant_suites_pass():
    results = run_all(VerifyConfig(max_n=4, spinor_trials=10))
    assert len(results) == len(SUITES)
    for r in results:
        assert r.checks > 0
        if not r.name.startswith("claim:") or r.name == "claim: odd-n omega^2 table":
            assert r.passed, (r.name, r.failures[:5])


def test_claim_suites_record_convention():
    results = {r.name: r for r in run_all(VerifyConfig(max_n=2, spinor_trials=1))}
    for name, r in results.items():
        if name.startswith("claim:"):
            assert r.convention == "minus_first"
