import json
import math

import pytest

from varregion.dieudonne import DieudonneData
from varregion.errors import InvalidInputError
from varregion.moebius import BlaschkeProduct
from varregion.oracle import (
    SplitMix64,
    TrialConfig,
    random_schur_tail,
    run_containment,
    run_roundtrips,
)
from varregion.schur import HyperbolicData


def test_splitmix_reference_vectors():
    # published reference outputs of the generator
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(4)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
        0xF88BB8A8724C81EC,
    ]
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_uniform_range():
    r = SplitMix64(7)
    xs = [r.uniform() for _ in range(2000)]
    assert all(0 <= x < 1 for x in xs)
    assert abs(sum(xs) / len(xs) - 0.5) < 0.03
    assert {r.below(3) for _ in range(200)} == {0, 1, 2}


def test_config_validation():
    with pytest.raises(InvalidInputError):
        TrialConfig(trials=0)
    with pytest.raises(InvalidInputError):
        TrialConfig(z0_modulus_max=1.0)


def test_random_tails_are_schur_functions():
    config = TrialConfig()
    kinds = set()
    for i in range(200):
        rng = config.rng(i)
        tail = random_schur_tail(rng, config)
        if isinstance(tail, BlaschkeProduct):
            kinds.add("blaschke")
            assert 1 <= tail.degree <= 3 and all(abs(a) <= 0.8 for a in tail.zeros)
            for k in range(100):
                z = 0.999 * math.sqrt((k + 0.5) / 100) * complex(math.cos(k), math.sin(k))
                assert abs(tail(z)) <= 1 + 1e-12
        elif abs(abs(tail) - 1) < 1e-15:
            kinds.add("unimodular")
        else:
            kinds.add("interior")
            assert abs(tail) <= config.gamma_modulus_max
    assert kinds == {"blaschke", "unimodular", "interior"}


def test_zero_data_unimodular_tails_hit_radius_six():
    report = run_containment(TrialConfig(trials=60), HyperbolicData(0, (0, 0, 0)))
    assert report["radius"] == pytest.approx(6.0)
    assert report["boundary_trials"] > 0
    assert report["max_boundary_error"] < 1e-12
    assert report["pass"]
    assert report["min_interior_margin"] > 0


def test_containment_report_is_reproducible():
    data = HyperbolicData(0.3 - 0.2j, (0.1, 0.5j, -0.4))
    a = run_containment(TrialConfig(seed=5, trials=40), data)
    b = run_containment(TrialConfig(seed=5, trials=40), data)
    c = run_containment(TrialConfig(seed=6, trials=40), data)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a != c
    assert a["pass"] and c["pass"]


def test_containment_dieudonne():
    data = DieudonneData(0.4 + 0.3j, 0.1, gammas=(0.2, -0.3j))
    report = run_containment(TrialConfig(trials=60), data)
    assert report["kind"] == "dieudonne" and report["n"] == 3
    assert report["pass"]


def test_containment_needs_interior_data():
    with pytest.raises(InvalidInputError):
        run_containment(TrialConfig(trials=5), HyperbolicData(0, (0.1, 1.0)))


def test_default_roundtrips_pass():
    report = run_roundtrips(TrialConfig())
    failing = [k for k, s in report["suites"].items() if not s["pass"]]
    assert failing == []
    for name, suite in report["suites"].items():
        if name != "divided_difference":
            assert suite["worst_error"] < 1e-8
    assert not report["ill_conditioned"]


def test_single_order_config():
    report = run_roundtrips(TrialConfig(trials=30, n_max=1))
    assert report["pass"]


def test_adversarial_config_flags_conditioning():
    report = run_roundtrips(TrialConfig(trials=20, n_max=5, z0_modulus_max=0.95))
    assert report["ill_conditioned"]
    assert report["conditioning"] == pytest.approx((1 - 0.95**2) ** -5)
    assert set(report["suites"]) >= {"schur_roundtrip", "center_consistency", "divided_difference"}
