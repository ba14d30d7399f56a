import math

import pytest

import qagentlab as qal


def test_circuit_probabilities():
    c = qal.Circuit(2).h(0).h(1)
    probs = qal.probabilities(c)
    assert probs == pytest.approx([0.25] * 4, abs=1e-12)


def test_sample_determinism():
    c = qal.Circuit(2).h(0).cnot(0, 1)
    assert qal.sample(c, 200, seed=3) == qal.sample(c, 200, seed=3)


def test_grover_select():
    chosen, hist, probs = qal.grover_select("10", shots=256, seed=1)
    assert chosen == "10"
    assert hist["10"] == 256
    assert probs[2] == pytest.approx(1.0, abs=1e-10)


def test_bandit_train_shape():
    records = qal.bandit_train(seed=0)
    assert len(records) == 100
    assert records[-1].cumulative_reward >= records[0].cumulative_reward
    assert sum(records[0].policy_probs) == pytest.approx(1.0, abs=1e-12)


def test_entropy_and_xor():
    img = qal.GrayImage(2, 2, [0, 0, 255, 255])
    assert qal.shannon_entropy(img) == pytest.approx(1.0, abs=1e-12)
    assert all(qal.quantum_xor(s, k) == s ^ k for s in range(16) for k in range(16))


def test_encrypt_roundtrip():
    img = qal.GrayImage(2, 2, [10, 20, 30, 40])
    enc = qal.encrypt_image(img, "xor", key=9)
    dec = qal.decrypt_image(enc, "xor", key=9)
    assert dec.pixels == img.pixels
    with pytest.raises(Exception):
        qal.decrypt_image(enc, "qft")


def test_qie_train_rewards_in_range():
    img = qal.GrayImage(8, 8, [128] * 64)
    records = qal.qie_train(img, episodes=5, lr=0.1, seed=1)
    assert len(records) == 5
    assert all(0.0 <= r.reward <= 8.0 for r in records)


def test_qft_matches_dft():
    import cmath

    c = qal.Circuit(4)
    for i in range(4):
        c.h(i)
        for j in range(i + 1, 4):
            c.cphase(j, i, math.pi / (1 << (j - i)))
    c.swap(0, 3).swap(1, 2)
    u = qal.circuit_unitary(c)
    for j in range(16):
        for k in range(16):
            expected = cmath.exp(2j * math.pi * j * k / 16) / 4
            assert abs(u[j][k] - expected) < 1e-10
