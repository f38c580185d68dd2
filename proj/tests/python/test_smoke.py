# Copyright 2026 The crct Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import crct
from crct import Point, Rng, Scalar, analysis, ledger, mlsag, pedersen, tx

BITS = 8


def test_group_vectors():
    assert crct.G().hex() == "e2f2ae0a6abc4e71a884a961c500515f58e30b6aa582dd8db6a65945e08d2d76"
    assert crct.H() == crct.hash_to_point(bytes(crct.G()))
    assert crct.hash_to_scalar(b"").hex() == (
        "3223dc0340218a000950099d878f55ca602975c4081e4a75e13d57b6d95cde09"
    )
    assert Scalar.from_int(5) - Scalar.from_int(3) == Scalar.from_int(2)
    assert (Scalar.from_int(2) * crct.G()) == crct.G() + crct.G()
    with pytest.raises(crct.DecodeError):
        Point.from_bytes(b"\x01" + bytes(31))
    with pytest.raises(ValueError):
        Scalar.from_bytes(b"\xff" * 32)


def test_pedersen_homomorphism():
    rng = Rng.seeded(1)
    a, b, r, s = (rng.scalar() for _ in range(4))
    ca, cb = pedersen.commit(a, r), pedersen.commit(b, s)
    assert pedersen.combine([ca, cb], []) == pedersen.commit(a + b, r + s)
    assert pedersen.verify_opening(ca, a, r)
    assert not pedersen.verify_opening(ca, b, r)
    zero = pedersen.commit(Scalar(), r)
    proof = pedersen.prove_zero(zero, r, b"m", rng)
    assert pedersen.verify_zero(zero, proof, b"m")
    assert not pedersen.verify_zero(zero, proof, b"n")


def test_mlsag_round_trip_and_link():
    rng = Rng.seeded(2)
    own = mlsag.keygen(2, rng)
    decoys = [mlsag.keygen(2, rng).public_only() for _ in range(3)]
    ring = mlsag.keyselect(own, decoys, rng)
    sig = mlsag.sign(b"hello", ring, own.secrets, rng)
    assert mlsag.verify(b"hello", sig, ring)
    assert not mlsag.verify(b"hullo", sig, ring)
    wire = mlsag.encode(sig)
    assert len(wire) == mlsag.wire_size(4, 2, 2) == (4 * 2 + 1 + 2) * 32
    again = mlsag.decode(wire, 4, 2, 2)
    assert mlsag.verify(b"hello", again, ring)

    ring2 = mlsag.keyselect(own, [mlsag.keygen(2, rng).public_only()], rng)
    assert mlsag.link(sig, mlsag.sign(b"other", ring2, own.secrets, rng))


def test_ledger_transfer_issue_and_double_spend(tmp_path):
    rng = Rng.seeded(3)
    l, owned = ledger.Ledger.genesis(outputs=8, amount=50, range_bits=BITS, rng=rng)
    spend = [ledger.SpendInput(owned[0].id, owned[0].secret)]
    pay = [ledger.Payment(crct.mul_base(rng.scalar()), 20), ledger.Payment(crct.mul_base(rng.scalar()), 30)]
    built = ledger.build_transfer(l, spend, pay, ring_size=4, range_bits=BITS, rng=rng)
    assert built.tx.ring_size == 4
    assert len(built.tx.mlsag_bytes()) == (4 * 3 + 1 + 1) * 32

    decoded = tx.Transaction.decode(built.tx.encode())
    assert decoded == built.tx
    assert tx.Transaction.from_json(built.tx.to_json()) == built.tx

    res = l.apply(built.tx)
    assert res.accepted and res.new_outputs == [8, 9]
    replay = l.apply(built.tx)
    assert replay.verdict.status == "double-spend"

    iss = tx.make_issuance("gold", 100, crct.mul_base(rng.scalar()), True, BITS, rng)
    assert l.apply(iss.tx).accepted
    assert l.colours()["gold"]["supply"] == 100
    dup = tx.make_issuance("gold", 1, crct.mul_base(rng.scalar()), True, BITS, rng)
    assert l.apply(dup.tx).verdict.status == "duplicate-colour"

    path = tmp_path / "ledger.bin"
    l.save(path)
    assert ledger.Ledger.load(path) == l
    path.write_bytes(path.read_bytes()[:-3])
    with pytest.raises(crct.SnapshotError):
        ledger.Ledger.load(path)


def test_honest_signer_refuses_imbalance():
    rng = Rng.seeded(4)
    l, owned = ledger.Ledger.genesis(outputs=6, amount=10, range_bits=BITS, rng=rng)
    spend = [ledger.SpendInput(owned[0].id, owned[0].secret)]
    with pytest.raises(crct.ConservationError):
        ledger.build_transfer(l, spend, [ledger.Payment(crct.mul_base(rng.scalar()), 11)], 3, BITS, rng=rng)


def test_epsilon_attack_rejected():
    rng = Rng.seeded(5)
    for eps in (1, 2, 2**32):
        r = crct.attack.epsilon_colour(Scalar.from_int(eps), rng=rng)
        assert r.honest_signer_refused
        assert not r.verdict.ok
        assert r.verdict.status == "bad-signature"


def test_analysis():
    sizes = analysis.signature_sizes(11, 2)
    assert (sizes["base_mlsag_bytes"], sizes["coloured_mlsag_bytes"]) == (1152, 1856)
    assert sizes["borromean_reference_bytes"] == 6176
    uni = analysis.anonymity_probability(5, 2)
    assert uni["closed_form"] and uni["probability"] == pytest.approx(0.04)
    zipf = analysis.anonymity_probability(200, 2, "zipf", trials=100_000)
    assert 0.03 <= zipf["probability"] <= 0.08
    sim = analysis.simulate_anonymity(5, 1, trials=100_000, seed=3)
    assert abs(sim["probability"] - 0.2) < 4 * sim["standard_error"]
