// Copyright 2026 The crct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "crct/attack.h"
#include "crct/ledger.h"
#include "crct/tx_codec.h"

using namespace crct;
using namespace crct::ledger;

namespace {

constexpr std::size_t kBits = 8;

struct Fixture {
  Rng rng = Rng::seeded(80);
  Ledger ledger;
  std::vector<GenesisOutput> owned;

  explicit Fixture(std::size_t outputs = 12) {
    auto [l, o] = Ledger::genesis({outputs, 100, kBits}, rng);
    ledger = std::move(l);
    owned = std::move(o);
  }

  BuiltTransfer spend(std::vector<std::size_t> which, std::size_t ring = 3) {
    std::vector<SpendInput> inputs;
    std::uint64_t total = 0;
    for (auto k : which) {
      inputs.push_back({owned[k].id, owned[k].secret});
      total += owned[k].secret.amount;
    }
    const std::vector<Payment> pay{{mul_base(rng.scalar()), total}};
    return build_transfer(ledger, inputs, pay, ring, kBits, {}, rng);
  }
};

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("crct_test_" + name);
}

}  // namespace

TEST_CASE("genesis") {
  Fixture f(5);
  CHECK(f.ledger.output_count() == 5);
  CHECK(f.ledger.height() == 0);
  const auto* native = f.ledger.find_colour(kNativeColour);
  REQUIRE(native != nullptr);
  CHECK(native->id == tx::colour_id("native"));
  CHECK(native->supply == 500);
  for (const auto& g : f.owned) {
    const auto* o = f.ledger.output(g.id);
    CHECK(o->one_time_key == mul_base(g.secret.spend_key));
    CHECK(pedersen::verify_opening(o->colour_commitment, {g.secret.colour, g.secret.colour_blind}));
  }
}

TEST_CASE("transfer then replay") {
  Fixture f;
  auto t = f.spend({0});
  const auto before = f.ledger.output_count();
  auto r = f.ledger.apply(t.tx);
  CHECK(r.accepted());
  CHECK(r.new_outputs.size() == 1);
  CHECK(f.ledger.output_count() == before + 1);
  CHECK(f.ledger.height() == 1);
  CHECK(f.ledger.is_spent(t.tx.spend_key_images()[0]));

  auto again = f.ledger.apply(t.tx);
  CHECK(again.verdict.status == tx::TxStatus::double_spend);

  // A fresh signature over a different ring still links.
  auto t2 = f.spend({0}, 4);
  CHECK(mlsag::link(t.tx.mlsag, t2.tx.mlsag));
  CHECK(f.ledger.apply(t2.tx).verdict.status == tx::TxStatus::double_spend);
}

TEST_CASE("the same input twice in one transaction is a double spend") {
  Fixture f;
  std::vector<SpendInput> inputs{{f.owned[0].id, f.owned[0].secret},
                                 {f.owned[0].id, f.owned[0].secret}};
  const std::vector<Payment> pay{{mul_base(f.rng.scalar()), 200}};
  auto t = build_transfer(f.ledger, inputs, pay, 3, kBits, {}, f.rng);
  CHECK(f.ledger.apply(t.tx).verdict.status == tx::TxStatus::double_spend);
}

TEST_CASE("issuance and duplicate colours") {
  Fixture f;
  const Point to = mul_base(f.rng.scalar());
  auto gold = tx::make_issuance("gold", 1000, to, true, kBits + 4, f.rng);
  auto r = f.ledger.apply(gold.tx);
  REQUIRE(r.accepted());
  const auto* rec = f.ledger.find_colour("gold");
  REQUIRE(rec != nullptr);
  CHECK(rec->supply == 1000);
  CHECK(rec->output == r.new_outputs.front());
  CHECK(f.ledger.find_colour(tx::colour_id("gold")) == rec);

  auto again = tx::make_issuance("gold", 5, mul_base(f.rng.scalar()), false, kBits, f.rng);
  CHECK(f.ledger.apply(again.tx).verdict.status == tx::TxStatus::duplicate_colour);
  auto native = tx::make_issuance("native", 5, mul_base(f.rng.scalar()), true, kBits, f.rng);
  CHECK(f.ledger.apply(native.tx).verdict.status == tx::TxStatus::duplicate_colour);

  auto hidden = tx::make_issuance("silver", 5, mul_base(f.rng.scalar()), false, kBits, f.rng);
  CHECK(f.ledger.apply(hidden.tx).accepted());
  CHECK_FALSE(f.ledger.find_colour("silver")->supply);
}

TEST_CASE("issued colours are spendable among native decoys") {
  Fixture f;
  const Scalar x = f.rng.scalar();
  auto gold = tx::make_issuance("gold", 50, mul_base(x), false, kBits, f.rng);
  const auto id = f.ledger.apply(gold.tx).new_outputs.front();
  const auto& s = gold.secret;
  const std::vector<SpendInput> in{{id, {x, s.amount, s.amount_blind, s.colour, s.colour_blind}}};
  const std::vector<Payment> pay{{mul_base(f.rng.scalar()), 20}, {mul_base(f.rng.scalar()), 30}};
  auto t = build_transfer(f.ledger, in, pay, 5, kBits, {}, f.rng);
  CHECK(t.tx.ring_refs(t.secret_index, 0) == id);
  CHECK(f.ledger.apply(t.tx).accepted());
}

TEST_CASE("rejections are atomic") {
  Fixture f;
  auto t = f.spend({1});
  REQUIRE(f.ledger.apply(t.tx).accepted());
  const auto snapshot = f.ledger.serialize();

  auto bad = f.spend({2});
  bad.tx.outputs[0].amount_commitment.point += params().H;
  CHECK_FALSE(f.ledger.apply(bad.tx).accepted());
  CHECK(f.ledger.apply(t.tx).verdict.status == tx::TxStatus::double_spend);
  auto dup = tx::make_issuance("native", 1, mul_base(f.rng.scalar()), true, kBits, f.rng);
  CHECK_FALSE(f.ledger.apply(dup.tx).accepted());
  CHECK(f.ledger.serialize() == snapshot);
}

TEST_CASE("reusing a one-time key is rejected") {
  Fixture f;
  std::vector<SpendInput> in{{f.owned[3].id, f.owned[3].secret}};
  std::vector<Payment> pay{{f.ledger.output(0)->one_time_key, 100}};
  auto reuse = build_transfer(f.ledger, in, pay, 3, kBits, {}, f.rng);
  CHECK(f.ledger.apply(reuse.tx).verdict.status == tx::TxStatus::malformed);
}

TEST_CASE("no interleaving accepts two spends of one key") {
  // Candidate transfers over genesis outputs {0}, {0,1}, {1}, {1,2}, applied
  // in every order.
  Fixture f(8);
  std::vector<BuiltTransfer> txs{f.spend({0}), f.spend({0, 1}), f.spend({1}), f.spend({1, 2})};
  std::vector<std::size_t> order(txs.size());
  std::iota(order.begin(), order.end(), 0);
  const Ledger start = f.ledger;
  do {
    Ledger l = start;
    std::vector<std::size_t> accepted;
    for (auto k : order)
      if (l.apply(txs[k].tx).accepted()) accepted.push_back(k);
    std::vector<Point> images;
    for (auto k : accepted)
      for (const auto& p : txs[k].tx.spend_key_images()) images.push_back(p);
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    CHECK(l.spent_images().size() == images.size());
    CHECK(!accepted.empty());
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("decoy sampling") {
  Fixture f(10);
  auto refs = f.ledger.sample_decoys(1, 3, {}, f.rng);
  CHECK(refs.rows() == 3);
  std::set<tx::OutputId> ids(refs.data().begin(), refs.data().end());
  CHECK(ids.size() == 3);

  const std::vector<tx::OutputId> exclude{0, 1, 2, 3, 4};
  for (int t = 0; t < 50; ++t) {
    auto r = f.ledger.sample_decoys(2, 2, exclude, f.rng);
    std::set<tx::OutputId> s(r.data().begin(), r.data().end());
    CHECK(s.size() == 4);
    for (auto id : s) CHECK(id >= 5);
  }
  CHECK_THROWS_AS(f.ledger.sample_decoys(2, 3, exclude, f.rng), InsufficientOutputs);
}

TEST_CASE("decoy sampling is uniform") {
  Fixture f(10);
  constexpr int kDraws = 3000;
  std::array<double, 10> counts{};
  for (int t = 0; t < kDraws; ++t) {
    auto r = f.ledger.sample_decoys(1, 3, std::vector<tx::OutputId>{9}, f.rng);
    for (auto id : r.data()) ++counts[id];
  }
  CHECK(counts[9] == 0);
  const double expected = kDraws * 3.0 / 9.0;
  double chi2 = 0;
  for (int k = 0; k < 9; ++k) chi2 += (counts[k] - expected) * (counts[k] - expected) / expected;
  // 8 degrees of freedom, 99.9th percentile 26.1.
  CHECK(chi2 < 26.1);
}

TEST_CASE("snapshots") {
  Fixture f;
  REQUIRE(f.ledger.apply(f.spend({0}).tx).accepted());
  REQUIRE(f.ledger.apply(tx::make_issuance("gold", 9, mul_base(f.rng.scalar()), true, kBits, f.rng).tx)
              .accepted());
  const auto path = temp_path("snapshot.bin");
  f.ledger.save(path);
  const Ledger loaded = Ledger::load(path);
  CHECK(loaded == f.ledger);
  CHECK(loaded.serialize() == f.ledger.serialize());

  const auto bytes = f.ledger.serialize();
  CHECK_THROWS_AS(Ledger::deserialize(ByteView(bytes).first(bytes.size() - 1)), SnapshotError);
  CHECK_THROWS_AS(Ledger::deserialize(ByteView(bytes).first(10)), SnapshotError);
  auto corrupt = bytes;
  corrupt[40] ^= 1;
  CHECK_THROWS_AS(Ledger::deserialize(corrupt), SnapshotError);
  CHECK_THROWS_AS(Ledger::load(temp_path("does-not-exist")), std::system_error);

  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), 100);
  }
  CHECK_THROWS_AS(Ledger::load(path), SnapshotError);
  std::filesystem::remove(path);
}

TEST_CASE("load-then-apply equals apply-then-save") {
  Fixture f;
  const auto t = f.spend({4});
  const auto path = temp_path("commute.bin");
  f.ledger.save(path);

  Ledger a = f.ledger;
  const auto ra = a.apply(t.tx);
  a.save(path.string() + ".a");

  Ledger b = Ledger::load(path);
  const auto rb = b.apply(t.tx);
  CHECK(ra.accepted());
  CHECK(rb.accepted());
  CHECK(ra.new_outputs == rb.new_outputs);
  CHECK(Ledger::load(path.string() + ".a").serialize() == b.serialize());
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".a");
}

TEST_CASE("colour registry stays injective") {
  Fixture f(4);
  for (int i = 0; i < 20; ++i) {
    auto iss = tx::make_issuance("c" + std::to_string(i), 1, mul_base(f.rng.scalar()), true, 4, f.rng);
    CHECK(f.ledger.apply(iss.tx).accepted());
  }
  std::set<Scalar> ids;
  for (const auto& [label, rec] : f.ledger.colours()) {
    CHECK(rec.label == label);
    ids.insert(rec.id);
  }
  CHECK(ids.size() == f.ledger.colours().size());
  CHECK(f.ledger.colours().size() == 21);
}

TEST_CASE("genesis outputs only before the first transaction") {
  Fixture f(4);
  auto [out, s] = tx::make_output(mul_base(f.rng.scalar()), 1, tx::colour_id("x"), kBits, f.rng);
  CHECK(f.ledger.add_genesis_output(out) == 4);
  CHECK_THROWS_AS(f.ledger.add_genesis_output(out), std::invalid_argument);
  REQUIRE(f.ledger.apply(f.spend({0}).tx).accepted());
  auto [out2, s2] = tx::make_output(mul_base(f.rng.scalar()), 1, tx::colour_id("x"), kBits, f.rng);
  CHECK_THROWS_AS(f.ledger.add_genesis_output(out2), std::logic_error);
}

TEST_CASE("epsilon colour attack against a ledger") {
  auto rng = Rng::seeded(90);
  for (std::uint64_t e : {1ull, 2ull, 1ull << 32}) {
    const auto r = attack::epsilon_colour(Scalar::from_u64(e), 3, "gold", rng);
    CHECK(r.honest_signer_refused);
    CHECK(r.verdict.status == tx::TxStatus::bad_signature);
    CHECK(r.ledger.output(r.low_input) != nullptr);
    CHECK(r.ledger.output(r.high_input) != nullptr);
    CHECK(r.forged.ring_refs.cols() == 2);
  }
}
