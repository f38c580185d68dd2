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

#include "crct/tx_codec.h"
#include "fixture.h"

using namespace crct;
using namespace crct::tx;
using crct::testing::World;

namespace {

Transaction sample_transfer(World& w, std::size_t n, std::size_t m, std::size_t q) {
  std::vector<OutputId> real;
  for (std::size_t j = 0; j < m; ++j) real.push_back(w.add(q, colour_id("gold")));
  const std::size_t pi = w.rng.uniform(n);
  auto refs = w.ring_around(real, n, pi);
  auto outs = w.pay(std::vector<std::uint64_t>(q, m), colour_id("gold"));
  return sign_transaction(refs, w.resolve(refs), pi, w.secrets_of(real), outs.outputs,
                          outs.secrets, Bytes{'m', 'e', 'm', 'o'}, w.rng);
}

}  // namespace

TEST_CASE("binary and JSON encodings round-trip") {
  World w(70);
  auto rng = Rng::seeded(71);
  std::vector<Transaction> txs;
  for (auto [n, m, q] : {std::tuple{2, 1, 1}, {3, 2, 2}, {4, 3, 3}})
    txs.push_back(sample_transfer(w, n, m, q));
  txs.push_back(make_issuance("gold", 77, mul_base(rng.scalar()), true, 8, rng).tx);
  txs.push_back(make_issuance("iron", 77, mul_base(rng.scalar()), false, 8, rng).tx);

  for (const auto& tx : txs) {
    const auto bytes = encode_transaction(tx);
    CHECK(decode_transaction(bytes) == tx);
    CHECK(encode_transaction(decode_transaction(bytes)) == bytes);
    const auto j = to_json(tx);
    CHECK(transaction_from_json(nlohmann::json::parse(j.dump())) == tx);
  }
}

TEST_CASE("encoded size is the fixed part plus varint ring positions") {
  World w(72);
  const std::size_t n = 3, m = 2, q = 2;
  const auto tx = sample_transfer(w, n, m, q);
  std::size_t refs = 0;
  for (auto id : tx.ring_refs.data()) refs += varint_size(id);
  const std::size_t expected = 2 + 1 + 4                    // version, kind, metadata
                               + 1 + q * (3 * 32 + range_proof_wire_size(w.range_bits()))
                               + 1 + 1 + refs               // n, m, positions
                               + (n * (2 * m + 1) + 1 + m) * 32  // MLSAG
                               + (q - 1) * 64;              // colour proofs
  CHECK(encode_transaction(tx).size() == expected);
}

TEST_CASE("malformed encodings are rejected") {
  World w(73);
  const auto bytes = encode_transaction(sample_transfer(w, 2, 1, 2));
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, std::size_t{10}, bytes.size() / 2,
                          bytes.size() - 1})
    CHECK_THROWS_AS(decode_transaction(ByteView(bytes).first(cut)), DecodeError);

  auto trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS_AS(decode_transaction(trailing), DecodeError);

  auto version = bytes;
  version[0] = 2;
  CHECK_THROWS_AS(decode_transaction(version), DecodeError);

  auto kind = bytes;
  kind[1] = 7;
  CHECK_THROWS_AS(decode_transaction(kind), DecodeError);

  // Flipping the high bit of the last colour-proof response makes it >= l.
  auto scalar = bytes;
  scalar.back() |= 0x80;
  CHECK_THROWS_AS(decode_transaction(scalar), DecodeError);
}

TEST_CASE("varints are minimal") {
  ByteWriter w;
  w.varint(300);
  CHECK(w.bytes() == Bytes{0xac, 0x02});
  ByteReader ok(w.bytes());
  CHECK(ok.varint() == 300);
  const Bytes padded{0x80, 0x00};
  ByteReader bad(padded);
  CHECK_THROWS_AS(bad.varint(), DecodeError);
  const Bytes overflow{0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0x02};
  ByteReader big(overflow);
  CHECK_THROWS_AS(big.varint(), DecodeError);
  for (std::uint64_t v : {0ull, 127ull, 128ull, 16383ull, 16384ull, ~0ull}) {
    ByteWriter x;
    x.varint(v);
    CHECK(x.size() == varint_size(v));
    ByteReader r(x.bytes());
    CHECK(r.varint() == v);
  }
}
