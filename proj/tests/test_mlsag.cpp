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

#include "crct/mlsag.h"

using namespace crct;
using namespace crct::mlsag;

namespace {

Bytes msg(std::string_view s) { return Bytes(s.begin(), s.end()); }

std::vector<KeyVector> decoys(std::size_t count, std::size_t m, Rng& rng) {
  std::vector<KeyVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto kv = keygen(m, rng);
    kv.secrets.clear();
    out.push_back(kv);
  }
  return out;
}

}  // namespace

TEST_CASE("keygen") {
  auto rng = Rng::seeded(20);
  auto one = keygen(1, rng);
  REQUIRE(one.publics.size() == 1);
  CHECK(one.publics[0] == mul_base(one.secrets[0]));

  auto three = keygen(3, rng);
  CHECK(three.publics[0] != three.publics[1]);
  CHECK(three.publics[1] != three.publics[2]);
  CHECK(three.publics[0] != three.publics[2]);

  auto a = Rng::seeded(7), b = Rng::seeded(7);
  CHECK(keygen(2, a).publics == keygen(2, b).publics);
  CHECK_THROWS_AS(keygen(0, rng), DimensionError);
}

TEST_CASE("keyselect") {
  auto rng = Rng::seeded(21);
  const auto own = keygen(1, rng);
  const auto ring = keyselect(own, decoys(1, 1, rng), rng);
  CHECK(ring.matrix.rows() == 2);
  CHECK(ring.matrix.cols() == 1);
  CHECK(ring.key_images.size() == 1);
  CHECK(ring.matrix(*ring.secret_index, 0) == own.publics[0]);

  // The key image depends only on the signer's key.
  const auto own3 = keygen(3, rng);
  const auto r1 = keyselect(own3, decoys(4, 3, rng), rng);
  const auto r2 = keyselect(own3, decoys(2, 3, rng), rng);
  CHECK(r1.key_images == r2.key_images);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(r1.key_images[j] == own3.secrets[j] * hash_to_point(own3.publics[j]));

  CHECK_THROWS_AS(keyselect(own, {}, rng), DimensionError);
  CHECK_THROWS_AS(keyselect(own, decoys(2, 2, rng), rng), DimensionError);
}

TEST_CASE("secret index is uniform") {
  auto rng = Rng::seeded(22);
  const auto own = keygen(1, rng);
  const auto ds = decoys(3, 1, rng);
  std::array<int, 4> counts{};
  for (int t = 0; t < 2000; ++t) ++counts[*keyselect(own, ds, rng).secret_index];
  for (int c : counts) CHECK(c > 400);
}

TEST_CASE("sign/verify round trip") {
  auto rng = Rng::seeded(23);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto own = keygen(m, rng);
      const auto ring = keyselect(own, decoys(n - 1, m, rng), rng);
      const auto sig = sign(msg("tx"), ring, own.secrets, rng);
      CHECK(verify(msg("tx"), sig, ring.matrix));
      CHECK_FALSE(verify(msg("ty"), sig, ring.matrix));
      CHECK(encode(sig).size() == (n * m + 1 + m) * 32);
    }
  }
}

TEST_CASE("same keys on different messages link") {
  auto rng = Rng::seeded(24);
  const auto own = keygen(2, rng);
  const auto s1 = sign(msg("a"), keyselect(own, decoys(3, 2, rng), rng), own.secrets, rng);
  const auto s2 = sign(msg("b"), keyselect(own, decoys(5, 2, rng), rng), own.secrets, rng);
  CHECK(link(s1, s2));
  CHECK(link(s1, s1));

  const auto other = keygen(2, rng);
  const auto s3 = sign(msg("a"), keyselect(other, decoys(3, 2, rng), rng), other.secrets, rng);
  CHECK_FALSE(link(s1, s3));

  // Reusing only one of the keys is enough.
  KeyVector mixed = keygen(2, rng);
  mixed.secrets[1] = own.secrets[1];
  mixed.publics[1] = own.publics[1];
  const auto s4 = sign(msg("c"), keyselect(mixed, decoys(2, 2, rng), rng), mixed.secrets, rng);
  CHECK(link(s1, s4));
}

TEST_CASE("regression vector n=2 m=1") {
  auto rng = Rng::seeded(2024);
  const auto own = keygen(1, rng);
  const auto ring = keyselect(own, decoys(1, 1, rng), rng);
  const auto sig = sign(msg("crct"), ring, own.secrets, rng);
  CHECK(verify(msg("crct"), sig, ring.matrix));
  // Derived by tests/oracle/ristretto_oracle.py.
  CHECK(to_hex(encode(sig)) ==
        "705d05c39e6c264d5624b84dbd0160fcce736e61f4ec79378705cd10f183cc08"
        "c87055ebf5a292cff11afe6802f2a5820ab6e520c74c47767152cc95694a9f0d"
        "8fadb09b2c5ba24dfa53064c1a4b61a7dbe8ea9f9f1229131b914bad63f7160e"
        "1e4e98a69f5ed10d91a833166e55a9300065ad55ca326ceb686912def75a2f39");
}

TEST_CASE("signature is bound to the ring") {
  auto rng = Rng::seeded(25);
  const auto own = keygen(2, rng);
  const auto ring = keyselect(own, decoys(3, 2, rng), rng);
  const auto sig = sign(msg("m"), ring, own.secrets, rng);
  auto other = ring.matrix;
  const std::size_t row = (*ring.secret_index + 1) % other.rows();
  other(row, 1) = mul_base(rng.scalar());
  CHECK_FALSE(verify(msg("m"), sig, other));
}

TEST_CASE("any secret row position verifies") {
  auto rng = Rng::seeded(26);
  const std::size_t n = 4, m = 2;
  std::vector<KeyVector> keys;
  for (std::size_t i = 0; i < n; ++i) keys.push_back(keygen(m, rng));
  Matrix<Point> mat(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) mat(i, j) = keys[i].publics[j];
  for (std::size_t pi : {std::size_t{0}, n - 1}) {
    const auto ring = make_ring(mat, pi, keys[pi].secrets, m);
    CHECK(verify(msg("m"), sign(msg("m"), ring, keys[pi].secrets, rng), mat));
  }
}

TEST_CASE("single-bit mutations never verify") {
  auto rng = Rng::seeded(27);
  const auto own = keygen(2, rng);
  const auto ring = keyselect(own, decoys(2, 2, rng), rng);
  const Bytes m = msg("mutate me");
  const auto sig = sign(m, ring, own.secrets, rng);
  const Bytes wire = encode(sig);
  int accepted = 0;
  // One random bit in every byte of the signature and message.
  for (std::size_t i = 0; i < wire.size(); ++i) {
    Bytes w = wire;
    w[i] ^= static_cast<std::uint8_t>(1u << rng.uniform(8));
    try {
      accepted += verify(m, decode(w, 3, 2, 2), ring.matrix);
    } catch (const DecodeError&) {
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    Bytes mm = m;
    mm[i] ^= static_cast<std::uint8_t>(1u << rng.uniform(8));
    accepted += verify(mm, sig, ring.matrix);
  }
  CHECK(accepted == 0);
}

TEST_CASE("wrong secrets are refused or rejected") {
  auto rng = Rng::seeded(28);
  const auto own = keygen(2, rng);
  const auto ring = keyselect(own, decoys(2, 2, rng), rng);
  auto bad = own.secrets;
  bad[1] += Scalar::one();
  CHECK_THROWS_AS(sign(msg("m"), ring, bad, rng), SigningError);
  const auto forged = sign_unchecked(msg("m"), ring, bad, rng);
  CHECK_FALSE(verify(msg("m"), forged, ring.matrix));

  // Random signatures do not verify.
  Signature random;
  random.c1 = rng.scalar();
  random.responses = Matrix<Scalar>(3, 2);
  for (auto& s : random.responses.data()) s = rng.scalar();
  random.key_images = ring.key_images;
  CHECK_FALSE(verify(msg("m"), random, ring.matrix));
}

TEST_CASE("dimension checks") {
  auto rng = Rng::seeded(29);
  const auto own = keygen(2, rng);
  const auto ring = keyselect(own, decoys(2, 2, rng), rng);
  const auto sig = sign(msg("m"), ring, own.secrets, rng);
  Matrix<Point> wrong(2, 2);
  CHECK_THROWS_AS(verify(msg("m"), sig, wrong), DimensionError);
  CHECK_THROWS_AS(sign(msg("m"), ring, std::vector<Scalar>{own.secrets[0]}, rng), DimensionError);
  Ring no_index = ring;
  no_index.secret_index.reset();
  CHECK_THROWS_AS(sign(msg("m"), no_index, own.secrets, rng), DimensionError);
  CHECK_THROWS_AS(decode(encode(sig), 3, 2, 1), DecodeError);
}

TEST_CASE("partially linkable rings") {
  auto rng = Rng::seeded(30);
  const std::size_t n = 3, cols = 5, d = 2;
  std::vector<Scalar> secrets;
  Matrix<Point> mat(n, cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) mat(i, j) = mul_base(rng.scalar());
  for (std::size_t j = 0; j < cols; ++j) {
    secrets.push_back(rng.scalar());
    mat(1, j) = mul_base(secrets.back());
  }
  const auto ring = make_ring(mat, 1, secrets, d);
  const auto sig = sign(msg("m"), ring, secrets, rng);
  CHECK(sig.key_images.size() == d);
  CHECK(verify(msg("m"), sig, mat));
  CHECK(encode(sig).size() == wire_size(n, cols, d));
  CHECK(decode(encode(sig), n, cols, d) == sig);
}

TEST_CASE("key images have a single encoding") {
  auto rng = Rng::seeded(31);
  const auto own = keygen(1, rng);
  const auto ring = keyselect(own, decoys(2, 1, rng), rng);
  const auto sig = sign(msg("twin"), ring, own.secrets, rng);
  auto bytes = encode(sig);
  bytes.back() |= 0x80;
  CHECK_THROWS_AS(decode(bytes, 3, 1, 1), DecodeError);
}
