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

#include "crct/group.h"

#include <sodium.h>

#include <algorithm>
#include <cstring>

namespace crct {
namespace {

void ensure_sodium() {
  static const bool ok = [] { return sodium_init() >= 0; }();
  if (!ok) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

std::string to_hex(ByteView bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw DecodeError("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw DecodeError("invalid hex digit");
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

// ---- Scalar ----------------------------------------------------------------

Scalar Scalar::from_u64(std::uint64_t v) {
  Scalar s;
  for (int i = 0; i < 8; ++i) s.bytes_[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return s;
}

Scalar Scalar::from_bytes(ByteView bytes) {
  if (bytes.size() != kScalarBytes) throw DecodeError("scalar must be 32 bytes");
  std::array<std::uint8_t, 64> wide{};
  std::copy(bytes.begin(), bytes.end(), wide.begin());
  Scalar s = reduce_wide(wide);
  if (!std::equal(bytes.begin(), bytes.end(), s.bytes_.begin()))
    throw DecodeError("non-canonical scalar encoding");
  return s;
}

Scalar Scalar::reduce_wide(ByteView bytes64) {
  if (bytes64.size() != 64) throw std::invalid_argument("reduce_wide needs 64 bytes");
  Scalar s;
  crypto_core_ristretto255_scalar_reduce(s.bytes_.data(), bytes64.data());
  return s;
}

std::string Scalar::hex() const { return to_hex(bytes_); }

Scalar Scalar::from_hex(std::string_view hex) { return from_bytes(crct::from_hex(hex)); }

bool Scalar::is_zero() const { return sodium_is_zero(bytes_.data(), bytes_.size()) == 1; }

Scalar Scalar::invert() const {
  Scalar r;
  if (crypto_core_ristretto255_scalar_invert(r.bytes_.data(), bytes_.data()) != 0) return {};
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r;
  crypto_core_ristretto255_scalar_add(r.bytes_.data(), a.bytes_.data(), b.bytes_.data());
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r;
  crypto_core_ristretto255_scalar_sub(r.bytes_.data(), a.bytes_.data(), b.bytes_.data());
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  crypto_core_ristretto255_scalar_mul(r.bytes_.data(), a.bytes_.data(), b.bytes_.data());
  return r;
}

Scalar operator-(const Scalar& a) {
  Scalar r;
  crypto_core_ristretto255_scalar_negate(r.bytes_.data(), a.bytes_.data());
  return r;
}

// ---- Point -----------------------------------------------------------------

const Point& Point::base() {
  static const Point g = mul_base(Scalar::one());
  return g;
}

Point Point::from_bytes(ByteView bytes) {
  if (bytes.size() != kPointBytes) throw DecodeError("point must be 32 bytes");
  // libsodium 1.0.18 ignores bit 255 here, which would give every point a
  // second encoding (and every key image a twin).
  if (bytes[31] & 0x80) throw DecodeError("non-canonical ristretto255 encoding");
  if (crypto_core_ristretto255_is_valid_point(bytes.data()) != 1)
    throw DecodeError("invalid ristretto255 point encoding");
  Point p;
  std::copy(bytes.begin(), bytes.end(), p.bytes_.begin());
  return p;
}

std::string Point::hex() const { return to_hex(bytes_); }

Point Point::from_hex(std::string_view hex) { return from_bytes(crct::from_hex(hex)); }

bool Point::is_identity() const { return sodium_is_zero(bytes_.data(), bytes_.size()) == 1; }

// Inputs are always valid encodings, so the libsodium error returns below
// can only mean "result is the identity" (scalarmult) and are ignored.
Point operator+(const Point& a, const Point& b) {
  Point r;
  (void)crypto_core_ristretto255_add(r.bytes_.data(), a.bytes_.data(), b.bytes_.data());
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r;
  (void)crypto_core_ristretto255_sub(r.bytes_.data(), a.bytes_.data(), b.bytes_.data());
  return r;
}

Point operator-(const Point& a) { return Point::identity() - a; }

Point operator*(const Scalar& s, const Point& p) {
  ensure_sodium();
  Point r;
  if (crypto_scalarmult_ristretto255(r.bytes_.data(), s.bytes().data(), p.bytes_.data()) != 0)
    r = Point::identity();
  return r;
}

Point mul_base(const Scalar& s) {
  ensure_sodium();
  std::array<std::uint8_t, kPointBytes> out{};
  if (crypto_scalarmult_ristretto255_base(out.data(), s.bytes().data()) != 0) return {};
  return Point::from_bytes(out);
}

// ---- hashing ---------------------------------------------------------------

namespace {

std::array<std::uint8_t, 64> tagged_sha512(std::string_view tag, ByteView data) {
  crypto_hash_sha512_state st;
  crypto_hash_sha512_init(&st);
  crypto_hash_sha512_update(&st, reinterpret_cast<const unsigned char*>(tag.data()), tag.size());
  crypto_hash_sha512_update(&st, data.data(), data.size());
  std::array<std::uint8_t, 64> out{};
  crypto_hash_sha512_final(&st, out.data());
  return out;
}

}  // namespace

Scalar hash_to_scalar(ByteView data) {
  return Scalar::reduce_wide(tagged_sha512(kHashToScalarTag, data));
}

Scalar hash_to_scalar(std::string_view data) {
  return hash_to_scalar(
      ByteView(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

Point hash_to_point(ByteView data) {
  ensure_sodium();
  auto digest = tagged_sha512(kHashToPointTag, data);
  std::array<std::uint8_t, kPointBytes> out{};
  crypto_core_ristretto255_from_hash(out.data(), digest.data());
  return Point::from_bytes(out);
}

const GroupParams& params() {
  static const GroupParams p{Point::base(), hash_to_point(Point::base())};
  return p;
}

// ---- Rng -------------------------------------------------------------------

Rng Rng::system() {
  ensure_sodium();
  return Rng{};
}

Rng Rng::seeded(std::uint64_t seed) {
  std::array<std::uint8_t, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  return seeded(b);
}

Rng Rng::seeded(ByteView seed) {
  ensure_sodium();
  Rng r;
  r.deterministic_ = true;
  crypto_generichash(r.key_.data(), r.key_.size(), seed.data(), seed.size(),
                     reinterpret_cast<const unsigned char*>("crct/rng"), 8);
  return r;
}

void Rng::refill() {
  static constexpr std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  block_.fill(0);
  crypto_stream_chacha20_ietf_xor_ic(block_.data(), block_.data(), block_.size(), nonce.data(),
                                     counter_++, key_.data());
  used_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  if (!deterministic_) {
    randombytes_buf(out.data(), out.size());
    return;
  }
  for (auto& b : out) {
    if (used_ == block_.size()) refill();
    b = block_[used_++];
  }
}

Scalar Rng::scalar() {
  std::array<std::uint8_t, 64> wide{};
  fill(wide);
  return Scalar::reduce_wide(wide);
}

Rng::result_type Rng::operator()() {
  std::array<std::uint8_t, 8> b{};
  fill(b);
  result_type v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
  return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
  const std::uint64_t limit = max() - max() % bound;
  for (;;) {
    auto v = (*this)();
    if (v < limit) return v % bound;
  }
}

}  // namespace crct
