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

#pragma once

// Prime-order group used by every protocol in this library.
//
// The group is ristretto255: a prime-order quotient of Curve25519 with
// order l = 2^252 + 27742317777372353535851937790883648493. Scalars are
// integers mod l encoded as 32 little-endian bytes; points use the 32-byte
// ristretto encoding. Both encodings are canonical and are the wire format.
//
// Arithmetic is delegated to libsodium. No constant-time guarantees are made
// beyond what libsodium provides.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crct {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline constexpr std::size_t kScalarBytes = 32;
inline constexpr std::size_t kPointBytes = 32;

/// Domain-separation tags prepended to every hash input.
inline constexpr std::string_view kHashToScalarTag = "crct/h2s";
inline constexpr std::string_view kHashToPointTag = "crct/h2p";

/// Raised when bytes do not decode to a canonical scalar or valid point.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Scalar {
 public:
  /// Zero.
  Scalar() = default;

  static Scalar from_u64(std::uint64_t v);
  /// Rejects encodings >= l.
  static Scalar from_bytes(ByteView bytes);
  /// Reduces 64 bytes mod l (uniform when the input is uniform).
  static Scalar reduce_wide(ByteView bytes64);
  static Scalar zero() { return {}; }
  static Scalar one() { return from_u64(1); }

  const std::array<std::uint8_t, kScalarBytes>& bytes() const { return bytes_; }
  std::string hex() const;
  static Scalar from_hex(std::string_view hex);

  bool is_zero() const;
  /// Multiplicative inverse; the inverse of zero is zero.
  Scalar invert() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;

 private:
  std::array<std::uint8_t, kScalarBytes> bytes_{};
};

class Point {
 public:
  /// The identity element.
  Point() = default;

  static Point identity() { return {}; }
  /// Standard ristretto255 base point G.
  static const Point& base();
  /// Rejects anything that is not a canonical encoding of a group element.
  static Point from_bytes(ByteView bytes);

  const std::array<std::uint8_t, kPointBytes>& bytes() const { return bytes_; }
  std::string hex() const;
  static Point from_hex(std::string_view hex);

  bool is_identity() const;

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator-(const Point& a);
  friend Point operator*(const Scalar& s, const Point& p);
  Point& operator+=(const Point& o) { return *this = *this + o; }
  Point& operator-=(const Point& o) { return *this = *this - o; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::array<std::uint8_t, kPointBytes> bytes_{};
};

/// s * G using the fixed-base path.
Point mul_base(const Scalar& s);

/// Public parameters: G, H = hash_to_point(encode(G)).
struct GroupParams {
  Point G;
  Point H;
};
const GroupParams& params();

/// Hash arbitrary bytes to a scalar, domain-separated by kHashToScalarTag.
Scalar hash_to_scalar(ByteView data);
Scalar hash_to_scalar(std::string_view data);
/// Hash arbitrary bytes to a group element with unknown discrete log,
/// domain-separated by kHashToPointTag. Uses the ristretto255 one-way map on
/// a 64-byte SHA-512 digest.
Point hash_to_point(ByteView data);
inline Point hash_to_point(const Point& p) { return hash_to_point(ByteView(p.bytes())); }

/// Entropy source for secret scalars.
///
/// `system()` draws from the OS CSPRNG. `seeded()` expands a seed with
/// ChaCha20 and is reproducible; it exists for tests, demos and the CLI's
/// --seed flag and must not be used to protect real funds. Satisfies
/// UniformRandomBitGenerator so it can drive <random> distributions.
class Rng {
 public:
  using result_type = std::uint64_t;

  static Rng system();
  static Rng seeded(std::uint64_t seed);
  static Rng seeded(ByteView seed);

  void fill(std::span<std::uint8_t> out);
  Scalar scalar();
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  bool deterministic() const { return deterministic_; }

 private:
  Rng() = default;
  void refill();

  bool deterministic_ = false;
  std::array<std::uint8_t, 32> key_{};
  std::uint32_t counter_ = 0;
  std::array<std::uint8_t, 64> block_{};
  std::size_t used_ = 64;
};

inline Scalar random_scalar(Rng& rng) { return rng.scalar(); }

std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view hex);

}  // namespace crct
