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

#include "crct/mlsag.h"

#include <algorithm>
#include <string>

#include "crct/wire.h"

namespace crct::mlsag {
namespace {

Scalar challenge(ByteView msg, std::span<const Point> l, std::span<const Point> r) {
  ByteWriter w;
  w.raw(msg);
  for (std::size_t j = 0; j < l.size(); ++j) {
    w.point(l[j]);
    if (j < r.size()) w.point(r[j]);
  }
  return hash_to_scalar(w.bytes());
}

void check_ring(const Ring& ring, std::span<const Scalar> secrets) {
  const auto& mat = ring.matrix;
  if (mat.rows() == 0 || mat.cols() == 0) throw DimensionError("empty ring");
  if (!ring.secret_index || *ring.secret_index >= mat.rows())
    throw DimensionError("ring has no valid secret index");
  if (secrets.size() != mat.cols()) throw DimensionError("need one secret per ring column");
  if (ring.key_images.size() > mat.cols())
    throw DimensionError("more key images than ring columns");
}

Signature sign_impl(ByteView msg, const Ring& ring, std::span<const Scalar> secrets, Rng& rng) {
  const auto& mat = ring.matrix;
  const std::size_t n = mat.rows();
  const std::size_t cols = mat.cols();
  const std::size_t d = ring.key_images.size();
  const std::size_t pi = *ring.secret_index;

  Signature sig;
  sig.responses = Matrix<Scalar>(n, cols);
  sig.key_images = ring.key_images;

  std::vector<Scalar> c(n);
  std::vector<Scalar> alpha(cols);
  std::vector<Point> l(cols), r(d);
  for (std::size_t j = 0; j < cols; ++j) {
    alpha[j] = rng.scalar();
    l[j] = mul_base(alpha[j]);
    if (j < d) r[j] = alpha[j] * hash_to_point(mat(pi, j));
  }
  std::size_t i = (pi + 1) % n;
  c[i] = challenge(msg, l, r);
  while (i != pi) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar s = rng.scalar();
      sig.responses(i, j) = s;
      l[j] = mul_base(s) + c[i] * mat(i, j);
      if (j < d) r[j] = s * hash_to_point(mat(i, j)) + c[i] * ring.key_images[j];
    }
    const std::size_t next = (i + 1) % n;
    c[next] = challenge(msg, l, r);
    i = next;
  }
  for (std::size_t j = 0; j < cols; ++j) sig.responses(pi, j) = alpha[j] - c[pi] * secrets[j];
  sig.c1 = c[0];
  return sig;
}

}  // namespace

KeyVector keygen(std::size_t m, Rng& rng) {
  if (m == 0) throw DimensionError("key vector needs at least one key");
  KeyVector kv;
  for (std::size_t j = 0; j < m; ++j) {
    kv.secrets.push_back(rng.scalar());
    kv.publics.push_back(mul_base(kv.secrets.back()));
  }
  return kv;
}

Point key_image(const Scalar& secret, const Point& public_key) {
  return secret * hash_to_point(public_key);
}

Ring keyselect(const KeyVector& own, std::span<const KeyVector> decoys, Rng& rng) {
  const std::size_t m = own.publics.size();
  if (m == 0) throw DimensionError("key vector is empty");
  if (own.secrets.size() != m) throw DimensionError("own key vector lacks secrets");
  if (decoys.empty()) throw DimensionError("a ring needs at least one decoy vector");
  for (const auto& d : decoys)
    if (d.publics.size() != m) throw DimensionError("decoy vector length differs from own");

  const std::size_t n = decoys.size() + 1;
  const std::size_t pi = rng.uniform(n);
  Matrix<Point> mat(n, m);
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    const auto& src = i == pi ? own.publics : decoys[k++].publics;
    std::copy(src.begin(), src.end(), mat.row(i).begin());
  }
  return make_ring(std::move(mat), pi, own.secrets, m);
}

Ring make_ring(Matrix<Point> matrix, std::size_t secret_index, std::span<const Scalar> secrets,
               std::size_t linkable_columns) {
  if (secret_index >= matrix.rows()) throw DimensionError("secret index outside ring");
  if (secrets.size() != matrix.cols()) throw DimensionError("need one secret per ring column");
  if (linkable_columns > matrix.cols()) throw DimensionError("too many linkable columns");
  Ring ring;
  ring.secret_index = secret_index;
  for (std::size_t j = 0; j < linkable_columns; ++j)
    ring.key_images.push_back(key_image(secrets[j], matrix(secret_index, j)));
  ring.matrix = std::move(matrix);
  return ring;
}

Signature sign(ByteView msg, const Ring& ring, std::span<const Scalar> secrets, Rng& rng) {
  check_ring(ring, secrets);
  const std::size_t pi = *ring.secret_index;
  for (std::size_t j = 0; j < secrets.size(); ++j) {
    if (mul_base(secrets[j]) != ring.matrix(pi, j))
      throw SigningError("secret key does not match ring column " + std::to_string(j));
  }
  for (std::size_t j = 0; j < ring.key_images.size(); ++j) {
    if (key_image(secrets[j], ring.matrix(pi, j)) != ring.key_images[j])
      throw SigningError("key image does not match secret for column " + std::to_string(j));
  }
  return sign_impl(msg, ring, secrets, rng);
}

Signature sign_unchecked(ByteView msg, const Ring& ring, std::span<const Scalar> secrets,
                         Rng& rng) {
  check_ring(ring, secrets);
  return sign_impl(msg, ring, secrets, rng);
}

bool verify(ByteView msg, const Signature& sig, const Matrix<Point>& matrix) {
  const std::size_t n = matrix.rows();
  const std::size_t cols = matrix.cols();
  const std::size_t d = sig.key_images.size();
  if (n == 0 || cols == 0) throw DimensionError("empty ring");
  if (sig.responses.rows() != n || sig.responses.cols() != cols)
    throw DimensionError("response matrix does not match ring dimensions");
  if (d > cols) throw DimensionError("more key images than ring columns");

  std::vector<Point> l(cols), r(d);
  Scalar c = sig.c1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& s = sig.responses(i, j);
      l[j] = mul_base(s) + c * matrix(i, j);
      if (j < d) r[j] = s * hash_to_point(matrix(i, j)) + c * sig.key_images[j];
    }
    c = challenge(msg, l, r);
  }
  return c == sig.c1;
}

bool link(const Signature& a, const Signature& b) {
  for (const auto& x : a.key_images)
    for (const auto& y : b.key_images)
      if (x == y) return true;
  return false;
}

std::size_t wire_size(std::size_t rows, std::size_t cols, std::size_t linkable_columns) {
  return (rows * cols + 1 + linkable_columns) * 32;
}

Bytes encode(const Signature& sig) {
  ByteWriter w;
  w.scalar(sig.c1);
  for (const auto& s : sig.responses.data()) w.scalar(s);
  for (const auto& p : sig.key_images) w.point(p);
  return std::move(w).take();
}

Signature decode(ByteView bytes, std::size_t rows, std::size_t cols,
                 std::size_t linkable_columns) {
  if (linkable_columns > cols) throw DimensionError("too many linkable columns");
  if (bytes.size() != wire_size(rows, cols, linkable_columns))
    throw DecodeError("signature length does not match ring dimensions");
  ByteReader r(bytes);
  Signature sig;
  sig.c1 = r.scalar();
  sig.responses = Matrix<Scalar>(rows, cols);
  for (auto& s : sig.responses.data()) s = r.scalar();
  for (std::size_t j = 0; j < linkable_columns; ++j) sig.key_images.push_back(r.point());
  r.expect_end();
  return sig;
}

}  // namespace crct::mlsag
