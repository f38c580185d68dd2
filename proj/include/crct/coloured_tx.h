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

// Coloured ring confidential transactions.
//
// Every output is a triple (P, C, F): a one-time spend key, a commitment to
// the amount and a commitment to the colour (asset type). A transfer spends
// m real inputs hidden among n-1 decoy vectors and proves, with a single
// MLSAG over an n x (2m+1) key matrix, that
//   * the signer owns all m spend keys of one row,
//   * sum(inputs) - sum(outputs) commits to zero amount,
//   * each real input has the colour of the first output (pairwise, so no
//     +eps/-eps cancellation across inputs is possible).
// q-1 Schnorr proofs then show every output shares the first output's colour,
// and every output amount carries a range proof.
//
// Row i of the key matrix:
//   [P_i^1 .. P_i^m,
//    sum_j (P_i^j + C_i^j) - sum_k C_k,
//    P_i^1 + F_i^1 - F_1, .., P_i^m + F_i^m - F_1]
// Only the first m columns are linkable; their key images are the spend-key
// images used for double-spend detection.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crct/matrix.h"
#include "crct/mlsag.h"
#include "crct/pedersen.h"
#include "crct/range_proof.h"

namespace crct::tx {

using OutputId = std::uint64_t;
using pedersen::Commitment;

/// Colour scalar for a label: hash_to_scalar("crct/colour" || label).
Scalar colour_id(std::string_view label);

struct Colour {
  Scalar id;
  std::string label;

  static Colour from_label(std::string label) {
    auto id = colour_id(label);
    return {id, std::move(label)};
  }
};

struct TxOutput {
  Point one_time_key;
  Commitment amount_commitment;
  Commitment colour_commitment;
  RangeProof range_proof;

  friend bool operator==(const TxOutput&, const TxOutput&) = default;
};

/// The public triple of a ring member, copied verbatim from a prior output.
struct RingMember {
  Point spend_key;
  Commitment amount_commitment;
  Commitment colour_commitment;

  static RingMember from_output(const TxOutput& o) {
    return {o.one_time_key, o.amount_commitment, o.colour_commitment};
  }
};

/// Everything the owner of a real input knows about it.
struct InputSecret {
  Scalar spend_key;
  std::uint64_t amount = 0;
  Scalar amount_blind;
  Scalar colour;
  Scalar colour_blind;
};

/// Openings of an output, kept by sender and recipient.
struct OutputSecret {
  std::uint64_t amount = 0;
  Scalar amount_blind;
  Scalar colour;
  Scalar colour_blind;
};

/// Disclosed openings of an issuance output.
struct IssuanceInfo {
  std::string label;
  pedersen::Opening colour_opening;
  std::optional<pedersen::Opening> amount_opening;

  friend bool operator==(const IssuanceInfo&, const IssuanceInfo&) = default;
};

struct Transaction {
  /// n x m references; empty for issuance.
  Matrix<OutputId> ring_refs;
  std::vector<TxOutput> outputs;
  /// n x (2m+1) responses, m key images. Empty for issuance.
  mlsag::Signature mlsag;
  /// q-1 proofs that F_1 - F_k commits to zero, k = 2..q.
  std::vector<pedersen::SchnorrProof> colour_eq_proofs;
  std::optional<IssuanceInfo> issuance;
  Bytes metadata;

  bool is_issuance() const { return issuance.has_value(); }
  std::size_t ring_size() const { return ring_refs.rows(); }
  std::size_t input_count() const { return ring_refs.cols(); }
  /// Images of the m spend-key columns.
  const std::vector<Point>& spend_key_images() const { return mlsag.key_images; }

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

enum class TxStatus {
  accepted,
  malformed,
  unknown_ref,
  bad_range,
  bad_colour_eq,
  bad_signature,
  bad_issuance,
  double_spend,
  duplicate_colour,
};

std::string_view to_string(TxStatus s);

struct Verdict {
  TxStatus status = TxStatus::accepted;
  std::string detail;

  bool ok() const { return status == TxStatus::accepted; }
};

class ConservationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ColourMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns the referenced output or nullptr when unknown.
using Resolver = std::function<const TxOutput*(OutputId)>;

/// Fresh output for `recipient` with random blindings and a range proof.
std::pair<TxOutput, OutputSecret> make_output(const Point& recipient, std::uint64_t amount,
                                              const Scalar& colour, std::size_t range_bits,
                                              Rng& rng);

Matrix<Point> build_key_matrix(const Matrix<RingMember>& ring, std::span<const TxOutput> outputs);

/// Secrets of the signer's row, in key-matrix column order:
///   [x_1..x_m, sum x_j + sum b_in - sum b_out, x_j + u_{j,in} - u_{1,out} ..]
/// No checks are made: when amounts or colours do not balance, some returned
/// secret simply fails to match its key-matrix entry.
std::vector<Scalar> derive_row_secrets(std::span<const InputSecret> inputs,
                                       std::span<const OutputSecret> outputs);

/// Signed message: hash_to_scalar of the transaction prefix (everything
/// except the MLSAG and colour proofs).
Bytes transaction_digest(const Transaction& tx);

/// q-1 proofs for F_1 - F_k. Throws ColourMismatchError when an output colour
/// differs from the first one.
std::vector<pedersen::SchnorrProof> prove_output_colours_equal(
    std::span<const TxOutput> outputs, std::span<const OutputSecret> secrets, ByteView msg,
    Rng& rng);
bool verify_output_colours_equal(std::span<const TxOutput> outputs,
                                 std::span<const pedersen::SchnorrProof> proofs, ByteView msg);

/// Signs a transfer. `ring` must hold the resolved members of `ring_refs`
/// and row `secret_index` must be the signer's. Throws ConservationError or
/// ColourMismatchError on unbalanced amounts or colours, and
/// mlsag::SigningError if the secrets do not open the row.
Transaction sign_transaction(const Matrix<OutputId>& ring_refs, const Matrix<RingMember>& ring,
                             std::size_t secret_index, std::span<const InputSecret> inputs,
                             std::vector<TxOutput> outputs,
                             std::span<const OutputSecret> output_secrets, ByteView metadata,
                             Rng& rng);

/// Same construction with every signer-side check removed. Models a
/// dishonest sender; the result is rejected by verification unless the
/// inputs happen to balance.
Transaction sign_transaction_unchecked(const Matrix<OutputId>& ring_refs,
                                       const Matrix<RingMember>& ring, std::size_t secret_index,
                                       std::span<const InputSecret> inputs,
                                       std::vector<TxOutput> outputs,
                                       std::span<const OutputSecret> output_secrets,
                                       ByteView metadata, Rng& rng);

struct Issuance {
  Transaction tx;
  OutputSecret secret;
};

/// Input-less transaction creating `supply` units of a new colour. The colour
/// opening is always disclosed; the amount opening only if `open_amount`.
Issuance make_issuance(const std::string& label, std::uint64_t supply, const Point& recipient,
                       bool open_amount, std::size_t range_bits, Rng& rng);

/// Full public verification except key-image freshness, which needs ledger
/// state.
Verdict check_transaction(const Transaction& tx, const Resolver& resolve);
bool verify_transaction(const Transaction& tx, const Resolver& resolve);

}  // namespace crct::tx
