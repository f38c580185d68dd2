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

#include "crct/coloured_tx.h"

#include <algorithm>

#include "crct/tx_codec.h"

namespace crct::tx {
namespace {

using pedersen::SchnorrProof;

std::vector<SchnorrProof> colour_proofs(std::span<const TxOutput> outputs,
                                        std::span<const OutputSecret> secrets, ByteView msg,
                                        Rng& rng, bool checked) {
  if (outputs.size() != secrets.size())
    throw mlsag::DimensionError("need one output secret per output");
  std::vector<SchnorrProof> proofs;
  for (std::size_t k = 1; k < outputs.size(); ++k) {
    if (checked && secrets[k].colour != secrets[0].colour)
      throw ColourMismatchError("output " + std::to_string(k) + " has a different colour");
    const Commitment diff{outputs[0].colour_commitment.point - outputs[k].colour_commitment.point};
    proofs.push_back(
        pedersen::prove_zero(diff, secrets[0].colour_blind - secrets[k].colour_blind, msg, rng));
  }
  return proofs;
}

void check_balance(std::span<const InputSecret> inputs, std::span<const OutputSecret> outputs) {
  unsigned __int128 in = 0, out = 0;
  for (const auto& i : inputs) in += i.amount;
  for (const auto& o : outputs) out += o.amount;
  if (in != out) throw ConservationError("input and output amounts differ");
  const Scalar& colour = outputs.front().colour;
  for (std::size_t j = 0; j < inputs.size(); ++j)
    if (inputs[j].colour != colour)
      throw ColourMismatchError("input " + std::to_string(j) + " has a different colour");
}

Transaction sign_impl(const Matrix<OutputId>& ring_refs, const Matrix<RingMember>& ring,
                      std::size_t secret_index, std::span<const InputSecret> inputs,
                      std::vector<TxOutput> outputs, std::span<const OutputSecret> output_secrets,
                      ByteView metadata, Rng& rng, bool checked) {
  const std::size_t n = ring.rows();
  const std::size_t m = ring.cols();
  if (ring_refs.rows() != n || ring_refs.cols() != m)
    throw mlsag::DimensionError("ring references and ring members differ in shape");
  if (n < 2) throw mlsag::DimensionError("a ring needs at least two rows");
  if (m == 0) throw mlsag::DimensionError("a transfer needs at least one input");
  if (secret_index >= n) throw mlsag::DimensionError("secret index outside ring");
  if (inputs.size() != m) throw mlsag::DimensionError("need one input secret per ring column");
  if (outputs.empty()) throw mlsag::DimensionError("a transfer needs at least one output");
  if (output_secrets.size() != outputs.size())
    throw mlsag::DimensionError("need one output secret per output");

  if (checked) {
    check_balance(inputs, output_secrets);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& member = ring(secret_index, j);
      if (!pedersen::verify_opening(member.amount_commitment,
                                    {Scalar::from_u64(inputs[j].amount), inputs[j].amount_blind}) ||
          !pedersen::verify_opening(member.colour_commitment,
                                    {inputs[j].colour, inputs[j].colour_blind}))
        throw mlsag::SigningError("input " + std::to_string(j) + " openings do not match ring");
    }
  }

  Transaction tx;
  tx.ring_refs = ring_refs;
  tx.outputs = std::move(outputs);
  tx.metadata.assign(metadata.begin(), metadata.end());
  const Bytes msg = transaction_digest(tx);

  tx.colour_eq_proofs = colour_proofs(tx.outputs, output_secrets, msg, rng, checked);
  const auto secrets = derive_row_secrets(inputs, output_secrets);
  const auto mring = mlsag::make_ring(build_key_matrix(ring, tx.outputs), secret_index, secrets, m);
  tx.mlsag = checked ? mlsag::sign(msg, mring, secrets, rng)
                     : mlsag::sign_unchecked(msg, mring, secrets, rng);
  return tx;
}

bool fits_u64(const Scalar& s) {
  const auto& b = s.bytes();
  return std::all_of(b.begin() + 8, b.end(), [](std::uint8_t v) { return v == 0; });
}

Verdict check_issuance(const Transaction& tx) {
  const auto& info = *tx.issuance;
  if (tx.outputs.size() != 1 || !tx.ring_refs.empty() || !tx.mlsag.responses.empty() ||
      !tx.mlsag.key_images.empty() || !tx.colour_eq_proofs.empty())
    return {TxStatus::malformed, "issuance must have exactly one output and no inputs"};
  if (info.label.empty()) return {TxStatus::bad_issuance, "empty colour label"};
  const auto& out = tx.outputs.front();
  if (info.colour_opening.value != colour_id(info.label))
    return {TxStatus::bad_issuance, "disclosed colour is not the label's colour id"};
  if (!pedersen::verify_opening(out.colour_commitment, info.colour_opening))
    return {TxStatus::bad_issuance, "colour opening does not match commitment"};
  if (info.amount_opening) {
    if (!fits_u64(info.amount_opening->value))
      return {TxStatus::bad_issuance, "disclosed supply exceeds 64 bits"};
    if (!pedersen::verify_opening(out.amount_commitment, *info.amount_opening))
      return {TxStatus::bad_issuance, "amount opening does not match commitment"};
  }
  if (!range_verify(out.amount_commitment, out.range_proof))
    return {TxStatus::bad_range, "range proof of issuance output fails"};
  return {};
}

}  // namespace

Scalar colour_id(std::string_view label) {
  Bytes data;
  constexpr std::string_view tag = "crct/colour";
  data.insert(data.end(), tag.begin(), tag.end());
  data.insert(data.end(), label.begin(), label.end());
  return hash_to_scalar(data);
}

std::string_view to_string(TxStatus s) {
  switch (s) {
    case TxStatus::accepted: return "accepted";
    case TxStatus::malformed: return "malformed";
    case TxStatus::unknown_ref: return "unknown-ref";
    case TxStatus::bad_range: return "bad-range";
    case TxStatus::bad_colour_eq: return "bad-colour-eq";
    case TxStatus::bad_signature: return "bad-signature";
    case TxStatus::bad_issuance: return "bad-issuance";
    case TxStatus::double_spend: return "double-spend";
    case TxStatus::duplicate_colour: return "duplicate-colour";
  }
  return "unknown";
}

std::pair<TxOutput, OutputSecret> make_output(const Point& recipient, std::uint64_t amount,
                                              const Scalar& colour, std::size_t range_bits,
                                              Rng& rng) {
  OutputSecret secret{amount, rng.scalar(), colour, rng.scalar()};
  TxOutput out;
  out.one_time_key = recipient;
  out.amount_commitment = pedersen::commit(Scalar::from_u64(amount), secret.amount_blind);
  out.colour_commitment = pedersen::commit(colour, secret.colour_blind);
  out.range_proof = range_prove(amount, secret.amount_blind, range_bits, rng);
  return {std::move(out), secret};
}

Matrix<Point> build_key_matrix(const Matrix<RingMember>& ring, std::span<const TxOutput> outputs) {
  const std::size_t n = ring.rows();
  const std::size_t m = ring.cols();
  if (n == 0 || m == 0) throw mlsag::DimensionError("empty ring");
  if (outputs.empty()) throw mlsag::DimensionError("a transfer needs at least one output");

  Point out_sum;
  for (const auto& o : outputs) out_sum += o.amount_commitment.point;
  const Point& first_colour = outputs.front().colour_commitment.point;

  Matrix<Point> keys(n, 2 * m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Point amount_col = -out_sum;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& member = ring(i, j);
      keys(i, j) = member.spend_key;
      amount_col += member.spend_key + member.amount_commitment.point;
      keys(i, m + 1 + j) = member.spend_key + member.colour_commitment.point - first_colour;
    }
    keys(i, m) = amount_col;
  }
  return keys;
}

std::vector<Scalar> derive_row_secrets(std::span<const InputSecret> inputs,
                                       std::span<const OutputSecret> outputs) {
  if (inputs.empty() || outputs.empty())
    throw mlsag::DimensionError("need at least one input and one output");
  const std::size_t m = inputs.size();
  std::vector<Scalar> secrets(2 * m + 1);
  Scalar amount_secret;
  for (std::size_t j = 0; j < m; ++j) {
    secrets[j] = inputs[j].spend_key;
    amount_secret += inputs[j].spend_key + inputs[j].amount_blind;
    secrets[m + 1 + j] = inputs[j].spend_key + inputs[j].colour_blind - outputs[0].colour_blind;
  }
  for (const auto& o : outputs) amount_secret -= o.amount_blind;
  secrets[m] = amount_secret;
  return secrets;
}

Bytes transaction_digest(const Transaction& tx) {
  ByteWriter w;
  w.str("crct/txmsg");
  w.raw(transaction_prefix(tx));
  const auto s = hash_to_scalar(w.bytes());
  return Bytes(s.bytes().begin(), s.bytes().end());
}

std::vector<pedersen::SchnorrProof> prove_output_colours_equal(
    std::span<const TxOutput> outputs, std::span<const OutputSecret> secrets, ByteView msg,
    Rng& rng) {
  return colour_proofs(outputs, secrets, msg, rng, true);
}

bool verify_output_colours_equal(std::span<const TxOutput> outputs,
                                 std::span<const pedersen::SchnorrProof> proofs, ByteView msg) {
  if (outputs.empty() || proofs.size() != outputs.size() - 1) return false;
  for (std::size_t k = 1; k < outputs.size(); ++k) {
    const Commitment diff{outputs[0].colour_commitment.point - outputs[k].colour_commitment.point};
    if (!pedersen::verify_zero(diff, proofs[k - 1], msg)) return false;
  }
  return true;
}

Transaction sign_transaction(const Matrix<OutputId>& ring_refs, const Matrix<RingMember>& ring,
                             std::size_t secret_index, std::span<const InputSecret> inputs,
                             std::vector<TxOutput> outputs,
                             std::span<const OutputSecret> output_secrets, ByteView metadata,
                             Rng& rng) {
  return sign_impl(ring_refs, ring, secret_index, inputs, std::move(outputs), output_secrets,
                   metadata, rng, true);
}

Transaction sign_transaction_unchecked(const Matrix<OutputId>& ring_refs,
                                       const Matrix<RingMember>& ring, std::size_t secret_index,
                                       std::span<const InputSecret> inputs,
                                       std::vector<TxOutput> outputs,
                                       std::span<const OutputSecret> output_secrets,
                                       ByteView metadata, Rng& rng) {
  return sign_impl(ring_refs, ring, secret_index, inputs, std::move(outputs), output_secrets,
                   metadata, rng, false);
}

Issuance make_issuance(const std::string& label, std::uint64_t supply, const Point& recipient,
                       bool open_amount, std::size_t range_bits, Rng& rng) {
  const Scalar colour = colour_id(label);
  auto [out, secret] = make_output(recipient, supply, colour, range_bits, rng);
  Issuance result;
  result.tx.outputs.push_back(std::move(out));
  IssuanceInfo info{label, {colour, secret.colour_blind}, std::nullopt};
  if (open_amount) info.amount_opening = pedersen::Opening{Scalar::from_u64(supply), secret.amount_blind};
  result.tx.issuance = std::move(info);
  result.secret = secret;
  return result;
}

Verdict check_transaction(const Transaction& tx, const Resolver& resolve) {
  if (tx.is_issuance()) return check_issuance(tx);

  const std::size_t n = tx.ring_refs.rows();
  const std::size_t m = tx.ring_refs.cols();
  const std::size_t q = tx.outputs.size();
  if (n < 2 || m == 0 || q == 0) return {TxStatus::malformed, "transfer needs n>=2, m>=1, q>=1"};
  if (tx.mlsag.responses.rows() != n || tx.mlsag.responses.cols() != 2 * m + 1 ||
      tx.mlsag.key_images.size() != m)
    return {TxStatus::malformed, "signature dimensions do not match the ring"};
  if (tx.colour_eq_proofs.size() != q - 1)
    return {TxStatus::malformed, "expected one colour proof per extra output"};

  Matrix<RingMember> ring(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const TxOutput* o = resolve(tx.ring_refs(i, j));
      if (o == nullptr)
        return {TxStatus::unknown_ref, "unknown output " + std::to_string(tx.ring_refs(i, j))};
      ring(i, j) = RingMember::from_output(*o);
    }
  }
  for (std::size_t k = 0; k < q; ++k)
    if (!range_verify(tx.outputs[k].amount_commitment, tx.outputs[k].range_proof))
      return {TxStatus::bad_range, "range proof of output " + std::to_string(k) + " fails"};

  const Bytes msg = transaction_digest(tx);
  if (!verify_output_colours_equal(tx.outputs, tx.colour_eq_proofs, msg))
    return {TxStatus::bad_colour_eq, "output colours are not provably equal"};
  if (!mlsag::verify(msg, tx.mlsag, build_key_matrix(ring, tx.outputs)))
    return {TxStatus::bad_signature, "ring signature does not verify"};
  return {};
}

bool verify_transaction(const Transaction& tx, const Resolver& resolve) {
  return check_transaction(tx, resolve).ok();
}

}  // namespace crct::tx
