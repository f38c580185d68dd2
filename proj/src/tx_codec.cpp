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

#include "crct/tx_codec.h"

namespace crct::tx {
namespace {

constexpr std::uint64_t kMaxOutputs = 1024;
constexpr std::uint64_t kMaxRingRows = 4096;
constexpr std::uint64_t kMaxInputs = 256;
constexpr std::uint64_t kMaxMetadata = 1 << 16;
constexpr std::uint64_t kMaxLabel = 256;

enum Kind : std::uint8_t { kTransfer = 0, kIssuance = 1 };

void write_prefix(ByteWriter& w, const Transaction& tx) {
  w.u8(kTxFormatVersion);
  w.u8(tx.is_issuance() ? kIssuance : kTransfer);
  w.blob(tx.metadata);
  w.varint(tx.outputs.size());
  for (const auto& o : tx.outputs) write_output(w, o);
  if (tx.is_issuance()) {
    const auto& info = *tx.issuance;
    w.str(info.label);
    w.scalar(info.colour_opening.value);
    w.scalar(info.colour_opening.blinding);
    w.u8(info.amount_opening ? 1 : 0);
    if (info.amount_opening) {
      w.scalar(info.amount_opening->value);
      w.scalar(info.amount_opening->blinding);
    }
  } else {
    w.varint(tx.ring_refs.rows());
    w.varint(tx.ring_refs.cols());
    for (auto id : tx.ring_refs.data()) w.varint(id);
  }
}

nlohmann::json scalars_json(std::span<const Scalar> v) {
  auto a = nlohmann::json::array();
  for (const auto& s : v) a.push_back(s.hex());
  return a;
}

Scalar scalar_json(const nlohmann::json& j) { return Scalar::from_hex(j.get<std::string>()); }
Point point_json(const nlohmann::json& j) { return Point::from_hex(j.get<std::string>()); }

}  // namespace

void write_range_proof(ByteWriter& w, const RangeProof& p) {
  w.varint(p.width());
  for (const auto& c : p.bit_commitments) w.point(c.point);
  for (const auto& b : p.bit_proofs) {
    w.scalar(b.c0);
    w.scalar(b.s0);
    w.scalar(b.s1);
  }
}

RangeProof read_range_proof(ByteReader& r) {
  const auto width = r.length(kMaxRangeBits);
  if (width == 0) throw DecodeError("range proof width is zero");
  RangeProof p;
  for (std::size_t k = 0; k < width; ++k) p.bit_commitments.push_back({r.point()});
  for (std::size_t k = 0; k < width; ++k) {
    BitProof b;
    b.c0 = r.scalar();
    b.s0 = r.scalar();
    b.s1 = r.scalar();
    p.bit_proofs.push_back(b);
  }
  return p;
}

void write_output(ByteWriter& w, const TxOutput& o) {
  w.point(o.one_time_key);
  w.point(o.amount_commitment.point);
  w.point(o.colour_commitment.point);
  write_range_proof(w, o.range_proof);
}

TxOutput read_output(ByteReader& r) {
  TxOutput o;
  o.one_time_key = r.point();
  o.amount_commitment.point = r.point();
  o.colour_commitment.point = r.point();
  o.range_proof = read_range_proof(r);
  return o;
}

Bytes transaction_prefix(const Transaction& tx) {
  ByteWriter w;
  write_prefix(w, tx);
  return std::move(w).take();
}

Bytes encode_transaction(const Transaction& tx) {
  ByteWriter w;
  write_prefix(w, tx);
  if (!tx.is_issuance()) {
    w.raw(mlsag::encode(tx.mlsag));
    for (const auto& p : tx.colour_eq_proofs) {
      w.scalar(p.challenge);
      w.scalar(p.response);
    }
  }
  return std::move(w).take();
}

Transaction decode_transaction(ByteView bytes) {
  ByteReader r(bytes);
  if (r.u8() != kTxFormatVersion) throw DecodeError("unsupported transaction version");
  const auto kind = r.u8();
  if (kind != kTransfer && kind != kIssuance) throw DecodeError("unknown transaction kind");

  Transaction tx;
  tx.metadata = r.blob(kMaxMetadata);
  const auto q = r.length(kMaxOutputs);
  for (std::size_t k = 0; k < q; ++k) tx.outputs.push_back(read_output(r));

  if (kind == kIssuance) {
    IssuanceInfo info;
    info.label = r.str(kMaxLabel);
    info.colour_opening.value = r.scalar();
    info.colour_opening.blinding = r.scalar();
    const auto has_amount = r.u8();
    if (has_amount > 1) throw DecodeError("invalid amount flag");
    if (has_amount) {
      pedersen::Opening o;
      o.value = r.scalar();
      o.blinding = r.scalar();
      info.amount_opening = o;
    }
    tx.issuance = std::move(info);
  } else {
    const auto n = r.length(kMaxRingRows);
    const auto m = r.length(kMaxInputs);
    tx.ring_refs = Matrix<OutputId>(n, m);
    for (auto& id : tx.ring_refs.data()) id = r.varint();
    const auto sig_len = mlsag::wire_size(n, 2 * m + 1, m);
    tx.mlsag = mlsag::decode(r.raw(sig_len), n, 2 * m + 1, m);
    for (std::size_t k = 0; k + 1 < q; ++k) {
      pedersen::SchnorrProof p;
      p.challenge = r.scalar();
      p.response = r.scalar();
      tx.colour_eq_proofs.push_back(p);
    }
  }
  r.expect_end();
  return tx;
}

nlohmann::json to_json(const TxOutput& o) {
  nlohmann::json bits = nlohmann::json::array();
  for (std::size_t k = 0; k < o.range_proof.width(); ++k) {
    const auto& b = o.range_proof.bit_proofs[k];
    bits.push_back({{"commitment", o.range_proof.bit_commitments[k].point.hex()},
                    {"c0", b.c0.hex()},
                    {"s0", b.s0.hex()},
                    {"s1", b.s1.hex()}});
  }
  return {{"one_time_key", o.one_time_key.hex()},
          {"amount_commitment", o.amount_commitment.point.hex()},
          {"colour_commitment", o.colour_commitment.point.hex()},
          {"range_proof", {{"width", o.range_proof.width()}, {"bits", bits}}}};
}

TxOutput output_from_json(const nlohmann::json& j) {
  TxOutput o;
  o.one_time_key = point_json(j.at("one_time_key"));
  o.amount_commitment.point = point_json(j.at("amount_commitment"));
  o.colour_commitment.point = point_json(j.at("colour_commitment"));
  const auto& rp = j.at("range_proof");
  const auto& bits = rp.at("bits");
  if (bits.size() != rp.at("width").get<std::size_t>())
    throw DecodeError("range proof width does not match bit count");
  for (const auto& b : bits) {
    o.range_proof.bit_commitments.push_back({point_json(b.at("commitment"))});
    o.range_proof.bit_proofs.push_back(
        {scalar_json(b.at("c0")), scalar_json(b.at("s0")), scalar_json(b.at("s1"))});
  }
  return o;
}

nlohmann::json to_json(const Transaction& tx) {
  nlohmann::json j;
  j["version"] = kTxFormatVersion;
  j["kind"] = tx.is_issuance() ? "issuance" : "transfer";
  j["metadata"] = to_hex(tx.metadata);
  j["outputs"] = nlohmann::json::array();
  for (const auto& o : tx.outputs) j["outputs"].push_back(to_json(o));
  if (tx.is_issuance()) {
    const auto& info = *tx.issuance;
    j["issuance"] = {{"label", info.label},
                     {"colour", info.colour_opening.value.hex()},
                     {"colour_blind", info.colour_opening.blinding.hex()}};
    if (info.amount_opening) {
      j["issuance"]["amount"] = info.amount_opening->value.hex();
      j["issuance"]["amount_blind"] = info.amount_opening->blinding.hex();
    }
    return j;
  }
  auto refs = nlohmann::json::array();
  for (std::size_t i = 0; i < tx.ring_refs.rows(); ++i) {
    auto row = tx.ring_refs.row(i);
    refs.push_back(std::vector<OutputId>(row.begin(), row.end()));
  }
  j["ring_refs"] = refs;
  auto responses = nlohmann::json::array();
  for (std::size_t i = 0; i < tx.mlsag.responses.rows(); ++i)
    responses.push_back(scalars_json(tx.mlsag.responses.row(i)));
  auto images = nlohmann::json::array();
  for (const auto& p : tx.mlsag.key_images) images.push_back(p.hex());
  j["mlsag"] = {{"c1", tx.mlsag.c1.hex()}, {"responses", responses}, {"key_images", images}};
  auto proofs = nlohmann::json::array();
  for (const auto& p : tx.colour_eq_proofs)
    proofs.push_back({{"challenge", p.challenge.hex()}, {"response", p.response.hex()}});
  j["colour_eq_proofs"] = proofs;
  return j;
}

Transaction transaction_from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kTxFormatVersion)
    throw DecodeError("unsupported transaction version");
  Transaction tx;
  tx.metadata = from_hex(j.at("metadata").get<std::string>());
  for (const auto& o : j.at("outputs")) tx.outputs.push_back(output_from_json(o));
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "issuance") {
    const auto& is = j.at("issuance");
    IssuanceInfo info;
    info.label = is.at("label").get<std::string>();
    info.colour_opening = {scalar_json(is.at("colour")), scalar_json(is.at("colour_blind"))};
    if (is.contains("amount"))
      info.amount_opening =
          pedersen::Opening{scalar_json(is.at("amount")), scalar_json(is.at("amount_blind"))};
    tx.issuance = std::move(info);
    return tx;
  }
  if (kind != "transfer") throw DecodeError("unknown transaction kind");

  const auto& refs = j.at("ring_refs");
  const std::size_t n = refs.size();
  const std::size_t m = n == 0 ? 0 : refs.at(0).size();
  tx.ring_refs = Matrix<OutputId>(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (refs[i].size() != m) throw DecodeError("ragged ring_refs");
    for (std::size_t c = 0; c < m; ++c) tx.ring_refs(i, c) = refs[i][c].get<OutputId>();
  }
  const auto& sig = j.at("mlsag");
  tx.mlsag.c1 = scalar_json(sig.at("c1"));
  const auto& responses = sig.at("responses");
  const std::size_t cols = responses.empty() ? 0 : responses.at(0).size();
  tx.mlsag.responses = Matrix<Scalar>(responses.size(), cols);
  for (std::size_t i = 0; i < responses.size(); ++i) {
    if (responses[i].size() != cols) throw DecodeError("ragged response matrix");
    for (std::size_t c = 0; c < cols; ++c) tx.mlsag.responses(i, c) = scalar_json(responses[i][c]);
  }
  for (const auto& p : sig.at("key_images")) tx.mlsag.key_images.push_back(point_json(p));
  for (const auto& p : j.at("colour_eq_proofs"))
    tx.colour_eq_proofs.push_back({scalar_json(p.at("challenge")), scalar_json(p.at("response"))});
  return tx;
}

}  // namespace crct::tx
