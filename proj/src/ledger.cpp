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

#include "crct/ledger.h"

#include <sodium.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <system_error>
#include <unordered_set>

#include "crct/tx_codec.h"

namespace crct::ledger {
namespace {

constexpr std::string_view kMagic = "CRCTLDGR";
constexpr std::uint32_t kSnapshotVersion = 1;
constexpr std::size_t kChecksumBytes = crypto_hash_sha256_BYTES;

std::array<std::uint8_t, kChecksumBytes> checksum(ByteView data) {
  std::array<std::uint8_t, kChecksumBytes> out{};
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

}  // namespace

Ledger::Ledger() {
  register_colour({std::string(kNativeColour), tx::colour_id(kNativeColour), std::nullopt,
                   std::nullopt});
}

void Ledger::register_colour(ColourRecord record) {
  colour_labels_[record.id] = record.label;
  colours_[record.label] = std::move(record);
}

std::pair<Ledger, std::vector<GenesisOutput>> Ledger::genesis(const GenesisConfig& config,
                                                              Rng& rng) {
  Ledger l;
  std::vector<GenesisOutput> owned;
  const Scalar native = tx::colour_id(kNativeColour);
  for (std::size_t i = 0; i < config.outputs; ++i) {
    const Scalar x = rng.scalar();
    auto [out, secret] = tx::make_output(mul_base(x), config.amount, native, config.range_bits, rng);
    const OutputId id = l.add_genesis_output(std::move(out));
    owned.push_back({id, {x, secret.amount, secret.amount_blind, secret.colour,
                          secret.colour_blind}});
  }
  l.colours_[std::string(kNativeColour)].supply = config.outputs * config.amount;
  return {std::move(l), std::move(owned)};
}

OutputId Ledger::add_genesis_output(TxOutput out) {
  if (height_ != 0) throw std::logic_error("genesis outputs only before the first transaction");
  if (by_key_.contains(out.one_time_key)) throw std::invalid_argument("one-time key already in use");
  const OutputId id = outputs_.size();
  by_key_.emplace(out.one_time_key, id);
  outputs_.push_back(std::move(out));
  return id;
}

tx::Verdict Ledger::check(const Transaction& t) const {
  auto verdict = tx::check_transaction(t, resolver());
  if (!verdict.ok()) return verdict;

  if (t.is_issuance()) {
    const auto& info = *t.issuance;
    if (find_colour(info.label) != nullptr)
      return {tx::TxStatus::duplicate_colour, "colour '" + info.label + "' already exists"};
    if (find_colour(info.colour_opening.value) != nullptr)
      return {tx::TxStatus::duplicate_colour, "colour id already registered"};
  }

  std::set<Point> seen;
  for (const auto& image : t.spend_key_images()) {
    if (spent_.contains(image)) return {tx::TxStatus::double_spend, "key image already spent"};
    if (!seen.insert(image).second)
      return {tx::TxStatus::double_spend, "key image repeated within transaction"};
  }

  std::set<Point> keys;
  for (const auto& o : t.outputs) {
    if (by_key_.contains(o.one_time_key) || !keys.insert(o.one_time_key).second)
      return {tx::TxStatus::malformed, "one-time key already in use"};
  }
  return {};
}

ApplyResult Ledger::apply(const Transaction& t) {
  ApplyResult result;
  result.verdict = check(t);
  if (!result.verdict.ok()) return result;

  for (const auto& o : t.outputs) {
    const OutputId id = outputs_.size();
    by_key_.emplace(o.one_time_key, id);
    outputs_.push_back(o);
    result.new_outputs.push_back(id);
  }
  if (t.is_issuance()) {
    const auto& info = *t.issuance;
    std::optional<std::uint64_t> supply;
    if (info.amount_opening) {
      const auto& b = info.amount_opening->value.bytes();
      std::uint64_t v = 0;
      for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
      supply = v;
    }
    register_colour({info.label, info.colour_opening.value, result.new_outputs.front(), supply});
  } else {
    spent_.insert(t.spend_key_images().begin(), t.spend_key_images().end());
  }
  ++height_;
  return result;
}

const TxOutput* Ledger::output(OutputId id) const {
  return id < outputs_.size() ? &outputs_[id] : nullptr;
}

std::optional<OutputId> Ledger::find_output(const Point& one_time_key) const {
  auto it = by_key_.find(one_time_key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

const ColourRecord* Ledger::find_colour(std::string_view label) const {
  auto it = colours_.find(std::string(label));
  return it == colours_.end() ? nullptr : &it->second;
}

const ColourRecord* Ledger::find_colour(const Scalar& id) const {
  auto it = colour_labels_.find(id);
  return it == colour_labels_.end() ? nullptr : find_colour(it->second);
}

tx::Resolver Ledger::resolver() const {
  return [this](OutputId id) { return output(id); };
}

Matrix<tx::RingMember> Ledger::resolve(const Matrix<OutputId>& refs) const {
  Matrix<tx::RingMember> ring(refs.rows(), refs.cols());
  for (std::size_t i = 0; i < refs.rows(); ++i) {
    for (std::size_t j = 0; j < refs.cols(); ++j) {
      const auto* o = output(refs(i, j));
      if (o == nullptr) throw std::out_of_range("unknown output " + std::to_string(refs(i, j)));
      ring(i, j) = tx::RingMember::from_output(*o);
    }
  }
  return ring;
}

Matrix<OutputId> Ledger::sample_decoys(std::size_t m, std::size_t n_minus_1,
                                       std::span<const OutputId> exclude, Rng& rng) const {
  const std::unordered_set<OutputId> skip(exclude.begin(), exclude.end());
  std::vector<OutputId> pool;
  pool.reserve(outputs_.size());
  for (OutputId id = 0; id < outputs_.size(); ++id)
    if (!skip.contains(id)) pool.push_back(id);

  const std::size_t need = m * n_minus_1;
  if (need > pool.size())
    throw InsufficientOutputs("ledger has " + std::to_string(pool.size()) +
                              " eligible outputs, need " + std::to_string(need));
  // Partial Fisher-Yates: the first `need` slots become a uniform sample.
  for (std::size_t k = 0; k < need; ++k)
    std::swap(pool[k], pool[k + rng.uniform(pool.size() - k)]);

  Matrix<OutputId> refs(n_minus_1, m);
  std::copy_n(pool.begin(), need, refs.data().begin());
  return refs;
}

Bytes Ledger::serialize() const {
  ByteWriter w;
  w.raw(ByteView(reinterpret_cast<const std::uint8_t*>(kMagic.data()), kMagic.size()));
  w.u32le(kSnapshotVersion);
  w.varint(outputs_.size());
  for (const auto& o : outputs_) tx::write_output(w, o);
  w.varint(spent_.size());
  for (const auto& p : spent_) w.point(p);
  w.varint(colours_.size());
  for (const auto& [label, rec] : colours_) {
    w.str(label);
    w.scalar(rec.id);
    w.u8(rec.output ? 1 : 0);
    if (rec.output) w.varint(*rec.output);
    w.u8(rec.supply ? 1 : 0);
    if (rec.supply) w.u64le(*rec.supply);
  }
  w.varint(height_);
  w.raw(checksum(w.bytes()));
  return std::move(w).take();
}

Ledger Ledger::deserialize(ByteView bytes) {
  try {
    if (bytes.size() < kMagic.size() + 4 + kChecksumBytes)
      throw SnapshotError("snapshot is truncated");
    const auto body = bytes.first(bytes.size() - kChecksumBytes);
    const auto stored = bytes.last(kChecksumBytes);
    const auto expected = checksum(body);
    if (!std::equal(stored.begin(), stored.end(), expected.begin()))
      throw SnapshotError("snapshot checksum mismatch (truncated or corrupt file)");

    ByteReader r(body);
    const auto magic = r.raw(kMagic.size());
    if (!std::equal(magic.begin(), magic.end(), kMagic.begin()))
      throw SnapshotError("not a ledger snapshot");
    if (r.u32le() != kSnapshotVersion) throw SnapshotError("unsupported snapshot version");

    Ledger l;
    l.colours_.clear();
    l.colour_labels_.clear();
    const auto outputs = r.length(r.remaining());
    for (std::size_t i = 0; i < outputs; ++i) {
      auto o = tx::read_output(r);
      if (!l.by_key_.emplace(o.one_time_key, i).second)
        throw SnapshotError("duplicate one-time key in snapshot");
      l.outputs_.push_back(std::move(o));
    }
    const auto spent = r.length(r.remaining() / kPointBytes);
    for (std::size_t i = 0; i < spent; ++i) {
      auto p = r.point();
      if (!l.spent_.empty() && !(*l.spent_.rbegin() < p))
        throw SnapshotError("spent key images not strictly ascending");
      l.spent_.insert(p);
    }
    const auto colours = r.length(r.remaining());
    for (std::size_t i = 0; i < colours; ++i) {
      ColourRecord rec;
      rec.label = r.str(256);
      rec.id = r.scalar();
      if (rec.id != tx::colour_id(rec.label)) throw SnapshotError("colour id does not match label");
      const auto has_output = r.u8();
      if (has_output > 1) throw SnapshotError("invalid flag");
      if (has_output) {
        rec.output = r.varint();
        if (*rec.output >= l.outputs_.size()) throw SnapshotError("colour output out of range");
      }
      const auto has_supply = r.u8();
      if (has_supply > 1) throw SnapshotError("invalid flag");
      if (has_supply) rec.supply = r.u64le();
      if (l.colours_.contains(rec.label) || l.colour_labels_.contains(rec.id))
        throw SnapshotError("duplicate colour in registry");
      l.register_colour(std::move(rec));
    }
    if (!l.colours_.contains(std::string(kNativeColour)))
      throw SnapshotError("snapshot lacks the native colour");
    l.height_ = r.varint();
    r.expect_end();
    return l;
  } catch (const DecodeError& e) {
    throw SnapshotError(std::string("corrupt snapshot: ") + e.what());
  }
}

void Ledger::save(const std::filesystem::path& path) const {
  const auto bytes = serialize();
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::system_error(errno, std::generic_category(), "write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Ledger Ledger::load(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  Bytes bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

BuiltTransfer build_transfer(const Ledger& ledger, std::span<const SpendInput> inputs,
                             std::span<const Payment> payments, std::size_t ring_size,
                             std::size_t range_bits, ByteView metadata, Rng& rng) {
  if (inputs.empty()) throw std::invalid_argument("a transfer needs at least one input");
  if (payments.empty()) throw std::invalid_argument("a transfer needs at least one payment");
  if (ring_size < 2) throw std::invalid_argument("ring size must be at least 2");
  const std::size_t m = inputs.size();

  std::vector<OutputId> real;
  for (const auto& in : inputs) real.push_back(in.id);
  const auto decoys = ledger.sample_decoys(m, ring_size - 1, real, rng);

  BuiltTransfer built;
  built.secret_index = rng.uniform(ring_size);
  Matrix<OutputId> refs(ring_size, m);
  for (std::size_t i = 0, d = 0; i < ring_size; ++i) {
    if (i == built.secret_index) {
      std::copy(real.begin(), real.end(), refs.row(i).begin());
    } else {
      auto src = decoys.row(d++);
      std::copy(src.begin(), src.end(), refs.row(i).begin());
    }
  }

  std::vector<tx::InputSecret> secrets;
  for (const auto& in : inputs) secrets.push_back(in.secret);
  const Scalar colour = secrets.front().colour;
  std::vector<TxOutput> outputs;
  for (const auto& p : payments) {
    auto [out, secret] = tx::make_output(p.recipient, p.amount, colour, range_bits, rng);
    outputs.push_back(std::move(out));
    built.outputs.push_back(secret);
  }
  built.tx = tx::sign_transaction(refs, ledger.resolve(refs), built.secret_index, secrets,
                                  std::move(outputs), built.outputs, metadata, rng);
  return built;
}

}  // namespace crct::ledger
