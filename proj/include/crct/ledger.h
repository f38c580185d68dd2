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

// Append-only ledger: output store, spent key images and colour registry.
//
// apply() is atomic: a rejected transaction leaves the state untouched.
// The ledger is single-writer; callers serialise apply() and may read from
// any number of threads while no apply() is running.
//
// Snapshot file layout:
//   "CRCTLDGR" | u32le version (=1)
//   | varint count | outputs                      (see tx_codec.h)
//   | varint count | spent key images, ascending
//   | varint count | colour records, by label:
//       label | colour id | u8 has_output [| varint id] | u8 has_supply [| u64le supply]
//   | varint height
//   | 32-byte SHA-256 of everything before it

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crct/coloured_tx.h"

namespace crct::ledger {

using tx::OutputId;
using tx::Transaction;
using tx::TxOutput;

inline constexpr std::string_view kNativeColour = "native";

struct ColourRecord {
  std::string label;
  Scalar id;
  /// Issuance output; genesis colours have none.
  std::optional<OutputId> output;
  /// Set when the supply was disclosed.
  std::optional<std::uint64_t> supply;

  friend bool operator==(const ColourRecord&, const ColourRecord&) = default;
};

struct GenesisConfig {
  std::size_t outputs = 16;
  std::uint64_t amount = 1000;
  std::size_t range_bits = tx::kDefaultRangeBits;
};

/// A pre-funded genesis output together with everything needed to spend it.
struct GenesisOutput {
  OutputId id;
  tx::InputSecret secret;
};

struct ApplyResult {
  tx::Verdict verdict;
  std::vector<OutputId> new_outputs;

  bool accepted() const { return verdict.ok(); }
};

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientOutputs : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Ledger {
 public:
  /// Empty ledger with only the native colour registered.
  Ledger();

  /// Ledger seeded with `config.outputs` native-colour outputs of
  /// `config.amount` each, so that decoys exist from the start.
  static std::pair<Ledger, std::vector<GenesisOutput>> genesis(const GenesisConfig& config,
                                                               Rng& rng);

  /// Appends an output without a transaction. Genesis only: throws
  /// std::logic_error once any transaction has been applied.
  OutputId add_genesis_output(TxOutput out);

  /// Full verification plus double-spend and colour-uniqueness checks.
  tx::Verdict check(const Transaction& tx) const;
  ApplyResult apply(const Transaction& tx);

  const TxOutput* output(OutputId id) const;
  std::optional<OutputId> find_output(const Point& one_time_key) const;
  std::size_t output_count() const { return outputs_.size(); }
  std::uint64_t height() const { return height_; }
  bool is_spent(const Point& key_image) const { return spent_.contains(key_image); }
  const std::set<Point>& spent_images() const { return spent_; }

  const std::map<std::string, ColourRecord>& colours() const { return colours_; }
  const ColourRecord* find_colour(std::string_view label) const;
  const ColourRecord* find_colour(const Scalar& id) const;

  tx::Resolver resolver() const;
  Matrix<tx::RingMember> resolve(const Matrix<OutputId>& refs) const;

  /// (n-1) x m distinct outputs drawn uniformly from everything not in
  /// `exclude`. Throws InsufficientOutputs when the ledger is too small.
  Matrix<OutputId> sample_decoys(std::size_t m, std::size_t n_minus_1,
                                 std::span<const OutputId> exclude, Rng& rng) const;

  Bytes serialize() const;
  static Ledger deserialize(ByteView bytes);
  void save(const std::filesystem::path& path) const;
  static Ledger load(const std::filesystem::path& path);

  friend bool operator==(const Ledger&, const Ledger&) = default;

 private:
  std::vector<TxOutput> outputs_;
  std::map<Point, OutputId> by_key_;
  std::set<Point> spent_;
  std::map<std::string, ColourRecord> colours_;
  std::map<Scalar, std::string> colour_labels_;
  std::uint64_t height_ = 0;

  void register_colour(ColourRecord record);
};

/// A real input the caller can spend.
struct SpendInput {
  OutputId id;
  tx::InputSecret secret;
};

struct Payment {
  Point recipient;
  std::uint64_t amount;
};

struct BuiltTransfer {
  Transaction tx;
  std::vector<tx::OutputSecret> outputs;
  std::size_t secret_index;
};

/// Samples decoys, places the real inputs at a random row and signs a
/// transfer paying `payments` in the colour of the inputs.
BuiltTransfer build_transfer(const Ledger& ledger, std::span<const SpendInput> inputs,
                             std::span<const Payment> payments, std::size_t ring_size,
                             std::size_t range_bits, ByteView metadata, Rng& rng);

}  // namespace crct::ledger
