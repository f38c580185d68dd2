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

// Wallet file used by the command-line tool: spend keys plus the openings of
// owned outputs. Stored as JSON:
//   {"version": 1,
//    "keys":    [{"secret": hex, "public": hex}],
//    "outputs": [{"one_time_key": hex, "colour_label": str, "amount": u64,
//                 "amount_blind": hex, "colour": hex, "colour_blind": hex}]}

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "crct/ledger.h"
#include "json.hpp"

namespace crct::wallet {

struct KeyEntry {
  Scalar secret;
  Point public_key;
};

struct OwnedOutput {
  Point one_time_key;
  std::string colour_label;
  tx::OutputSecret secret;
};

class InsufficientFunds : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Wallet {
 public:
  Point new_key(Rng& rng);
  /// Adds an existing secret; no-op when already present.
  Point import_key(const Scalar& secret);
  const Scalar* secret_for(const Point& public_key) const;
  void add_output(OwnedOutput out) { outputs_.push_back(std::move(out)); }

  const std::vector<KeyEntry>& keys() const { return keys_; }
  const std::vector<OwnedOutput>& outputs() const { return outputs_; }

  /// Owned outputs that are on the ledger and whose key image is unspent.
  std::vector<ledger::SpendInput> spendable(const ledger::Ledger& ledger,
                                            std::string_view label) const;
  /// Greedy largest-first selection covering `amount`.
  std::vector<ledger::SpendInput> select_inputs(const ledger::Ledger& ledger,
                                                std::string_view label, std::uint64_t amount,
                                                std::size_t max_inputs) const;
  std::map<std::string, std::uint64_t> balances(const ledger::Ledger& ledger) const;

  /// Descriptions of owned outputs whose openings do not match the ledger.
  std::vector<std::string> audit(const ledger::Ledger& ledger) const;

  nlohmann::json to_json() const;
  static Wallet from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static Wallet load(const std::filesystem::path& path);

 private:
  std::vector<KeyEntry> keys_;
  std::vector<OwnedOutput> outputs_;
};

}  // namespace crct::wallet
