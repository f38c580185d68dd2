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

// Test-only output store: creates owned outputs with arbitrary amounts and
// colours and assembles rings around them, without going through a ledger.

#include <algorithm>
#include <vector>

#include "crct/coloured_tx.h"

namespace crct::testing {

class World {
 public:
  explicit World(std::uint64_t seed, std::size_t range_bits = 4)
      : rng(Rng::seeded(seed)), range_bits_(range_bits) {}

  Rng rng;

  tx::OutputId add(std::uint64_t amount, const Scalar& colour) {
    const Scalar x = rng.scalar();
    auto [out, s] = tx::make_output(mul_base(x), amount, colour, range_bits_, rng);
    outputs_.push_back(std::move(out));
    secrets_.push_back({x, s.amount, s.amount_blind, s.colour, s.colour_blind});
    return outputs_.size() - 1;
  }

  const tx::InputSecret& secret(tx::OutputId id) const { return secrets_.at(id); }
  const tx::TxOutput& output(tx::OutputId id) const { return outputs_.at(id); }
  std::size_t size() const { return outputs_.size(); }

  tx::Resolver resolver() const {
    return [this](tx::OutputId id) { return id < outputs_.size() ? &outputs_[id] : nullptr; };
  }

  Matrix<tx::RingMember> resolve(const Matrix<tx::OutputId>& refs) const {
    Matrix<tx::RingMember> ring(refs.rows(), refs.cols());
    for (std::size_t i = 0; i < refs.rows(); ++i)
      for (std::size_t j = 0; j < refs.cols(); ++j)
        ring(i, j) = tx::RingMember::from_output(outputs_.at(refs(i, j)));
    return ring;
  }

  /// n x m refs with `real` at row `pi` and fresh decoys of random colours
  /// elsewhere.
  Matrix<tx::OutputId> ring_around(const std::vector<tx::OutputId>& real, std::size_t n,
                                   std::size_t pi) {
    Matrix<tx::OutputId> refs(n, real.size());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < real.size(); ++j)
        refs(i, j) = i == pi ? real[j]
                             : add(rng.uniform(std::uint64_t{1} << std::min<std::size_t>(range_bits_, 4)), tx::colour_id("decoy" + std::to_string(rng.uniform(4))));
    return refs;
  }

  std::vector<tx::InputSecret> secrets_of(const std::vector<tx::OutputId>& ids) const {
    std::vector<tx::InputSecret> out;
    for (auto id : ids) out.push_back(secret(id));
    return out;
  }

  struct Outputs {
    std::vector<tx::TxOutput> outputs;
    std::vector<tx::OutputSecret> secrets;
  };

  Outputs pay(const std::vector<std::uint64_t>& amounts, const Scalar& colour) {
    return pay(amounts, std::vector<Scalar>(amounts.size(), colour));
  }

  Outputs pay(const std::vector<std::uint64_t>& amounts, const std::vector<Scalar>& colours) {
    Outputs o;
    for (std::size_t k = 0; k < amounts.size(); ++k) {
      auto [out, s] = tx::make_output(mul_base(rng.scalar()), amounts[k], colours[k], range_bits_, rng);
      o.outputs.push_back(std::move(out));
      o.secrets.push_back(s);
    }
    return o;
  }

  std::size_t range_bits() const { return range_bits_; }

 private:
  std::size_t range_bits_;
  std::vector<tx::TxOutput> outputs_;
  std::vector<tx::InputSecret> secrets_;
};

}  // namespace crct::testing
