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

// Reproducible attack constructions, used by the CLI demo and tests.

#include <cstdint>
#include <string>

#include "crct/ledger.h"

namespace crct::attack {

struct EpsilonColourResult {
  Scalar epsilon;
  std::string colour_label;
  /// Ledger holding native decoys plus the two planted inputs.
  ledger::Ledger ledger;
  /// Ids of the inputs with colours f - epsilon and f + epsilon.
  tx::OutputId low_input = 0, high_input = 0;
  /// Transaction signed with the row secrets the attacker can compute.
  tx::Transaction forged;
  tx::Verdict verdict;
  /// Whether the honest signer refused the same inputs.
  bool honest_signer_refused = false;
  std::string honest_signer_error;
};

/// Two inputs of colours f - eps and f + eps (amounts 3 and 5) spent into
/// one output of colour f and amount 8, with rings of `ring_size` rows.
EpsilonColourResult epsilon_colour(const Scalar& epsilon, std::size_t ring_size,
                                   std::string colour_label, Rng& rng);

}  // namespace crct::attack
