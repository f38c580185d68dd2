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

// Size accounting for coloured signatures and decoy-anonymity estimates
// under different colour distributions.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace crct::analysis {

/// Byte counts for one transaction shape. Ring-reference encoding (the
/// variable-length output positions) is not included.
struct SizeReport {
  std::size_t n = 0, m = 0, q = 0, range_bits = 0;
  /// Uncoloured MLSAG: (n(m+1) + 1 + m) * 32.
  std::size_t base_mlsag_bytes = 0;
  /// Coloured MLSAG: (n(2m+1) + 1 + m) * 32.
  std::size_t coloured_mlsag_bytes = 0;
  /// Published Borromean size for 64-bit ranges: q (1 + 64*2 + 64) * 32.
  std::size_t borromean_reference_bytes = 0;
  /// This library's bit-decomposition proofs, as serialised.
  std::size_t range_proof_bytes = 0;
  /// (q - 1) Schnorr proofs of 64 bytes.
  std::size_t colour_eq_bytes = 0;
  /// coloured MLSAG + range proofs + colour proofs.
  std::size_t total_bytes = 0;
};

/// Requires n >= 2, m >= 1, q >= 1, 1 <= range_bits <= 64.
SizeReport signature_sizes(std::size_t n, std::size_t m, std::size_t q, std::size_t range_bits);

enum class DistributionKind { uniform, zipf };

struct ColourDistribution {
  DistributionKind kind = DistributionKind::uniform;
  /// Zipf exponent s; colour of rank k has weight 1 / k^s.
  double exponent = 1.0;

  static ColourDistribution uniform() { return {}; }
  static ColourDistribution zipf(double s = 1.0) { return {DistributionKind::zipf, s}; }
  std::vector<double> weights(std::size_t colours) const;
  std::string name() const;
};

/// Which decoy vectors count as indistinguishable from the real one.
enum class ColourEvent {
  /// All m decoy colours equal the transaction's colour, which is drawn
  /// from the same distribution. Uniform closed form: 1 / chi^m.
  match_transaction,
  /// All m decoy colours equal each other. Zipf(s=1, chi=200, m=2): ~1/21.
  all_equal,
};

std::string_view describe(ColourEvent e);

struct AnonymityReport {
  std::size_t colours = 0;
  std::size_t inputs = 0;
  ColourDistribution distribution;
  ColourEvent event = ColourEvent::match_transaction;
  double probability = 0;
  /// Binomial standard error of the estimate; 0 for closed forms.
  double standard_error = 0;
  /// 0 when the probability is a closed form.
  std::uint64_t trials = 0;
};

/// Uniform: closed form 1/chi^m (event match_transaction). Zipf: Monte Carlo
/// over `trials` draws with event all_equal.
AnonymityReport anonymity_probability(std::size_t colours, std::size_t m,
                                      const ColourDistribution& dist,
                                      std::uint64_t trials = 1'000'000, std::uint64_t seed = 1);

/// Monte Carlo estimate of `event` with colours drawn i.i.d. from `dist`.
AnonymityReport simulate_anonymity(std::size_t colours, std::size_t m,
                                   const ColourDistribution& dist, ColourEvent event,
                                   std::uint64_t trials, std::uint64_t seed);

/// Same estimate with colours drawn uniformly from a ledger-like multiset of
/// output colours (sampling with replacement).
AnonymityReport decoy_colour_simulation(std::span<const std::uint32_t> population, std::size_t m,
                                        std::uint64_t trials, std::mt19937_64& rng,
                                        ColourEvent event = ColourEvent::match_transaction);

nlohmann::json to_json(const SizeReport& r);
nlohmann::json to_json(const AnonymityReport& r);

}  // namespace crct::analysis
