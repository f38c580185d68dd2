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

#include "crct/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "crct/mlsag.h"
#include "crct/pedersen.h"
#include "crct/range_proof.h"

namespace crct::analysis {
namespace {

template <class Draw>
AnonymityReport run_trials(Draw&& draw, std::size_t m, ColourEvent event, std::uint64_t trials) {
  if (m == 0) throw std::invalid_argument("need at least one input");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto reference = draw();
    bool same = true;
    std::size_t j = event == ColourEvent::all_equal ? 1 : 0;
    for (; j < m; ++j) same &= draw() == reference;
    hits += same;
  }
  AnonymityReport r;
  r.inputs = m;
  r.event = event;
  r.trials = trials;
  r.probability = static_cast<double>(hits) / static_cast<double>(trials);
  r.standard_error = std::sqrt(r.probability * (1 - r.probability) / static_cast<double>(trials));
  return r;
}

}  // namespace

SizeReport signature_sizes(std::size_t n, std::size_t m, std::size_t q, std::size_t range_bits) {
  if (n < 2 || m < 1 || q < 1) throw std::invalid_argument("need n >= 2, m >= 1, q >= 1");
  if (range_bits < 1 || range_bits > tx::kMaxRangeBits)
    throw std::invalid_argument("range bits must be 1..64");
  SizeReport r{n, m, q, range_bits};
  r.base_mlsag_bytes = mlsag::wire_size(n, m + 1, m);
  r.coloured_mlsag_bytes = mlsag::wire_size(n, 2 * m + 1, m);
  r.borromean_reference_bytes = q * (1 + 64 * 2 + 64) * 32;
  r.range_proof_bytes = q * tx::range_proof_wire_size(range_bits);
  r.colour_eq_bytes = (q - 1) * pedersen::kSchnorrProofBytes;
  r.total_bytes = r.coloured_mlsag_bytes + r.range_proof_bytes + r.colour_eq_bytes;
  return r;
}

std::vector<double> ColourDistribution::weights(std::size_t colours) const {
  std::vector<double> w(colours, 1.0);
  if (kind == DistributionKind::zipf)
    for (std::size_t k = 0; k < colours; ++k) w[k] = 1.0 / std::pow(double(k + 1), exponent);
  return w;
}

std::string ColourDistribution::name() const {
  if (kind == DistributionKind::uniform) return "uniform";
  char buf[64];
  std::snprintf(buf, sizeof buf, "zipf(s=%g)", exponent);
  return buf;
}

std::string_view describe(ColourEvent e) {
  switch (e) {
    case ColourEvent::match_transaction:
      return "all m decoy colours equal the transaction colour (drawn from the same distribution)";
    case ColourEvent::all_equal:
      return "all m decoy colours equal each other";
  }
  return "";
}

AnonymityReport anonymity_probability(std::size_t colours, std::size_t m,
                                      const ColourDistribution& dist, std::uint64_t trials,
                                      std::uint64_t seed) {
  if (colours < 1 || m < 1) throw std::invalid_argument("need chi >= 1 and m >= 1");
  if (dist.kind == DistributionKind::uniform) {
    AnonymityReport r;
    r.colours = colours;
    r.inputs = m;
    r.distribution = dist;
    r.event = ColourEvent::match_transaction;
    r.probability = std::pow(1.0 / static_cast<double>(colours), static_cast<double>(m));
    return r;
  }
  return simulate_anonymity(colours, m, dist, ColourEvent::all_equal, trials, seed);
}

AnonymityReport simulate_anonymity(std::size_t colours, std::size_t m,
                                   const ColourDistribution& dist, ColourEvent event,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (colours < 1) throw std::invalid_argument("need at least one colour");
  std::mt19937_64 rng(seed);
  const auto w = dist.weights(colours);
  std::discrete_distribution<std::uint32_t> pick(w.begin(), w.end());
  auto r = run_trials([&] { return pick(rng); }, m, event, trials);
  r.colours = colours;
  r.distribution = dist;
  return r;
}

AnonymityReport decoy_colour_simulation(std::span<const std::uint32_t> population, std::size_t m,
                                        std::uint64_t trials, std::mt19937_64& rng,
                                        ColourEvent event) {
  if (population.empty()) throw std::invalid_argument("empty colour population");
  std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
  auto r = run_trials([&] { return population[pick(rng)]; }, m, event, trials);
  std::vector<std::uint32_t> distinct(population.begin(), population.end());
  std::sort(distinct.begin(), distinct.end());
  r.colours = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  return r;
}

nlohmann::json to_json(const SizeReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"q", r.q},
          {"range_bits", r.range_bits},
          {"base_mlsag_bytes", r.base_mlsag_bytes},
          {"coloured_mlsag_bytes", r.coloured_mlsag_bytes},
          {"colour_overhead_bytes", r.coloured_mlsag_bytes - r.base_mlsag_bytes},
          {"borromean_reference_bytes", r.borromean_reference_bytes},
          {"range_proof_bytes", r.range_proof_bytes},
          {"colour_eq_bytes", r.colour_eq_bytes},
          {"total_bytes", r.total_bytes}};
}

nlohmann::json to_json(const AnonymityReport& r) {
  return {{"colours", r.colours},
          {"inputs", r.inputs},
          {"distribution", r.distribution.name()},
          {"event", describe(r.event)},
          {"probability", r.probability},
          {"standard_error", r.standard_error},
          {"trials", r.trials},
          {"closed_form", r.trials == 0}};
}

}  // namespace crct::analysis
