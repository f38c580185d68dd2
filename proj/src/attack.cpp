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

#include "crct/attack.h"

namespace crct::attack {

EpsilonColourResult epsilon_colour(const Scalar& epsilon, std::size_t ring_size,
                                   std::string colour_label, Rng& rng) {
  if (ring_size < 2) throw std::invalid_argument("ring size must be at least 2");
  constexpr std::size_t kBits = 8;
  EpsilonColourResult r;
  r.epsilon = epsilon;
  r.colour_label = std::move(colour_label);
  const Scalar f = tx::colour_id(r.colour_label);

  auto [l, owned] = ledger::Ledger::genesis({2 * ring_size + 2, 10, kBits}, rng);
  r.ledger = std::move(l);

  // No valid transaction creates these colours, so they are planted.
  std::vector<tx::InputSecret> secrets;
  std::vector<tx::OutputId> real;
  for (auto [amount, colour] : {std::pair{std::uint64_t{3}, f - epsilon}, {5, f + epsilon}}) {
    const Scalar x = rng.scalar();
    auto [out, s] = tx::make_output(mul_base(x), amount, colour, kBits, rng);
    real.push_back(r.ledger.add_genesis_output(std::move(out)));
    secrets.push_back({x, s.amount, s.amount_blind, s.colour, s.colour_blind});
  }
  r.low_input = real[0];
  r.high_input = real[1];

  const auto decoys = r.ledger.sample_decoys(2, ring_size - 1, real, rng);
  const std::size_t pi = rng.uniform(ring_size);
  Matrix<tx::OutputId> refs(ring_size, 2);
  for (std::size_t i = 0, d = 0; i < ring_size; ++i) {
    const auto src = i == pi ? std::span<const tx::OutputId>(real) : decoys.row(d++);
    std::copy(src.begin(), src.end(), refs.row(i).begin());
  }
  const auto ring = r.ledger.resolve(refs);

  auto [out, s] = tx::make_output(mul_base(rng.scalar()), 8, f, kBits, rng);
  std::vector<tx::TxOutput> outputs{out};
  const std::vector<tx::OutputSecret> output_secrets{s};
  try {
    (void)tx::sign_transaction(refs, ring, pi, secrets, outputs, output_secrets, {}, rng);
  } catch (const std::exception& e) {
    r.honest_signer_refused = true;
    r.honest_signer_error = e.what();
  }
  r.forged = tx::sign_transaction_unchecked(refs, ring, pi, secrets, std::move(outputs),
                                            output_secrets, {}, rng);
  r.verdict = r.ledger.check(r.forged);
  return r;
}

}  // namespace crct::attack
