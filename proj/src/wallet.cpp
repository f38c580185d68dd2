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

#include "crct/wallet.h"

#include <algorithm>
#include <fstream>
#include <system_error>

namespace crct::wallet {

Point Wallet::new_key(Rng& rng) {
  KeyEntry k{rng.scalar(), {}};
  k.public_key = mul_base(k.secret);
  keys_.push_back(k);
  return k.public_key;
}

Point Wallet::import_key(const Scalar& secret) {
  const Point p = mul_base(secret);
  if (secret_for(p) == nullptr) keys_.push_back({secret, p});
  return p;
}

const Scalar* Wallet::secret_for(const Point& public_key) const {
  for (const auto& k : keys_)
    if (k.public_key == public_key) return &k.secret;
  return nullptr;
}

std::vector<ledger::SpendInput> Wallet::spendable(const ledger::Ledger& ledger,
                                                  std::string_view label) const {
  std::vector<ledger::SpendInput> out;
  for (const auto& o : outputs_) {
    if (o.colour_label != label) continue;
    const auto id = ledger.find_output(o.one_time_key);
    const Scalar* x = secret_for(o.one_time_key);
    if (!id || x == nullptr) continue;
    if (ledger.is_spent(mlsag::key_image(*x, o.one_time_key))) continue;
    out.push_back({*id, {*x, o.secret.amount, o.secret.amount_blind, o.secret.colour,
                         o.secret.colour_blind}});
  }
  return out;
}

std::vector<ledger::SpendInput> Wallet::select_inputs(const ledger::Ledger& ledger,
                                                      std::string_view label,
                                                      std::uint64_t amount,
                                                      std::size_t max_inputs) const {
  auto candidates = spendable(ledger, label);
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.secret.amount > b.secret.amount; });
  std::vector<ledger::SpendInput> chosen;
  unsigned __int128 total = 0;
  for (auto& c : candidates) {
    if (total >= amount && !chosen.empty()) break;
    if (chosen.size() == max_inputs) break;
    total += c.secret.amount;
    chosen.push_back(std::move(c));
  }
  if (total < amount || chosen.empty())
    throw InsufficientFunds("not enough unspent '" + std::string(label) + "' to send " +
                            std::to_string(amount));
  return chosen;
}

std::map<std::string, std::uint64_t> Wallet::balances(const ledger::Ledger& ledger) const {
  std::map<std::string, std::uint64_t> out;
  for (const auto& o : outputs_) out.try_emplace(o.colour_label, 0);
  for (auto& [label, total] : out)
    for (const auto& s : spendable(ledger, label)) total += s.secret.amount;
  return out;
}

std::vector<std::string> Wallet::audit(const ledger::Ledger& ledger) const {
  std::vector<std::string> problems;
  for (const auto& o : outputs_) {
    const auto id = ledger.find_output(o.one_time_key);
    if (!id) {
      problems.push_back(o.one_time_key.hex() + ": not on ledger");
      continue;
    }
    const auto* out = ledger.output(*id);
    if (!pedersen::verify_opening(out->amount_commitment,
                                  {Scalar::from_u64(o.secret.amount), o.secret.amount_blind}))
      problems.push_back(o.one_time_key.hex() + ": amount opening mismatch");
    if (!pedersen::verify_opening(out->colour_commitment, {o.secret.colour, o.secret.colour_blind}))
      problems.push_back(o.one_time_key.hex() + ": colour opening mismatch");
    if (secret_for(o.one_time_key) == nullptr)
      problems.push_back(o.one_time_key.hex() + ": no spend key");
  }
  return problems;
}

nlohmann::json Wallet::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["keys"] = nlohmann::json::array();
  for (const auto& k : keys_)
    j["keys"].push_back({{"secret", k.secret.hex()}, {"public", k.public_key.hex()}});
  j["outputs"] = nlohmann::json::array();
  for (const auto& o : outputs_)
    j["outputs"].push_back({{"one_time_key", o.one_time_key.hex()},
                            {"colour_label", o.colour_label},
                            {"amount", o.secret.amount},
                            {"amount_blind", o.secret.amount_blind.hex()},
                            {"colour", o.secret.colour.hex()},
                            {"colour_blind", o.secret.colour_blind.hex()}});
  return j;
}

Wallet Wallet::from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != 1) throw DecodeError("unsupported wallet version");
  Wallet w;
  for (const auto& k : j.at("keys")) {
    KeyEntry e{Scalar::from_hex(k.at("secret").get<std::string>()),
               Point::from_hex(k.at("public").get<std::string>())};
    if (mul_base(e.secret) != e.public_key) throw DecodeError("wallet key pair mismatch");
    w.keys_.push_back(e);
  }
  for (const auto& o : j.at("outputs")) {
    OwnedOutput out;
    out.one_time_key = Point::from_hex(o.at("one_time_key").get<std::string>());
    out.colour_label = o.at("colour_label").get<std::string>();
    out.secret.amount = o.at("amount").get<std::uint64_t>();
    out.secret.amount_blind = Scalar::from_hex(o.at("amount_blind").get<std::string>());
    out.secret.colour = Scalar::from_hex(o.at("colour").get<std::string>());
    out.secret.colour_blind = Scalar::from_hex(o.at("colour_blind").get<std::string>());
    w.outputs_.push_back(std::move(out));
  }
  return w;
}

void Wallet::save(const std::filesystem::path& path) const {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
  f << to_json().dump(2) << '\n';
}

Wallet Wallet::load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  return from_json(nlohmann::json::parse(f));
}

}  // namespace crct::wallet
