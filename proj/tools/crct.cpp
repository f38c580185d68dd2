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

// crct: command-line front end over the library.
//
// Exit codes: 0 ok, 1 other failure, 2 bad arguments, 3 transaction or
// signature rejected, 4 I/O or decoding failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "crct/analysis.h"
#include "crct/attack.h"
#include "crct/ledger.h"
#include "crct/tx_codec.h"
#include "crct/wallet.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace crct;

namespace {

enum Exit { kOk = 0, kOther = 1, kBadArgs = 2, kRejected = 3, kIo = 4 };

struct Rejected : std::runtime_error {
  tx::Verdict verdict;
  explicit Rejected(tx::Verdict v)
      : std::runtime_error(std::string(tx::to_string(v.status)) + ": " + v.detail),
        verdict(std::move(v)) {}
};

struct Context {
  std::string ledger_path = "crct-ledger.bin";
  std::string wallet_path = "crct-wallet.json";
  std::optional<std::uint64_t> seed;
  bool json_out = false;

  std::optional<Rng> rng_;
  Rng& rng() {
    if (!rng_) rng_ = seed ? Rng::seeded(*seed) : Rng::system();
    return *rng_;
  }

  wallet::Wallet load_wallet(const std::string& path) const {
    return fs::exists(path) ? wallet::Wallet::load(path) : wallet::Wallet{};
  }

  // Missing ledgers start from a native-colour genesis owned by the wallet.
  ledger::Ledger load_ledger(wallet::Wallet& w) {
    if (fs::exists(ledger_path)) return ledger::Ledger::load(ledger_path);
    auto [l, owned] = ledger::Ledger::genesis({}, rng());
    for (const auto& g : owned) {
      const auto& s = g.secret;
      w.import_key(s.spend_key);
      w.add_output({l.output(g.id)->one_time_key, std::string(ledger::kNativeColour),
                    {s.amount, s.amount_blind, s.colour, s.colour_blind}});
    }
    l.save(ledger_path);
    w.save(wallet_path);
    return std::move(l);
  }

  void emit(const json& j, const std::string& text) const {
    if (json_out)
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
  }
};

Bytes read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::system_error(errno, std::generic_category(), "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(f), {});
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::system_error(errno, std::generic_category(), "cannot write " + path);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

// Accepts the binary encoding or its JSON form.
tx::Transaction read_tx(const std::string& path) {
  const Bytes b = read_file(path);
  if (!b.empty() && b.front() == '{')
    return tx::transaction_from_json(json::parse(b.begin(), b.end()));
  return tx::decode_transaction(b);
}

std::string verdict_text(const tx::Verdict& v) {
  std::string s(tx::to_string(v.status));
  if (!v.detail.empty()) s += " (" + v.detail + ")";
  return s;
}

json verdict_json(const tx::Verdict& v) {
  return {{"accepted", v.ok()}, {"status", tx::to_string(v.status)}, {"detail", v.detail}};
}

std::string hex_of(ByteView b) { return to_hex(b); }

// ---- commands --------------------------------------------------------------

int cmd_keygen(Context& ctx) {
  auto w = ctx.load_wallet(ctx.wallet_path);
  const Point p = w.new_key(ctx.rng());
  w.save(ctx.wallet_path);
  ctx.emit({{"public_key", p.hex()}, {"wallet", ctx.wallet_path}}, p.hex() + "\n");
  return kOk;
}

struct IssueArgs {
  std::string label;
  std::uint64_t supply = 0;
  bool open_amount = false;
  std::size_t range_bits = tx::kDefaultRangeBits;
};

int cmd_issue(Context& ctx, const IssueArgs& a) {
  auto w = ctx.load_wallet(ctx.wallet_path);
  auto l = ctx.load_ledger(w);
  const Point to = w.new_key(ctx.rng());
  auto iss = tx::make_issuance(a.label, a.supply, to, a.open_amount, a.range_bits, ctx.rng());
  const auto r = l.apply(iss.tx);
  if (!r.accepted()) throw Rejected(r.verdict);
  w.add_output({to, a.label, iss.secret});
  l.save(ctx.ledger_path);
  w.save(ctx.wallet_path);
  const std::uint64_t id = r.new_outputs.front();
  ctx.emit({{"accepted", true},
            {"label", a.label},
            {"colour_id", tx::colour_id(a.label).hex()},
            {"output", id},
            {"supply", a.supply},
            {"supply_disclosed", a.open_amount}},
           "issued " + std::to_string(a.supply) + " " + a.label + " as output " +
               std::to_string(id) + "\n");
  return kOk;
}

struct TransferArgs {
  std::string colour;
  std::uint64_t amount = 0;
  std::size_t ring_size = 11;
  std::size_t max_inputs = 4;
  std::size_t range_bits = tx::kDefaultRangeBits;
  std::string out = "crct-tx.bin";
  std::string to_wallet;
  std::string to_key;
  std::string metadata;
  bool json_file = false;
};

int cmd_transfer(Context& ctx, const TransferArgs& a) {
  if (!a.to_wallet.empty() && !a.to_key.empty())
    throw std::invalid_argument("--to and --to-wallet are exclusive");
  auto w = ctx.load_wallet(ctx.wallet_path);
  auto l = ctx.load_ledger(w);
  auto& rng = ctx.rng();

  const auto inputs = w.select_inputs(l, a.colour, a.amount, a.max_inputs);
  std::uint64_t total = 0;
  for (const auto& in : inputs) total += in.secret.amount;

  std::optional<wallet::Wallet> recipient_wallet;
  Point to;
  if (!a.to_key.empty()) {
    to = Point::from_hex(a.to_key);
  } else if (!a.to_wallet.empty()) {
    recipient_wallet = ctx.load_wallet(a.to_wallet);
    to = recipient_wallet->new_key(rng);
  } else {
    to = w.new_key(rng);
  }
  std::vector<ledger::Payment> pay{{to, a.amount}};
  std::optional<Point> change;
  if (total > a.amount) {
    change = w.new_key(rng);
    pay.push_back({*change, total - a.amount});
  }

  const Bytes meta(a.metadata.begin(), a.metadata.end());
  const auto built = ledger::build_transfer(l, inputs, pay, a.ring_size, a.range_bits, meta, rng);

  if (recipient_wallet) {
    recipient_wallet->add_output({to, a.colour, built.outputs[0]});
    recipient_wallet->save(a.to_wallet);
  } else if (a.to_key.empty()) {
    w.add_output({to, a.colour, built.outputs[0]});
  }
  if (change) w.add_output({*change, a.colour, built.outputs[1]});
  w.save(ctx.wallet_path);

  const Bytes encoded = tx::encode_transaction(built.tx);
  if (a.json_file)
    write_file(a.out, tx::to_json(built.tx).dump(2) + "\n");
  else
    write_file(a.out, std::string_view(reinterpret_cast<const char*>(encoded.data()), encoded.size()));

  json j{{"tx_file", a.out},
         {"digest", hex_of(tx::transaction_digest(built.tx))},
         {"bytes", encoded.size()},
         {"ring_size", a.ring_size},
         {"inputs", inputs.size()},
         {"outputs", built.tx.outputs.size()},
         {"amount", a.amount},
         {"change", total - a.amount}};
  if (!a.to_key.empty()) {
    const auto& s = built.outputs[0];
    j["recipient_opening"] = {{"amount", s.amount},
                              {"amount_blind", s.amount_blind.hex()},
                              {"colour", s.colour.hex()},
                              {"colour_blind", s.colour_blind.hex()}};
  }
  ctx.emit(j, "wrote " + a.out + " (" + std::to_string(encoded.size()) + " bytes, " +
                  std::to_string(inputs.size()) + " inputs, ring size " +
                  std::to_string(a.ring_size) + ")\n");
  return kOk;
}

int cmd_verify(Context& ctx, const std::string& path) {
  const auto t = read_tx(path);
  const auto l = ledger::Ledger::load(ctx.ledger_path);
  const auto v = l.check(t);
  ctx.emit(verdict_json(v), verdict_text(v) + "\n");
  return v.ok() ? kOk : kRejected;
}

int cmd_apply(Context& ctx, const std::string& path) {
  const auto t = read_tx(path);
  auto l = ledger::Ledger::load(ctx.ledger_path);
  const auto r = l.apply(t);
  if (r.accepted()) l.save(ctx.ledger_path);
  auto j = verdict_json(r.verdict);
  j["new_outputs"] = r.new_outputs;
  j["height"] = l.height();
  std::string text = verdict_text(r.verdict);
  if (r.accepted()) text += ", height " + std::to_string(l.height());
  ctx.emit(j, text + "\n");
  return r.accepted() ? kOk : kRejected;
}

int cmd_balance(Context& ctx) {
  auto w = ctx.load_wallet(ctx.wallet_path);
  const auto l = ctx.load_ledger(w);
  const auto b = w.balances(l);
  const auto problems = w.audit(l);
  std::string text;
  for (const auto& [label, amount] : b) text += label + " " + std::to_string(amount) + "\n";
  for (const auto& p : problems) text += "warning: " + p + "\n";
  ctx.emit({{"balances", b}, {"problems", problems}}, text);
  return kOk;
}

struct AnonArgs {
  std::size_t colours = 200;
  std::size_t inputs = 2;
  std::string dist = "zipf";
  double exponent = 1.0;
  std::uint64_t trials = 1'000'000;
  std::string event = "auto";
};

int cmd_simulate(Context& ctx, const AnonArgs& a) {
  const auto dist = a.dist == "uniform" ? analysis::ColourDistribution::uniform()
                                        : analysis::ColourDistribution::zipf(a.exponent);
  const std::uint64_t seed = ctx.seed.value_or(1);
  analysis::AnonymityReport r;
  if (a.event == "auto") {
    r = analysis::anonymity_probability(a.colours, a.inputs, dist, a.trials, seed);
  } else {
    const auto ev = a.event == "all-equal" ? analysis::ColourEvent::all_equal
                                           : analysis::ColourEvent::match_transaction;
    r = analysis::simulate_anonymity(a.colours, a.inputs, dist, ev, a.trials, seed);
  }
  char buf[256];
  if (r.trials == 0)
    std::snprintf(buf, sizeof buf, "%s, chi=%zu, m=%zu: p = %.6g (1 in %.1f), closed form\n",
                  dist.name().c_str(), r.colours, r.inputs, r.probability, 1 / r.probability);
  else
    std::snprintf(buf, sizeof buf,
                  "%s, chi=%zu, m=%zu: p = %.6g +/- %.2g (1 in %.1f), %llu trials\n",
                  dist.name().c_str(), r.colours, r.inputs, r.probability, r.standard_error,
                  1 / r.probability, static_cast<unsigned long long>(r.trials));
  ctx.emit(analysis::to_json(r), std::string(buf) + "event: " + std::string(describe(r.event)) + "\n");
  return kOk;
}

struct SizeArgs {
  std::size_t n = 11, m = 2, q = 1, range_bits = 64;
};

int cmd_sizes(Context& ctx, const SizeArgs& a) {
  const auto r = analysis::signature_sizes(a.n, a.m, a.q, a.range_bits);
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "n=%zu m=%zu q=%zu\n"
                "  MLSAG, uncoloured     %8zu bytes\n"
                "  MLSAG, coloured       %8zu bytes (+%zu)\n"
                "  range proofs (%2zu bit) %8zu bytes\n"
                "  Borromean reference   %8zu bytes\n"
                "  colour proofs         %8zu bytes\n"
                "  total                 %8zu bytes\n",
                r.n, r.m, r.q, r.base_mlsag_bytes, r.coloured_mlsag_bytes,
                r.coloured_mlsag_bytes - r.base_mlsag_bytes, r.range_bits, r.range_proof_bytes,
                r.borromean_reference_bytes, r.colour_eq_bytes, r.total_bytes);
  ctx.emit(analysis::to_json(r), buf);
  return kOk;
}

struct AttackArgs {
  std::string name = "epsilon-colour";
  std::uint64_t epsilon = 1;
  std::size_t ring_size = 4;
};

int cmd_attack(Context& ctx, const AttackArgs& a) {
  const auto r = attack::epsilon_colour(Scalar::from_u64(a.epsilon), a.ring_size, "gold", ctx.rng());
  json j{{"attack", a.name},
         {"epsilon", a.epsilon},
         {"colour", r.colour_label},
         {"inputs", {{"low", r.low_input}, {"high", r.high_input}}},
         {"honest_signer_refused", r.honest_signer_refused},
         {"honest_signer_error", r.honest_signer_error},
         {"transaction", tx::to_json(r.forged)},
         {"verdict", verdict_json(r.verdict)}};
  std::string text;
  text += "inputs " + std::to_string(r.low_input) + " (colour f-" + std::to_string(a.epsilon) +
          ", amount 3) and " + std::to_string(r.high_input) + " (colour f+" +
          std::to_string(a.epsilon) + ", amount 5) -> one output of colour f, amount 8\n";
  text += "honest signer: " +
          (r.honest_signer_refused ? "refused: " + r.honest_signer_error : std::string("signed")) +
          "\n";
  text += "forged transaction:\n" + tx::to_json(r.forged).dump(2) + "\n";
  text += "ledger: " + verdict_text(r.verdict) + "\n";
  ctx.emit(j, text);
  return r.verdict.ok() ? kOther : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured ring confidential transactions"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--ledger", ctx.ledger_path, "Ledger snapshot file")->envname("CRCT_LEDGER");
  app.add_option("--wallet", ctx.wallet_path, "Wallet file")->envname("CRCT_WALLET");
  app.add_option("--seed", ctx.seed, "Deterministic seed (demos and tests only)");
  app.add_flag("--json", ctx.json_out, "Print JSON");

  std::function<int()> run;

  auto* keygen = app.add_subcommand("keygen", "Add a spend key to the wallet");
  keygen->callback([&] { run = [&] { return cmd_keygen(ctx); }; });

  IssueArgs ia;
  auto* issue = app.add_subcommand("issue", "Create a new colour");
  issue->add_option("--label", ia.label, "Colour label")->required();
  issue->add_option("--supply", ia.supply, "Amount issued")->required();
  issue->add_flag("--open-amount", ia.open_amount, "Disclose the supply");
  issue->add_option("--range-bits", ia.range_bits, "Range proof width")->check(CLI::Range(1, 64));
  issue->callback([&] { run = [&] { return cmd_issue(ctx, ia); }; });

  TransferArgs ta;
  auto* transfer = app.add_subcommand("transfer", "Build and sign a transfer");
  transfer->add_option("--colour", ta.colour, "Colour label")->required();
  transfer->add_option("--amount", ta.amount, "Amount to send")->required();
  transfer->add_option("--ring-size", ta.ring_size, "Ring rows n")->check(CLI::Range(2, 4096));
  transfer->add_option("--max-inputs", ta.max_inputs)->check(CLI::Range(1, 256));
  transfer->add_option("--range-bits", ta.range_bits)->check(CLI::Range(1, 64));
  transfer->add_option("--out", ta.out, "Transaction file");
  transfer->add_option("--to", ta.to_key, "Recipient public key (hex)");
  transfer->add_option("--to-wallet", ta.to_wallet, "Recipient wallet file");
  transfer->add_option("--metadata", ta.metadata);
  transfer->add_flag("--json-file", ta.json_file, "Write the transaction as JSON");
  transfer->callback([&] { run = [&] { return cmd_transfer(ctx, ta); }; });

  std::string tx_path = "crct-tx.bin";
  auto* verify = app.add_subcommand("verify", "Check a transaction against the ledger");
  verify->add_option("tx", tx_path, "Transaction file");
  verify->callback([&] { run = [&] { return cmd_verify(ctx, tx_path); }; });
  auto* apply = app.add_subcommand("apply", "Append a transaction to the ledger");
  apply->add_option("tx", tx_path, "Transaction file");
  apply->callback([&] { run = [&] { return cmd_apply(ctx, tx_path); }; });

  auto* balance = app.add_subcommand("balance", "Show spendable wallet balances");
  balance->callback([&] { run = [&] { return cmd_balance(ctx); }; });

  AnonArgs aa;
  auto* sim = app.add_subcommand("simulate-anonymity", "Decoy colour collision probability");
  sim->add_option("--colours", aa.colours)->check(CLI::Range(1, 1'000'000));
  sim->add_option("--inputs,-m", aa.inputs)->check(CLI::Range(1, 64));
  sim->add_option("--dist", aa.dist)->check(CLI::IsMember({"uniform", "zipf"}));
  sim->add_option("--exponent", aa.exponent)->check(CLI::PositiveNumber);
  sim->add_option("--trials", aa.trials)->check(CLI::Range(1.0, 1e10));
  sim->add_option("--event", aa.event)
      ->check(CLI::IsMember({"auto", "match-transaction", "all-equal"}));
  sim->callback([&] { run = [&] { return cmd_simulate(ctx, aa); }; });

  SizeArgs sa;
  auto* sizes = app.add_subcommand("sizes", "Signature size report");
  sizes->add_option("--n", sa.n)->check(CLI::Range(2, 1 << 20));
  sizes->add_option("--m", sa.m)->check(CLI::Range(1, 1 << 16));
  sizes->add_option("--q", sa.q)->check(CLI::Range(1, 1 << 16));
  sizes->add_option("--range-bits", sa.range_bits)->check(CLI::Range(1, 64));
  sizes->callback([&] { run = [&] { return cmd_sizes(ctx, sa); }; });

  AttackArgs aka;
  auto* attack = app.add_subcommand("attack-demo", "Construct a known attack and show the rejection");
  attack->add_option("attack", aka.name)->check(CLI::IsMember({"epsilon-colour"}));
  attack->add_option("--epsilon", aka.epsilon)->check(CLI::Range(std::uint64_t{1}, ~std::uint64_t{0}));
  attack->add_option("--ring-size", aka.ring_size)->check(CLI::Range(2, 64));
  attack->callback([&] { run = [&] { return cmd_attack(ctx, aka); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    return run();
  } catch (const Rejected& e) {
    if (ctx.json_out)
      std::cout << verdict_json(e.verdict).dump(2) << '\n';
    std::cerr << "rejected: " << e.what() << '\n';
    return kRejected;
  } catch (const tx::ConservationError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRejected;
  } catch (const tx::ColourMismatchError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRejected;
  } catch (const mlsag::SigningError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRejected;
  } catch (const ledger::SnapshotError& e) {
    std::cerr << "ledger: " << e.what() << '\n';
    return kIo;
  } catch (const DecodeError& e) {
    std::cerr << "decode: " << e.what() << '\n';
    return kIo;
  } catch (const json::exception& e) {
    std::cerr << "json: " << e.what() << '\n';
    return kIo;
  } catch (const std::system_error& e) {
    std::cerr << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
}
