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

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "crct/analysis.h"
#include "crct/attack.h"
#include "crct/ledger.h"
#include "crct/mlsag.h"
#include "crct/pedersen.h"
#include "crct/tx_codec.h"
#include "crct/wallet.h"

namespace py = pybind11;
using namespace crct;

namespace {

Bytes to_bytes(const py::bytes& b) {
  const std::string s = b;
  return Bytes(s.begin(), s.end());
}

py::bytes from_bytes(ByteView b) {
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_crct, m) {
  m.doc() = "Coloured ring confidential transactions";

  py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
  py::register_exception<mlsag::SigningError>(m, "SigningError");
  py::register_exception<tx::ConservationError>(m, "ConservationError");
  py::register_exception<tx::ColourMismatchError>(m, "ColourMismatchError");
  py::register_exception<ledger::SnapshotError>(m, "SnapshotError", PyExc_OSError);
  py::register_exception<ledger::InsufficientOutputs>(m, "InsufficientOutputs");
  py::register_exception<wallet::InsufficientFunds>(m, "InsufficientFunds");

  // ---- group ----
  py::class_<Scalar>(m, "Scalar")
      .def(py::init<>())
      .def_static("from_int", &Scalar::from_u64)
      .def_static("from_bytes", [](const py::bytes& b) { return Scalar::from_bytes(to_bytes(b)); })
      .def_static("from_hex", &Scalar::from_hex)
      .def("__bytes__", [](const Scalar& s) { return from_bytes(s.bytes()); })
      .def("hex", &Scalar::hex)
      .def("is_zero", &Scalar::is_zero)
      .def("invert", &Scalar::invert)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const Scalar& s) { return py::hash(py::str(s.hex())); })
      .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.hex() + ")"; });

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def_static("base", &Point::base)
      .def_static("from_bytes", [](const py::bytes& b) { return Point::from_bytes(to_bytes(b)); })
      .def_static("from_hex", &Point::from_hex)
      .def("__bytes__", [](const Point& p) { return from_bytes(p.bytes()); })
      .def("hex", &Point::hex)
      .def("is_identity", &Point::is_identity)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__rmul__", [](const Point& p, const Scalar& s) { return s * p; })
      .def(py::self == py::self)
      .def("__hash__", [](const Point& p) { return py::hash(py::str(p.hex())); })
      .def("__repr__", [](const Point& p) { return "Point(" + p.hex() + ")"; });

  py::class_<Rng>(m, "Rng")
      .def_static("system", &Rng::system)
      .def_static("seeded", py::overload_cast<std::uint64_t>(&Rng::seeded))
      .def("scalar", &Rng::scalar)
      .def("uniform", &Rng::uniform)
      .def_property_readonly("deterministic", &Rng::deterministic);

  m.def("mul_base", &mul_base);
  m.def("G", [] { return params().G; });
  m.def("H", [] { return params().H; });
  m.def("hash_to_scalar", [](const py::bytes& b) { return hash_to_scalar(ByteView(to_bytes(b))); });
  m.def("hash_to_point", [](const py::bytes& b) { return hash_to_point(ByteView(to_bytes(b))); });

  // ---- pedersen ----
  auto ped = m.def_submodule("pedersen");
  py::class_<pedersen::Commitment>(ped, "Commitment")
      .def_readonly("point", &pedersen::Commitment::point)
      .def(py::self == py::self);
  ped.def("commit", py::overload_cast<const Scalar&, const Scalar&>(&pedersen::commit),
          py::arg("value"), py::arg("blinding"));
  ped.def("verify_opening", [](const pedersen::Commitment& c, const Scalar& v, const Scalar& b) {
    return pedersen::verify_opening(c, {v, b});
  });
  ped.def("combine", [](const std::vector<pedersen::Commitment>& pos,
                        const std::vector<pedersen::Commitment>& neg) {
    return pedersen::combine(pos, neg);
  });
  py::class_<pedersen::SchnorrProof>(ped, "SchnorrProof")
      .def_readonly("challenge", &pedersen::SchnorrProof::challenge)
      .def_readonly("response", &pedersen::SchnorrProof::response);
  ped.def("prove_zero", [](const pedersen::Commitment& c, const Scalar& b, const py::bytes& msg, Rng& rng) {
    return pedersen::prove_zero(c, b, to_bytes(msg), rng);
  });
  ped.def("verify_zero", [](const pedersen::Commitment& c, const pedersen::SchnorrProof& p,
                            const py::bytes& msg) { return pedersen::verify_zero(c, p, to_bytes(msg)); });

  // ---- mlsag ----
  auto ml = m.def_submodule("mlsag");
  py::class_<mlsag::KeyVector>(ml, "KeyVector")
      .def_readonly("publics", &mlsag::KeyVector::publics)
      .def_readonly("secrets", &mlsag::KeyVector::secrets)
      .def("public_only", [](mlsag::KeyVector kv) {
        kv.secrets.clear();
        return kv;
      });
  py::class_<mlsag::Ring>(ml, "Ring")
      .def_property_readonly("rows", [](const mlsag::Ring& r) { return r.matrix.rows(); })
      .def_property_readonly("cols", [](const mlsag::Ring& r) { return r.matrix.cols(); })
      .def_readonly("key_images", &mlsag::Ring::key_images)
      .def("member", [](const mlsag::Ring& r, std::size_t i, std::size_t j) { return r.matrix.at(i, j); });
  py::class_<mlsag::Signature>(ml, "Signature")
      .def_readonly("c1", &mlsag::Signature::c1)
      .def_readonly("key_images", &mlsag::Signature::key_images);
  ml.def("keygen", &mlsag::keygen);
  ml.def("keyselect", [](const mlsag::KeyVector& own, const std::vector<mlsag::KeyVector>& decoys,
                         Rng& rng) { return mlsag::keyselect(own, decoys, rng); });
  ml.def("sign", [](const py::bytes& msg, const mlsag::Ring& ring, const std::vector<Scalar>& secrets,
                    Rng& rng) { return mlsag::sign(to_bytes(msg), ring, secrets, rng); });
  ml.def("verify", [](const py::bytes& msg, const mlsag::Signature& sig, const mlsag::Ring& ring) {
    return mlsag::verify(to_bytes(msg), sig, ring.matrix);
  });
  ml.def("link", &mlsag::link);
  ml.def("encode", [](const mlsag::Signature& s) { return from_bytes(mlsag::encode(s)); });
  ml.def("decode", [](const py::bytes& b, std::size_t rows, std::size_t cols, std::size_t linkable) {
    return mlsag::decode(to_bytes(b), rows, cols, linkable);
  });
  ml.def("wire_size", &mlsag::wire_size);

  // ---- transactions ----
  auto txm = m.def_submodule("tx");
  txm.def("colour_id", &tx::colour_id);
  py::class_<tx::Verdict>(txm, "Verdict")
      .def_property_readonly("ok", &tx::Verdict::ok)
      .def_property_readonly("status", [](const tx::Verdict& v) { return std::string(tx::to_string(v.status)); })
      .def_readonly("detail", &tx::Verdict::detail)
      .def("__bool__", &tx::Verdict::ok)
      .def("__repr__", [](const tx::Verdict& v) {
        return "Verdict(" + std::string(tx::to_string(v.status)) + ")";
      });
  py::class_<tx::OutputSecret>(txm, "OutputSecret")
      .def_readonly("amount", &tx::OutputSecret::amount)
      .def_readonly("amount_blind", &tx::OutputSecret::amount_blind)
      .def_readonly("colour", &tx::OutputSecret::colour)
      .def_readonly("colour_blind", &tx::OutputSecret::colour_blind);
  py::class_<tx::InputSecret>(txm, "InputSecret")
      .def(py::init([](const Scalar& x, const tx::OutputSecret& s) {
             return tx::InputSecret{x, s.amount, s.amount_blind, s.colour, s.colour_blind};
           }),
           py::arg("spend_key"), py::arg("opening"))
      .def_readonly("spend_key", &tx::InputSecret::spend_key)
      .def_readonly("amount", &tx::InputSecret::amount);
  py::class_<tx::Transaction>(txm, "Transaction")
      .def_property_readonly("is_issuance", &tx::Transaction::is_issuance)
      .def_property_readonly("key_images", &tx::Transaction::spend_key_images)
      .def_property_readonly("ring_size", [](const tx::Transaction& t) { return t.ring_refs.rows(); })
      .def_property_readonly("inputs", [](const tx::Transaction& t) { return t.ring_refs.cols(); })
      .def_property_readonly("outputs", [](const tx::Transaction& t) { return t.outputs.size(); })
      .def("mlsag_bytes", [](const tx::Transaction& t) { return from_bytes(mlsag::encode(t.mlsag)); })
      .def("encode", [](const tx::Transaction& t) { return from_bytes(tx::encode_transaction(t)); })
      .def_static("decode", [](const py::bytes& b) { return tx::decode_transaction(to_bytes(b)); })
      .def("to_json", [](const tx::Transaction& t) { return to_py(tx::to_json(t)); })
      .def_static("from_json", [](const py::object& o) { return tx::transaction_from_json(from_py(o)); })
      .def(py::self == py::self);
  py::class_<tx::Issuance>(txm, "Issuance")
      .def_readonly("tx", &tx::Issuance::tx)
      .def_readonly("secret", &tx::Issuance::secret);
  txm.def("make_issuance", &tx::make_issuance, py::arg("label"), py::arg("supply"),
          py::arg("recipient"), py::arg("open_amount"), py::arg("range_bits") = tx::kDefaultRangeBits,
          py::arg("rng"));

  // ---- ledger ----
  auto lm = m.def_submodule("ledger");
  py::class_<ledger::GenesisOutput>(lm, "GenesisOutput")
      .def_readonly("id", &ledger::GenesisOutput::id)
      .def_readonly("secret", &ledger::GenesisOutput::secret);
  py::class_<ledger::ApplyResult>(lm, "ApplyResult")
      .def_readonly("verdict", &ledger::ApplyResult::verdict)
      .def_readonly("new_outputs", &ledger::ApplyResult::new_outputs)
      .def_property_readonly("accepted", &ledger::ApplyResult::accepted);
  py::class_<ledger::SpendInput>(lm, "SpendInput")
      .def(py::init<tx::OutputId, tx::InputSecret>(), py::arg("id"), py::arg("secret"))
      .def_readonly("id", &ledger::SpendInput::id)
      .def_readonly("secret", &ledger::SpendInput::secret);
  py::class_<ledger::Payment>(lm, "Payment")
      .def(py::init<Point, std::uint64_t>(), py::arg("recipient"), py::arg("amount"));
  py::class_<ledger::BuiltTransfer>(lm, "BuiltTransfer")
      .def_readonly("tx", &ledger::BuiltTransfer::tx)
      .def_readonly("outputs", &ledger::BuiltTransfer::outputs);
  py::class_<ledger::Ledger>(lm, "Ledger")
      .def(py::init<>())
      .def_static(
          "genesis",
          [](std::size_t outputs, std::uint64_t amount, std::size_t range_bits, Rng& rng) {
            return ledger::Ledger::genesis({outputs, amount, range_bits}, rng);
          },
          py::arg("outputs") = 16, py::arg("amount") = 1000,
          py::arg("range_bits") = tx::kDefaultRangeBits, py::arg("rng"))
      .def("check", &ledger::Ledger::check)
      .def("apply", &ledger::Ledger::apply)
      .def_property_readonly("output_count", &ledger::Ledger::output_count)
      .def_property_readonly("height", &ledger::Ledger::height)
      .def("is_spent", &ledger::Ledger::is_spent)
      .def("colours", [](const ledger::Ledger& l) {
        py::dict d;
        for (const auto& [label, rec] : l.colours()) {
          py::dict r;
          r["id"] = rec.id;
          r["output"] = rec.output;
          r["supply"] = rec.supply;
          d[py::str(label)] = r;
        }
        return d;
      })
      .def("serialize", [](const ledger::Ledger& l) { return from_bytes(l.serialize()); })
      .def_static("deserialize", [](const py::bytes& b) { return ledger::Ledger::deserialize(to_bytes(b)); })
      .def("save", &ledger::Ledger::save)
      .def_static("load", &ledger::Ledger::load)
      .def(py::self == py::self);
  lm.def(
      "build_transfer",
      [](const ledger::Ledger& l, const std::vector<ledger::SpendInput>& inputs,
         const std::vector<ledger::Payment>& payments, std::size_t ring_size, std::size_t range_bits,
         const py::bytes& metadata, Rng& rng) {
        return ledger::build_transfer(l, inputs, payments, ring_size, range_bits, to_bytes(metadata), rng);
      },
      py::arg("ledger"), py::arg("inputs"), py::arg("payments"), py::arg("ring_size"),
      py::arg("range_bits") = tx::kDefaultRangeBits, py::arg("metadata") = py::bytes(), py::arg("rng"));

  // ---- analysis ----
  auto an = m.def_submodule("analysis");
  an.def("signature_sizes", [](std::size_t n, std::size_t m_, std::size_t q, std::size_t bits) {
    return to_py(analysis::to_json(analysis::signature_sizes(n, m_, q, bits)));
  }, py::arg("n"), py::arg("m"), py::arg("q") = 1, py::arg("range_bits") = 64);
  an.def(
      "anonymity_probability",
      [](std::size_t colours, std::size_t m_, const std::string& dist, double s,
         std::uint64_t trials, std::uint64_t seed) {
        const auto d = dist == "uniform" ? analysis::ColourDistribution::uniform()
                                         : analysis::ColourDistribution::zipf(s);
        return to_py(analysis::to_json(analysis::anonymity_probability(colours, m_, d, trials, seed)));
      },
      py::arg("colours"), py::arg("m"), py::arg("distribution") = "uniform", py::arg("exponent") = 1.0,
      py::arg("trials") = 1'000'000, py::arg("seed") = 1);
  an.def(
      "simulate_anonymity",
      [](std::size_t colours, std::size_t m_, const std::string& dist, double s,
         const std::string& event, std::uint64_t trials, std::uint64_t seed) {
        const auto d = dist == "uniform" ? analysis::ColourDistribution::uniform()
                                         : analysis::ColourDistribution::zipf(s);
        const auto e = event == "all-equal" ? analysis::ColourEvent::all_equal
                                            : analysis::ColourEvent::match_transaction;
        return to_py(analysis::to_json(analysis::simulate_anonymity(colours, m_, d, e, trials, seed)));
      },
      py::arg("colours"), py::arg("m"), py::arg("distribution") = "uniform", py::arg("exponent") = 1.0,
      py::arg("event") = "match-transaction", py::arg("trials") = 1'000'000, py::arg("seed") = 1);

  // ---- attack ----
  auto at = m.def_submodule("attack");
  py::class_<attack::EpsilonColourResult>(at, "EpsilonColourResult")
      .def_readonly("forged", &attack::EpsilonColourResult::forged)
      .def_readonly("verdict", &attack::EpsilonColourResult::verdict)
      .def_readonly("honest_signer_refused", &attack::EpsilonColourResult::honest_signer_refused)
      .def_readonly("honest_signer_error", &attack::EpsilonColourResult::honest_signer_error);
  at.def("epsilon_colour", &attack::epsilon_colour, py::arg("epsilon"), py::arg("ring_size") = 4,
         py::arg("colour_label") = "gold", py::arg("rng"));
}
