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

// Canonical binary and JSON encodings of transactions.
//
// Binary layout (all counts are LEB128 varints):
//   u8 version (=1) | u8 kind (0 transfer, 1 issuance) | metadata blob
//   q | q x output
//   transfer:  n | m | n*m output ids (row-major)
//              | MLSAG: c1 | n*(2m+1) responses | m key images
//              | (q-1) x (challenge | response)
//   issuance:  label | colour value | colour blind
//              | u8 has_amount [ | amount value | amount blind ]
// output:      P | C | F | W | W bit commitments | W x (c0 | s0 | s1)

#include "crct/coloured_tx.h"
#include "crct/wire.h"
#include "json.hpp"

namespace crct::tx {

inline constexpr std::uint8_t kTxFormatVersion = 1;

void write_range_proof(ByteWriter& w, const RangeProof& p);
RangeProof read_range_proof(ByteReader& r);
void write_output(ByteWriter& w, const TxOutput& o);
TxOutput read_output(ByteReader& r);

Bytes encode_transaction(const Transaction& tx);
/// Throws DecodeError on any malformed or non-canonical input.
Transaction decode_transaction(ByteView bytes);

/// The part of the encoding covered by the signatures.
Bytes transaction_prefix(const Transaction& tx);

nlohmann::json to_json(const TxOutput& o);
TxOutput output_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Transaction& tx);
Transaction transaction_from_json(const nlohmann::json& j);

}  // namespace crct::tx
