# Copyright 2026 The crct Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Coloured ring confidential transactions."""

from ._crct import (
    G,
    H,
    ColourMismatchError,
    ConservationError,
    DecodeError,
    InsufficientFunds,
    InsufficientOutputs,
    Point,
    Rng,
    Scalar,
    SigningError,
    SnapshotError,
    analysis,
    attack,
    hash_to_point,
    hash_to_scalar,
    ledger,
    mlsag,
    mul_base,
    pedersen,
    tx,
)

__all__ = [
    "G",
    "H",
    "ColourMismatchError",
    "ConservationError",
    "DecodeError",
    "InsufficientFunds",
    "InsufficientOutputs",
    "Point",
    "Rng",
    "Scalar",
    "SigningError",
    "SnapshotError",
    "analysis",
    "attack",
    "hash_to_point",
    "hash_to_scalar",
    "ledger",
    "mlsag",
    "mul_base",
    "pedersen",
    "tx",
]
