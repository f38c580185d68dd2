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

// Little helpers for the canonical binary encodings. Lengths and indices are
// LEB128 varints; scalars and points are their fixed 32-byte encodings.

#include <cstdint>
#include <string>
#include <string_view>

#include "crct/group.h"

namespace crct {

class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32le(std::uint32_t v);
  void u64le(std::uint64_t v);
  void varint(std::uint64_t v);
  void raw(ByteView bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }
  void scalar(const Scalar& s) { raw(s.bytes()); }
  void point(const Point& p) { raw(p.bytes()); }
  /// varint length followed by the bytes.
  void blob(ByteView bytes);
  void str(std::string_view s);

  const Bytes& bytes() const& { return out_; }
  Bytes&& take() && { return std::move(out_); }
  std::size_t size() const { return out_.size(); }

 private:
  Bytes out_;
};

/// Reads from a borrowed buffer. Every getter throws DecodeError on truncation
/// or invalid content.
class ByteReader {
 public:
  explicit ByteReader(ByteView in) : in_(in) {}

  std::uint8_t u8();
  std::uint32_t u32le();
  std::uint64_t u64le();
  std::uint64_t varint();
  /// A varint that must not exceed `limit`; guards allocation sizes.
  std::size_t length(std::uint64_t limit);
  ByteView raw(std::size_t n);
  Scalar scalar() { return Scalar::from_bytes(raw(kScalarBytes)); }
  Point point() { return Point::from_bytes(raw(kPointBytes)); }
  Bytes blob(std::uint64_t limit);
  std::string str(std::uint64_t limit);

  std::size_t remaining() const { return in_.size() - pos_; }
  std::size_t position() const { return pos_; }
  void expect_end() const;

 private:
  ByteView in_;
  std::size_t pos_ = 0;
};

/// Number of bytes LEB128 uses for v.
std::size_t varint_size(std::uint64_t v);

}  // namespace crct
