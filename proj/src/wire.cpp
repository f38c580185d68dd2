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

#include "crct/wire.h"

#include <algorithm>

namespace crct {

void ByteWriter::u32le(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64le(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::varint(std::uint64_t v) {
  while (v >= 0x80) {
    u8(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  u8(static_cast<std::uint8_t>(v));
}

void ByteWriter::blob(ByteView bytes) {
  varint(bytes.size());
  raw(bytes);
}

void ByteWriter::str(std::string_view s) {
  blob(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

std::uint8_t ByteReader::u8() { return raw(1)[0]; }

std::uint32_t ByteReader::u32le() {
  auto b = raw(4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = v << 8 | b[i];
  return v;
}

std::uint64_t ByteReader::u64le() {
  auto b = raw(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
  return v;
}

std::uint64_t ByteReader::varint() {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    auto b = u8();
    if (shift == 63 && (b & 0xfe) != 0) throw DecodeError("varint overflow");
    v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if ((b & 0x80) == 0) {
      // Reject padded encodings so each value has exactly one form.
      if (b == 0 && shift != 0) throw DecodeError("non-minimal varint");
      return v;
    }
  }
  throw DecodeError("varint too long");
}

std::size_t ByteReader::length(std::uint64_t limit) {
  auto v = varint();
  if (v > limit) throw DecodeError("length field exceeds limit");
  return static_cast<std::size_t>(v);
}

ByteView ByteReader::raw(std::size_t n) {
  if (n > remaining()) throw DecodeError("unexpected end of input");
  auto view = in_.subspan(pos_, n);
  pos_ += n;
  return view;
}

Bytes ByteReader::blob(std::uint64_t limit) {
  auto n = length(std::min<std::uint64_t>(limit, remaining()));
  auto v = raw(n);
  return Bytes(v.begin(), v.end());
}

std::string ByteReader::str(std::uint64_t limit) {
  auto b = blob(limit);
  return std::string(b.begin(), b.end());
}

void ByteReader::expect_end() const {
  if (remaining() != 0) throw DecodeError("trailing bytes after record");
}

std::size_t varint_size(std::uint64_t v) {
  std::size_t n = 1;
  while (v >= 0x80) {
    v >>= 7;
    ++n;
  }
  return n;
}

}  // namespace crct
