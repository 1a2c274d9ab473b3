// Copyright 2026 The qyao Authors.
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

#include "qyao/bitstring.hpp"

#include "qyao/errors.hpp"

namespace qyao {

BitString::BitString(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaxLength) {
    throw InvalidSpec("bit string length must be in [0, 64], got " + std::to_string(length));
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw InvalidSpec("bit string word has bits beyond its length");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw InvalidSpec("bit string longer than 64 characters");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw InvalidSpec("bit string may only contain '0' and '1': " + std::string(text));
    }
  }
  return BitString(static_cast<int>(text.size()), bits);
}

BitString BitString::from_positions(int length, const std::vector<int>& positions) {
  BitString out(length);
  for (int p : positions) out = out.with(p, true);
  return out;
}

bool BitString::test(int position) const {
  if (position < 0 || position >= length_) {
    throw InvalidSpec("bit position " + std::to_string(position) + " out of range");
  }
  return (bits_ >> position) & 1U;
}

BitString BitString::with(int position, bool value) const {
  if (position < 0 || position >= length_) {
    throw InvalidSpec("bit position " + std::to_string(position) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << position;
  return BitString(length_, value ? (bits_ | bit) : (bits_ & ~bit));
}

std::vector<int> BitString::positions() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(weight()));
  for (std::uint64_t w = bits_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w));
  return out;
}

BitString BitString::compress(const BitString& mask) const {
  std::uint64_t packed = 0;
  int j = 0;
  for (std::uint64_t m = mask.word(); m != 0; m &= m - 1, ++j) {
    if ((bits_ >> std::countr_zero(m)) & 1U) packed |= std::uint64_t{1} << j;
  }
  return BitString(mask.weight(), packed);
}

BitString BitString::expand(const BitString& packed, const BitString& mask) {
  if (packed.size() != mask.weight()) {
    throw InvalidSpec("expand: packed length must equal mask weight");
  }
  std::uint64_t bits = 0;
  int j = 0;
  for (std::uint64_t m = mask.word(); m != 0; m &= m - 1, ++j) {
    if ((packed.word() >> j) & 1U) bits |= std::uint64_t{1} << std::countr_zero(m);
  }
  return BitString(mask.size(), bits);
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = length_ == 0 ? 1 : (length_ + 3) / 4;
  std::string s;
  for (int d = digits - 1; d >= 0; --d) s.push_back(kDigits[(bits_ >> (4 * d)) & 0xF]);
  return s;
}

BitString BitString::operator&(const BitString& other) const {
  if (other.length_ != length_) throw InvalidSpec("bit string length mismatch");
  return BitString(length_, bits_ & other.bits_);
}

BitString BitString::operator|(const BitString& other) const {
  if (other.length_ != length_) throw InvalidSpec("bit string length mismatch");
  return BitString(length_, bits_ | other.bits_);
}

BitString BitString::operator^(const BitString& other) const {
  if (other.length_ != length_) throw InvalidSpec("bit string length mismatch");
  return BitString(length_, bits_ ^ other.bits_);
}

std::vector<BitString> all_inputs(int length) {
  if (length > 26) throw ResourceLimit("refusing to enumerate 2^" + std::to_string(length) + " inputs");
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << length); ++w) out.emplace_back(length, w);
  return out;
}

std::vector<BitString> inputs_of_weight(int length, int weight) {
  std::vector<BitString> out;
  if (weight < 0 || weight > length) return out;
  if (weight == 0) return {BitString(length)};
  // Gosper's hack walks same-weight words in increasing order.
  std::uint64_t w = low_mask(weight);
  const std::uint64_t limit = low_mask(length);
  while (true) {
    out.emplace_back(length, w);
    if (w == (limit & ~low_mask(length - weight))) break;
    const std::uint64_t c = w & (~w + 1);
    const std::uint64_t r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
  }
  return out;
}

}  // namespace qyao
