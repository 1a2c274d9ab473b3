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

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qyao {

// Mask with the low `length` bits set.
constexpr std::uint64_t low_mask(int length) noexcept {
  return length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
}

/// An input x of N <= 64 bits.
///
/// Positions are 0-based in the API. Position p is bit p of the packed word and
/// character p of the textual form, so "0100" has its single one at position 1
/// (the second input bit).
class BitString {
 public:
  static constexpr int kMaxLength = 64;

  BitString() = default;
  explicit BitString(int length, std::uint64_t bits = 0);

  static BitString parse(std::string_view text);
  static BitString ones(int length) { return BitString(length, low_mask(length)); }
  static BitString zeros(int length) { return BitString(length, 0); }
  static BitString from_positions(int length, const std::vector<int>& positions);

  int size() const noexcept { return length_; }
  std::uint64_t word() const noexcept { return bits_; }
  int weight() const noexcept { return std::popcount(bits_); }
  bool test(int position) const;
  bool operator[](int position) const { return test(position); }

  BitString with(int position, bool value) const;
  BitString complement() const { return BitString(length_, ~bits_ & low_mask(length_)); }
  std::vector<int> positions() const;

  // Bits of *this at the positions selected by `mask`, packed in increasing
  // position order into a string of length mask.weight().
  BitString compress(const BitString& mask) const;
  // Inverse of compress: spreads the bits of `packed` onto the ones of `mask`.
  static BitString expand(const BitString& packed, const BitString& mask);

  std::string to_string() const;
  std::string to_hex() const;

  BitString operator&(const BitString& other) const;
  BitString operator|(const BitString& other) const;
  BitString operator^(const BitString& other) const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

// All strings of a given length in increasing word order.
std::vector<BitString> all_inputs(int length);
// All strings of a given length and Hamming weight.
std::vector<BitString> inputs_of_weight(int length, int weight);

}  // namespace qyao

template <>
struct std::hash<qyao::BitString> {
  std::size_t operator()(const qyao::BitString& x) const noexcept {
    return std::hash<std::uint64_t>{}(x.word() * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(x.size()));
  }
};
