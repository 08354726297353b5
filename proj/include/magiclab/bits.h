// Copyright 2026 The Magiclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace magiclab {

/// Fixed-length vector over F2 packed into 64-bit words. Padding bits past
/// size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }

    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    bool operator[](size_t k) const { return get(k); }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }

    BitVector &operator^=(const BitVector &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVector operator^(const BitVector &other) const {
        BitVector result = *this;
        result ^= other;
        return result;
    }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    /// Low 64 bits; convenient for dense-state code where n <= 64.
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    bool operator==(const BitVector &other) const = default;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Parity of the bitwise AND of two equal-length vectors.
inline bool and_parity(const BitVector &a, const BitVector &b) {
    auto wa = a.words();
    auto wb = b.words();
    uint64_t acc = 0;
    for (size_t w = 0; w < wa.size(); w++) {
        acc ^= wa[w] & wb[w];
    }
    return std::popcount(acc) & 1;
}

}  // namespace magiclab
