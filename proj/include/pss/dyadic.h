// Copyright 2026 The PSS Authors
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

#ifndef PSS_DYADIC_H
#define PSS_DYADIC_H

#include <cstdint>
#include <string>
#include <string_view>

namespace pss {

/// A dyadic rational num / 2^log2den taken modulo 1, i.e. a fraction of a
/// full turn.
///
/// Canonical form: 0 <= num < 2^log2den, and num is odd unless the value is
/// zero (in which case log2den is also zero). Every constructor reduces to
/// canonical form, so == is value equality.
class Dyadic {
   public:
    static constexpr unsigned kMaxLog2Den = 62;

    constexpr Dyadic() = default;

    /// Reduces `num / 2^log2den` mod 1. Throws ResourceLimit when
    /// log2den exceeds kMaxLog2Den.
    static Dyadic make(int64_t num, unsigned log2den);

    /// Like make(), but rejects inputs that are not already canonical.
    static Dyadic make_canonical(uint64_t num, unsigned log2den);

    /// Parses "a/2^m" or "a/b" with b a power of two. A leading '-' is
    /// accepted and negates the value.
    static Dyadic parse(std::string_view text);

    static constexpr Dyadic half() {
        return Dyadic(1, 1);
    }
    static constexpr Dyadic quarter() {
        return Dyadic(1, 2);
    }
    static constexpr Dyadic eighth() {
        return Dyadic(1, 3);
    }

    constexpr uint64_t num() const {
        return num_;
    }
    constexpr unsigned log2den() const {
        return log2den_;
    }
    constexpr bool is_zero() const {
        return num_ == 0;
    }

    Dyadic operator+(Dyadic other) const;
    Dyadic operator-(Dyadic other) const;
    Dyadic operator-() const;
    Dyadic &operator+=(Dyadic other) {
        return *this = *this + other;
    }

    /// Multiplication by an integer, exact mod 1. Wrapping uint64 arithmetic
    /// is exact here because 2^log2den divides 2^64.
    Dyadic times(uint64_t k) const;

    /// Value in [0, 1).
    double to_double() const;

    /// Numerator scaled to denominator 2^kMaxLog2Den.
    uint64_t scaled() const {
        return num_ << (kMaxLog2Den - log2den_);
    }

    /// Canonical text "a/2^m".
    std::string str() const;

    constexpr bool operator==(const Dyadic &other) const = default;

   private:
    constexpr Dyadic(uint64_t num, unsigned log2den) : num_(num), log2den_(log2den) {
    }
    static Dyadic reduce(uint64_t num, unsigned log2den);

    uint64_t num_ = 0;
    unsigned log2den_ = 0;
};

}  // namespace pss

#endif
