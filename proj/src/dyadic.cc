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

#include "pss/dyadic.h"

#include <bit>
#include <charconv>

#include "pss/error.h"

namespace pss {

namespace {

uint64_t low_mask(unsigned bits) {
    return bits >= 64 ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
}

uint64_t parse_uint(std::string_view text, std::string_view whole) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::ParseError, "bad dyadic '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Dyadic Dyadic::reduce(uint64_t num, unsigned log2den) {
    num &= low_mask(log2den);
    if (num == 0) {
        return Dyadic();
    }
    unsigned tz = static_cast<unsigned>(std::countr_zero(num));
    if (tz > log2den) {
        tz = log2den;
    }
    return Dyadic(num >> tz, log2den - tz);
}

Dyadic Dyadic::make(int64_t num, unsigned log2den) {
    if (log2den > kMaxLog2Den) {
        throw Error(ErrorKind::ResourceLimit, "phase denominator 2^" + std::to_string(log2den) + " too fine");
    }
    return reduce(static_cast<uint64_t>(num), log2den);
}

Dyadic Dyadic::make_canonical(uint64_t num, unsigned log2den) {
    if (log2den > kMaxLog2Den) {
        throw Error(ErrorKind::ResourceLimit, "phase denominator 2^" + std::to_string(log2den) + " too fine");
    }
    bool ok = (num == 0 && log2den == 0) || (num < (uint64_t{1} << log2den) && (num & 1) == 1);
    if (!ok) {
        throw Error(
            ErrorKind::ParseError,
            "non-canonical coefficient " + std::to_string(num) + "/2^" + std::to_string(log2den));
    }
    return Dyadic(num, log2den);
}

Dyadic Dyadic::parse(std::string_view text) {
    std::string_view whole = text;
    bool negate = false;
    if (!text.empty() && text.front() == '-') {
        negate = true;
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw Error(ErrorKind::ParseError, "bad dyadic '" + std::string(whole) + "'");
    }
    uint64_t num = parse_uint(text.substr(0, slash), whole);
    std::string_view den = text.substr(slash + 1);
    unsigned log2den;
    if (den.starts_with("2^")) {
        uint64_t e = parse_uint(den.substr(2), whole);
        if (e > kMaxLog2Den) {
            throw Error(ErrorKind::ResourceLimit, "phase denominator in '" + std::string(whole) + "' too fine");
        }
        log2den = static_cast<unsigned>(e);
    } else {
        uint64_t d = parse_uint(den, whole);
        if (d == 0 || !std::has_single_bit(d)) {
            throw Error(ErrorKind::ParseError, "denominator of '" + std::string(whole) + "' is not a power of two");
        }
        log2den = static_cast<unsigned>(std::countr_zero(d));
        if (log2den > kMaxLog2Den) {
            throw Error(ErrorKind::ResourceLimit, "phase denominator in '" + std::string(whole) + "' too fine");
        }
    }
    Dyadic v = reduce(num, log2den);
    return negate ? -v : v;
}

Dyadic Dyadic::operator+(Dyadic other) const {
    unsigned d = log2den_ > other.log2den_ ? log2den_ : other.log2den_;
    uint64_t a = num_ << (d - log2den_);
    uint64_t b = other.num_ << (d - other.log2den_);
    return reduce(a + b, d);
}

Dyadic Dyadic::operator-() const {
    return reduce((uint64_t{1} << log2den_) - num_, log2den_);
}

Dyadic Dyadic::operator-(Dyadic other) const {
    return *this + (-other);
}

Dyadic Dyadic::times(uint64_t k) const {
    return reduce(num_ * k, log2den_);
}

double Dyadic::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(uint64_t{1} << log2den_);
}

std::string Dyadic::str() const {
    return std::to_string(num_) + "/2^" + std::to_string(log2den_);
}

}  // namespace pss
