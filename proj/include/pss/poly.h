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

#ifndef PSS_POLY_H
#define PSS_POLY_H

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pss/dyadic.h"

namespace pss {

/// Variable identifier packed into 32 bits: kind in the top two bits,
/// index below. Comparing codes orders inputs before path variables, and
/// path variables before frame variables.
enum class VarKind : uint32_t { Input = 0, Path = 1, Frame = 2 };

struct Var {
    uint32_t code = 0;

    static constexpr uint32_t kIndexBits = 30;
    static constexpr uint32_t kIndexMask = (uint32_t{1} << kIndexBits) - 1;

    static constexpr Var input(uint32_t i) {
        return Var{i};
    }
    static constexpr Var path(uint32_t j) {
        return Var{(uint32_t{1} << kIndexBits) | j};
    }
    static constexpr Var frame(uint32_t i) {
        return Var{(uint32_t{2} << kIndexBits) | i};
    }

    constexpr VarKind kind() const {
        return static_cast<VarKind>(code >> kIndexBits);
    }
    constexpr uint32_t index() const {
        return code & kIndexMask;
    }
    constexpr bool is_input() const {
        return kind() == VarKind::Input;
    }
    constexpr bool is_path() const {
        return kind() == VarKind::Path;
    }

    std::string str() const;
    static Var parse(std::string_view text);

    constexpr auto operator<=>(const Var &) const = default;
};

/// A set of variables, stored in descending order. The empty set is the
/// constant monomial 1.
class Monomial {
   public:
    using Storage = boost::container::small_vector<Var, 4>;

    Monomial() = default;
    explicit Monomial(Var v) {
        vars_.push_back(v);
    }
    /// Accepts vars in any order; duplicates collapse (x*x = x).
    static Monomial of(std::initializer_list<Var> vars);
    static Monomial from_vars(std::vector<Var> vars);

    size_t degree() const {
        return vars_.size();
    }
    bool is_constant() const {
        return vars_.empty();
    }
    bool contains(Var v) const;
    const Storage &vars() const {
        return vars_;
    }
    Var top() const {
        return vars_.front();
    }

    /// Set union (the multilinear product).
    Monomial operator*(const Monomial &other) const;
    Monomial without(Var v) const;
    bool subset_of(const Monomial &other) const;
    bool all_of_kind(VarKind kind) const;
    bool any_of_kind(VarKind kind) const;

    /// "1" for the constant monomial, else variable names joined by nothing
    /// in ascending order, e.g. "x0x1y2".
    std::string str() const;

    bool operator==(const Monomial &other) const = default;

   private:
    Storage vars_;
};

/// Canonical monomial order: higher degree first, then reverse
/// lexicographic (the monomial containing the larger top variable first).
struct MonoLess {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// A total assignment of variables to bits.
using Assignment = std::function<bool(Var)>;

/// Multilinear polynomial over Z2 (XOR of monomials).
class BoolPoly {
   public:
    BoolPoly() = default;
    explicit BoolPoly(Var v) {
        terms_.emplace_back(v);
    }
    explicit BoolPoly(Monomial m) {
        terms_.push_back(std::move(m));
    }
    static BoolPoly one() {
        return BoolPoly(Monomial());
    }
    static BoolPoly constant(bool b) {
        return b ? one() : BoolPoly();
    }
    /// XOR of the given monomials; repeated monomials cancel.
    static BoolPoly from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].is_constant();
    }
    size_t size() const {
        return terms_.size();
    }
    size_t degree() const;
    bool has_constant() const;
    bool contains(const Monomial &m) const;
    bool contains_var(Var v) const;
    /// True when this is exactly the single variable v.
    bool is_var(Var v) const;
    /// The variable this polynomial consists of, if it is a bare variable.
    bool is_single_var(Var *out = nullptr) const;
    std::vector<Var> vars() const;

    BoolPoly operator+(const BoolPoly &other) const;
    BoolPoly &operator+=(const BoolPoly &other);
    BoolPoly operator*(const BoolPoly &other) const;
    /// Toggles one monomial.
    void toggle(const Monomial &m);

    bool eval(const Assignment &sigma) const;

    std::string str() const;
    static BoolPoly parse(std::string_view text);

    bool operator==(const BoolPoly &other) const = default;

   private:
    std::vector<Monomial> terms_;  // sorted by MonoLess, unique
};

BoolPoly bool_mul(const BoolPoly &a, const BoolPoly &b);
BoolPoly subst_bool(const BoolPoly &f, Var v, const BoolPoly &g);

/// Integer-coefficient multilinear polynomial, the exact lift of a BoolPoly.
using IntPoly = std::map<Monomial, int64_t, MonoLess>;

/// Ceiling on the number of terms any single lift may produce.
inline constexpr size_t kLiftTermCeiling = size_t{1} << 20;

/// The real polynomial agreeing with f on every Boolean assignment.
IntPoly lift(const BoolPoly &f);

/// Multilinear polynomial with dyadic coefficients mod 1.
class PhasePoly {
   public:
    using Map = std::map<Monomial, Dyadic, MonoLess>;

    PhasePoly() = default;

    const Map &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    size_t size() const {
        return terms_.size();
    }
    Dyadic coeff(const Monomial &m) const;
    Dyadic constant_term() const {
        return coeff(Monomial());
    }
    bool contains_var(Var v) const;
    size_t max_log2den() const;

    /// Adds c to the coefficient of m.
    void add(const Monomial &m, Dyadic c);
    /// Adds c * lift(f).
    void add_lift(const BoolPoly &f, Dyadic c);
    /// Adds c * m * lift(f).
    void add_mono_lift(const Monomial &m, const BoolPoly &f, Dyadic c);

    PhasePoly operator+(const PhasePoly &other) const;
    PhasePoly &operator+=(const PhasePoly &other);
    PhasePoly operator-() const;

    Dyadic eval(const Assignment &sigma) const;

    std::string str() const;
    static PhasePoly parse(std::string_view text);

    bool operator==(const PhasePoly &other) const = default;

   private:
    Map terms_;
};

/// Replaces v with g (through its lift) in every monomial.
PhasePoly subst_phase(const PhasePoly &p, Var v, const BoolPoly &g);

/// Simultaneous substitution: every mapped variable is replaced by its image.
/// Unmapped variables are left alone.
using VarMap = std::map<Var, BoolPoly>;
BoolPoly subst_many(const BoolPoly &f, const VarMap &m);
PhasePoly subst_many(const PhasePoly &p, const VarMap &m);

/// Renames variables (an injective map); faster than subst_many.
Monomial rename(const Monomial &m, const std::map<Var, Var> &r);
BoolPoly rename(const BoolPoly &f, const std::map<Var, Var> &r);
PhasePoly rename(const PhasePoly &p, const std::map<Var, Var> &r);

/// Splits p = v*q + r with v absent from q and r.
std::pair<PhasePoly, PhasePoly> quotient(const PhasePoly &p, Var v);

/// 2p mod 2 as a Z2 polynomial. Throws NotHalfInteger unless every
/// coefficient is a multiple of 1/2.
BoolPoly half_part(const PhasePoly &p);

/// The PhasePoly (1/2) * lift(f) mod 1, which is (1/2) times each monomial.
PhasePoly half_of(const BoolPoly &f);

}  // namespace pss

#endif
