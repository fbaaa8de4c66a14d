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

#include "pss/poly.h"

#include <algorithm>
#include <charconv>

#include "pss/error.h"

namespace pss {

// ---------------------------------------------------------------- Var

std::string Var::str() const {
    char prefix = kind() == VarKind::Input ? 'x' : kind() == VarKind::Path ? 'y' : 'z';
    return prefix + std::to_string(index());
}

Var Var::parse(std::string_view text) {
    if (text.size() < 2 || (text[0] != 'x' && text[0] != 'y' && text[0] != 'z')) {
        throw Error(ErrorKind::ParseError, "bad variable '" + std::string(text) + "'");
    }
    uint32_t idx = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), idx);
    if (ec != std::errc() || ptr != text.data() + text.size() || idx > kIndexMask) {
        throw Error(ErrorKind::ParseError, "bad variable '" + std::string(text) + "'");
    }
    switch (text[0]) {
        case 'x':
            return input(idx);
        case 'y':
            return path(idx);
        default:
            return frame(idx);
    }
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(std::initializer_list<Var> vars) {
    return from_vars(std::vector<Var>(vars));
}

Monomial Monomial::from_vars(std::vector<Var> vars) {
    std::sort(vars.begin(), vars.end(), std::greater<>());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Monomial m;
    m.vars_.assign(vars.begin(), vars.end());
    return m;
}

bool Monomial::contains(Var v) const {
    for (Var w : vars_) {
        if (w == v) {
            return true;
        }
        if (w < v) {
            return false;
        }
    }
    return false;
}

Monomial Monomial::operator*(const Monomial &other) const {
    Monomial r;
    r.vars_.reserve(vars_.size() + other.vars_.size());
    auto a = vars_.begin();
    auto b = other.vars_.begin();
    while (a != vars_.end() && b != other.vars_.end()) {
        if (*a == *b) {
            r.vars_.push_back(*a);
            ++a;
            ++b;
        } else if (*a > *b) {
            r.vars_.push_back(*a++);
        } else {
            r.vars_.push_back(*b++);
        }
    }
    r.vars_.insert(r.vars_.end(), a, vars_.end());
    r.vars_.insert(r.vars_.end(), b, other.vars_.end());
    return r;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (Var w : vars_) {
        if (w != v) {
            r.vars_.push_back(w);
        }
    }
    return r;
}

bool Monomial::subset_of(const Monomial &other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end(), std::greater<>());
}

bool Monomial::all_of_kind(VarKind kind) const {
    return std::all_of(vars_.begin(), vars_.end(), [&](Var v) { return v.kind() == kind; });
}

bool Monomial::any_of_kind(VarKind kind) const {
    return std::any_of(vars_.begin(), vars_.end(), [&](Var v) { return v.kind() == kind; });
}

std::string Monomial::str() const {
    if (vars_.empty()) {
        return "1";
    }
    std::string s;
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
        s += it->str();
    }
    return s;
}

bool MonoLess::operator()(const Monomial &a, const Monomial &b) const {
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    const auto &va = a.vars();
    const auto &vb = b.vars();
    for (size_t i = 0; i < va.size(); i++) {
        if (va[i] != vb[i]) {
            return va[i] > vb[i];
        }
    }
    return false;
}

namespace {

Monomial parse_monomial(std::string_view text) {
    if (text == "1") {
        return Monomial();
    }
    std::vector<Var> vars;
    size_t i = 0;
    while (i < text.size()) {
        size_t j = i + 1;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
            j++;
        }
        vars.push_back(Var::parse(text.substr(i, j - i)));
        i = j;
    }
    if (vars.empty()) {
        throw Error(ErrorKind::ParseError, "empty monomial");
    }
    return Monomial::from_vars(std::move(vars));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_plus(std::string_view text) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); i++) {
        if (i == text.size() || text[i] == '+') {
            parts.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return parts;
}

uint64_t low_mask(unsigned bits) {
    return bits >= 64 ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
}

// lift(f) mod 2^d, via L <- L + m - 2*L*m for each monomial m of f.
std::vector<std::pair<Monomial, uint64_t>> lift_mod(const BoolPoly &f, unsigned d) {
    std::map<Monomial, uint64_t, MonoLess> acc;
    uint64_t mask = low_mask(d);
    for (const Monomial &m : f.terms()) {
        std::vector<std::pair<Monomial, uint64_t>> cross;
        cross.reserve(acc.size());
        for (const auto &[t, a] : acc) {
            cross.emplace_back(t * m, a);
        }
        acc[m] = (acc[m] + 1) & mask;
        for (auto &[t, a] : cross) {
            uint64_t &slot = acc[t];
            slot = (slot - 2 * a) & mask;
        }
        for (auto it = acc.begin(); it != acc.end();) {
            it = it->second == 0 ? acc.erase(it) : std::next(it);
        }
        if (acc.size() > kLiftTermCeiling) {
            throw Error(ErrorKind::ResourceLimit, "lift exceeds the term ceiling");
        }
    }
    return {acc.begin(), acc.end()};
}

}  // namespace

// ---------------------------------------------------------------- BoolPoly

BoolPoly BoolPoly::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), MonoLess());
    BoolPoly r;
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) {
            j++;
        }
        if ((j - i) % 2 == 1) {
            r.terms_.push_back(std::move(terms[i]));
        }
        i = j;
    }
    return r;
}

size_t BoolPoly::degree() const {
    size_t d = 0;
    for (const auto &m : terms_) {
        d = std::max(d, m.degree());
    }
    return d;
}

bool BoolPoly::has_constant() const {
    return !terms_.empty() && terms_.back().is_constant();
}

bool BoolPoly::contains(const Monomial &m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, MonoLess());
}

bool BoolPoly::contains_var(Var v) const {
    for (const auto &m : terms_) {
        if (m.contains(v)) {
            return true;
        }
    }
    return false;
}

bool BoolPoly::is_var(Var v) const {
    return terms_.size() == 1 && terms_[0].degree() == 1 && terms_[0].top() == v;
}

bool BoolPoly::is_single_var(Var *out) const {
    if (terms_.size() == 1 && terms_[0].degree() == 1) {
        if (out != nullptr) {
            *out = terms_[0].top();
        }
        return true;
    }
    return false;
}

std::vector<Var> BoolPoly::vars() const {
    std::vector<Var> vs;
    for (const auto &m : terms_) {
        vs.insert(vs.end(), m.vars().begin(), m.vars().end());
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

BoolPoly BoolPoly::operator+(const BoolPoly &other) const {
    BoolPoly r;
    r.terms_.reserve(terms_.size() + other.terms_.size());
    MonoLess less;
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (less(*a, *b)) {
            r.terms_.push_back(*a++);
        } else if (less(*b, *a)) {
            r.terms_.push_back(*b++);
        } else {
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, other.terms_.end());
    return r;
}

BoolPoly &BoolPoly::operator+=(const BoolPoly &other) {
    return *this = *this + other;
}

BoolPoly BoolPoly::operator*(const BoolPoly &other) const {
    if (is_zero() || other.is_zero()) {
        return {};
    }
    if (is_one()) {
        return other;
    }
    if (other.is_one()) {
        return *this;
    }
    std::vector<Monomial> products;
    products.reserve(terms_.size() * other.terms_.size());
    for (const auto &a : terms_) {
        for (const auto &b : other.terms_) {
            products.push_back(a * b);
        }
    }
    return from_terms(std::move(products));
}

void BoolPoly::toggle(const Monomial &m) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, MonoLess());
    if (it != terms_.end() && *it == m) {
        terms_.erase(it);
    } else {
        terms_.insert(it, m);
    }
}

bool BoolPoly::eval(const Assignment &sigma) const {
    bool acc = false;
    for (const auto &m : terms_) {
        bool t = true;
        for (Var v : m.vars()) {
            t = t && sigma(v);
        }
        acc ^= t;
    }
    return acc;
}

std::string BoolPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (size_t i = 0; i < terms_.size(); i++) {
        if (i > 0) {
            s += " + ";
        }
        s += terms_[i].str();
    }
    return s;
}

BoolPoly BoolPoly::parse(std::string_view text) {
    text = trim(text);
    if (text == "0") {
        return {};
    }
    std::vector<Monomial> terms;
    for (auto part : split_plus(text)) {
        terms.push_back(parse_monomial(part));
    }
    return from_terms(std::move(terms));
}

BoolPoly bool_mul(const BoolPoly &a, const BoolPoly &b) {
    return a * b;
}

BoolPoly subst_bool(const BoolPoly &f, Var v, const BoolPoly &g) {
    std::vector<Monomial> with_v;
    std::vector<Monomial> rest;
    for (const auto &m : f.terms()) {
        if (m.contains(v)) {
            with_v.push_back(m.without(v));
        } else {
            rest.push_back(m);
        }
    }
    if (with_v.empty()) {
        return f;
    }
    return BoolPoly::from_terms(std::move(rest)) + BoolPoly::from_terms(std::move(with_v)) * g;
}

IntPoly lift(const BoolPoly &f) {
    IntPoly acc;
    for (const Monomial &m : f.terms()) {
        std::vector<std::pair<Monomial, int64_t>> cross;
        for (const auto &[t, a] : acc) {
            cross.emplace_back(t * m, a);
        }
        acc[m] += 1;
        for (auto &[t, a] : cross) {
            int64_t twice;
            int64_t next;
            if (__builtin_mul_overflow(a, int64_t{2}, &twice) || __builtin_sub_overflow(acc[t], twice, &next)) {
                throw Error(ErrorKind::ResourceLimit, "lift coefficient overflow");
            }
            acc[t] = next;
        }
        for (auto it = acc.begin(); it != acc.end();) {
            it = it->second == 0 ? acc.erase(it) : std::next(it);
        }
        if (acc.size() > kLiftTermCeiling) {
            throw Error(ErrorKind::ResourceLimit, "lift exceeds the term ceiling");
        }
    }
    return acc;
}

// ---------------------------------------------------------------- PhasePoly

Dyadic PhasePoly::coeff(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Dyadic() : it->second;
}

bool PhasePoly::contains_var(Var v) const {
    for (const auto &[m, c] : terms_) {
        if (m.contains(v)) {
            return true;
        }
    }
    return false;
}

size_t PhasePoly::max_log2den() const {
    size_t d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max<size_t>(d, c.log2den());
    }
    return d;
}

void PhasePoly::add(const Monomial &m, Dyadic c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void PhasePoly::add_lift(const BoolPoly &f, Dyadic c) {
    add_mono_lift(Monomial(), f, c);
}

void PhasePoly::add_mono_lift(const Monomial &m, const BoolPoly &f, Dyadic c) {
    if (c.is_zero()) {
        return;
    }
    if (c.log2den() == 1 || f.size() <= 1) {
        for (const auto &t : f.terms()) {
            add(m * t, c);
        }
        return;
    }
    for (const auto &[t, k] : lift_mod(f, c.log2den())) {
        add(m * t, c.times(k));
    }
}

PhasePoly PhasePoly::operator+(const PhasePoly &other) const {
    PhasePoly r = *this;
    r += other;
    return r;
}

PhasePoly &PhasePoly::operator+=(const PhasePoly &other) {
    for (const auto &[m, c] : other.terms_) {
        add(m, c);
    }
    return *this;
}

PhasePoly PhasePoly::operator-() const {
    PhasePoly r;
    for (const auto &[m, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), m, -c);
    }
    return r;
}

Dyadic PhasePoly::eval(const Assignment &sigma) const {
    Dyadic acc;
    for (const auto &[m, c] : terms_) {
        bool t = true;
        for (Var v : m.vars()) {
            t = t && sigma(v);
        }
        if (t) {
            acc += c;
        }
    }
    return acc;
}

std::string PhasePoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) {
            s += " + ";
        }
        first = false;
        s += c.str();
        if (!m.is_constant()) {
            s += "·" + m.str();
        }
    }
    return s;
}

PhasePoly PhasePoly::parse(std::string_view text) {
    text = trim(text);
    PhasePoly p;
    if (text == "0") {
        return p;
    }
    static constexpr std::string_view kDot = "·";
    for (auto part : split_plus(text)) {
        size_t cut = part.find(kDot);
        size_t skip = kDot.size();
        if (cut == std::string_view::npos) {
            cut = part.find('*');
            skip = 1;
        }
        if (cut == std::string_view::npos) {
            p.add(Monomial(), Dyadic::parse(part));
        } else {
            p.add(parse_monomial(trim(part.substr(cut + skip))), Dyadic::parse(trim(part.substr(0, cut))));
        }
    }
    return p;
}

PhasePoly subst_phase(const PhasePoly &p, Var v, const BoolPoly &g) {
    auto [q, r] = quotient(p, v);
    if (q.is_zero()) {
        return r;
    }
    unsigned d = static_cast<unsigned>(q.max_log2den());
    if (d <= 1 || g.size() <= 1) {
        for (const auto &[m, c] : q.terms()) {
            for (const auto &t : g.terms()) {
                r.add(m * t, c);
            }
        }
        return r;
    }
    auto lifted = lift_mod(g, d);
    for (const auto &[m, c] : q.terms()) {
        for (const auto &[t, k] : lifted) {
            r.add(m * t, c.times(k));
        }
    }
    return r;
}

BoolPoly subst_many(const BoolPoly &f, const VarMap &map) {
    std::vector<Monomial> untouched;
    BoolPoly touched;
    for (const auto &m : f.terms()) {
        BoolPoly prod = BoolPoly::one();
        Monomial keep;
        bool hit = false;
        for (Var v : m.vars()) {
            auto it = map.find(v);
            if (it == map.end()) {
                keep = keep * Monomial(v);
            } else {
                hit = true;
                prod = prod * it->second;
            }
        }
        if (!hit) {
            untouched.push_back(m);
        } else {
            touched += prod * BoolPoly(keep);
        }
    }
    return BoolPoly::from_terms(std::move(untouched)) + touched;
}

PhasePoly subst_many(const PhasePoly &p, const VarMap &map) {
    PhasePoly r;
    for (const auto &[m, c] : p.terms()) {
        BoolPoly prod = BoolPoly::one();
        Monomial keep;
        bool hit = false;
        for (Var v : m.vars()) {
            auto it = map.find(v);
            if (it == map.end()) {
                keep = keep * Monomial(v);
            } else {
                hit = true;
                prod = prod * it->second;
            }
        }
        if (!hit) {
            r.add(m, c);
        } else {
            r.add_mono_lift(keep, prod, c);
        }
    }
    return r;
}

Monomial rename(const Monomial &m, const std::map<Var, Var> &r) {
    std::vector<Var> vs;
    vs.reserve(m.degree());
    for (Var v : m.vars()) {
        auto it = r.find(v);
        vs.push_back(it == r.end() ? v : it->second);
    }
    return Monomial::from_vars(std::move(vs));
}

BoolPoly rename(const BoolPoly &f, const std::map<Var, Var> &r) {
    std::vector<Monomial> terms;
    terms.reserve(f.size());
    for (const auto &m : f.terms()) {
        terms.push_back(rename(m, r));
    }
    return BoolPoly::from_terms(std::move(terms));
}

PhasePoly rename(const PhasePoly &p, const std::map<Var, Var> &r) {
    PhasePoly out;
    for (const auto &[m, c] : p.terms()) {
        out.add(rename(m, r), c);
    }
    return out;
}

std::pair<PhasePoly, PhasePoly> quotient(const PhasePoly &p, Var v) {
    PhasePoly q;
    PhasePoly r;
    for (const auto &[m, c] : p.terms()) {
        if (m.contains(v)) {
            q.add(m.without(v), c);
        } else {
            r.add(m, c);
        }
    }
    return {std::move(q), std::move(r)};
}

BoolPoly half_part(const PhasePoly &p) {
    std::vector<Monomial> terms;
    for (const auto &[m, c] : p.terms()) {
        if (c.log2den() > 1) {
            throw Error(ErrorKind::NotHalfInteger, "coefficient " + c.str() + " of " + m.str());
        }
        terms.push_back(m);
    }
    return BoolPoly::from_terms(std::move(terms));
}

PhasePoly half_of(const BoolPoly &f) {
    PhasePoly p;
    for (const auto &m : f.terms()) {
        p.add(m, Dyadic::half());
    }
    return p;
}

}  // namespace pss
