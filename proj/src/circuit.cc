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

#include "pss/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>

#include "pss/error.h"

namespace pss {

void Circuit::append(Gate g) {
    g.validate(width);
    gates.push_back(std::move(g));
}

void Circuit::append(GateName name, std::vector<uint32_t> qubits, Dyadic angle) {
    append(Gate{name, std::move(qubits), gate_has_angle(name) ? angle : Dyadic()});
}

void Circuit::extend(const Circuit &other) {
    if (other.width > width) {
        throw Error(ErrorKind::WidthError, "cannot extend a narrower circuit");
    }
    for (const auto &g : other.gates) {
        append(g);
    }
}

Circuit Circuit::inverse() const {
    Circuit r(width);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        r.gates.push_back(it->inverse());
    }
    return r;
}

std::string Circuit::str() const {
    std::string s = "qubits " + std::to_string(width) + "\n";
    for (const auto &g : gates) {
        s += g.str() + "\n";
    }
    return s;
}

namespace {

struct Token {
    std::string_view text;
    size_t column;  // 1-based
};

[[noreturn]] void syntax_error(size_t line, size_t column, const std::string &what) {
    throw Error(ErrorKind::SyntaxError, std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            i++;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') {
            j++;
        }
        tokens.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return tokens;
}

bool parse_index(std::string_view text, uint32_t *out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
    return !text.empty() && ec == std::errc() && ptr == text.data() + text.size();
}

bool looks_like_angle(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0) {
        return false;
    }
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    std::string_view den = text.substr(slash + 1);
    if (den.starts_with("2^")) {
        den.remove_prefix(2);
    }
    return digits(text.substr(0, slash)) && digits(den);
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
    Circuit c;
    bool have_header = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            uint32_t n = 0;
            if (tokens[0].text != "qubits") {
                syntax_error(line_no, tokens[0].column, "expected 'qubits N' header");
            }
            if (tokens.size() != 2 || !parse_index(tokens[1].text, &n)) {
                syntax_error(line_no, tokens[0].column, "malformed 'qubits N' header");
            }
            c.width = n;
            have_header = true;
            continue;
        }
        auto name = parse_gate_name(tokens[0].text);
        if (!name.has_value()) {
            syntax_error(line_no, tokens[0].column, "unknown gate '" + std::string(tokens[0].text) + "'");
        }
        Gate g;
        g.name = *name;
        size_t t = 1;
        if (gate_has_angle(*name)) {
            if (t >= tokens.size() || !looks_like_angle(tokens[t].text)) {
                syntax_error(line_no, t < tokens.size() ? tokens[t].column : line.size() + 1, "expected an angle");
            }
            try {
                g.angle = Dyadic::parse(tokens[t].text);
            } catch (const Error &e) {
                syntax_error(line_no, tokens[t].column, e.what());
            }
            t++;
        }
        for (; t < tokens.size(); t++) {
            uint32_t q = 0;
            if (!parse_index(tokens[t].text, &q)) {
                syntax_error(line_no, tokens[t].column, "expected a qubit index, got '" + std::string(tokens[t].text) + "'");
            }
            g.qubits.push_back(q);
        }
        try {
            g.validate();
        } catch (const Error &e) {
            syntax_error(line_no, tokens[0].column, e.what());
        }
        for (size_t i = 0; i < g.qubits.size(); i++) {
            if (g.qubits[i] >= c.width) {
                throw Error(
                    ErrorKind::WidthError,
                    std::to_string(line_no) + ":" + std::to_string(tokens[tokens.size() - g.qubits.size() + i].column) +
                        ": qubit " + std::to_string(g.qubits[i]) + " out of range for width " +
                        std::to_string(c.width));
            }
        }
        c.gates.push_back(std::move(g));
    }
    if (!have_header) {
        syntax_error(line_no, 1, "missing 'qubits N' header");
    }
    return c;
}

PathSum simulate(const Circuit &c) {
    PathSum p = PathSum::identity(c.width);
    for (const auto &g : c.gates) {
        apply_gate(p, g);
    }
    return p;
}

// ---------------------------------------------------------------- stats

std::string CircuitStats::str() const {
    std::string s = "total " + std::to_string(total);
    for (const auto &[name, count] : counts) {
        s += ", " + name + " " + std::to_string(count);
    }
    s += ", t-count " + std::to_string(t_count) + ", h-layers " + std::to_string(h_layers);
    return s;
}

CircuitStats stats(const Circuit &c) {
    CircuitStats st;
    std::vector<size_t> level(c.width, 0);
    for (const auto &g : c.gates) {
        st.total++;
        st.counts[std::string(gate_name_str(g.name))]++;
        if (g.name == GateName::T || g.name == GateName::Tdg) {
            st.t_count++;
        }
        size_t l = 0;
        for (uint32_t q : g.qubits) {
            l = std::max(l, level[q]);
        }
        if (g.name == GateName::H) {
            l++;
        }
        for (uint32_t q : g.qubits) {
            level[q] = l;
        }
        st.h_layers = std::max(st.h_layers, l);
    }
    return st;
}

Circuit random_circuit(RandomKind kind, uint32_t n, size_t gates, uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorKind::WidthError, "random circuits need at least 2 qubits");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_gate(0, kind == RandomKind::Clifford ? 2 : 3);
    std::uniform_int_distribution<uint32_t> pick_qubit(0, n - 1);
    std::uniform_int_distribution<uint32_t> pick_other(0, n - 2);
    Circuit c(n);
    for (size_t i = 0; i < gates; i++) {
        int which = pick_gate(rng);
        uint32_t a = pick_qubit(rng);
        switch (which) {
            case 0:
                c.gates.push_back({GateName::H, {a}, {}});
                break;
            case 1:
                c.gates.push_back({GateName::S, {a}, {}});
                break;
            case 2: {
                uint32_t b = pick_other(rng);
                if (b >= a) {
                    b++;
                }
                c.gates.push_back({GateName::CX, {a, b}, {}});
                break;
            }
            default:
                c.gates.push_back({GateName::T, {a}, {}});
                break;
        }
    }
    return c;
}

// ---------------------------------------------------------------- dense oracle

namespace {

Amplitude turn(double fraction) {
    return std::polar(1.0, 2 * std::numbers::pi * fraction);
}

}  // namespace

CMatrix gate_matrix(const Gate &g) {
    const double r = 1 / std::numbers::sqrt2;
    const Amplitude i1(0, 1);
    size_t a = g.qubits.size();
    size_t dim = size_t{1} << a;
    CMatrix m(dim, dim);
    switch (g.name) {
        case GateName::X:
            m(0, 1) = m(1, 0) = 1;
            return m;
        case GateName::H:
            m(0, 0) = m(0, 1) = m(1, 0) = r;
            m(1, 1) = -r;
            return m;
        case GateName::Z:
            m(0, 0) = 1;
            m(1, 1) = -1;
            return m;
        case GateName::S:
            m(0, 0) = 1;
            m(1, 1) = i1;
            return m;
        case GateName::Sdg:
            m(0, 0) = 1;
            m(1, 1) = -i1;
            return m;
        case GateName::T:
            m(0, 0) = 1;
            m(1, 1) = Amplitude(r, r);
            return m;
        case GateName::Tdg:
            m(0, 0) = 1;
            m(1, 1) = Amplitude(r, -r);
            return m;
        case GateName::RZ:
            m(0, 0) = 1;
            m(1, 1) = turn(g.angle.to_double());
            return m;
        case GateName::GPhase:
            m(0, 0) = turn(g.angle.to_double());
            return m;
        case GateName::Swap:
            m(0, 0) = m(3, 3) = 1;
            m(1, 2) = m(2, 1) = 1;
            return m;
        case GateName::CX:
        case GateName::CCX:
        case GateName::MCX:
            // Controls are the high bits; the target is the lowest bit.
            for (size_t b = 0; b < dim; b++) {
                bool all = (b >> 1) == (dim >> 1) - 1;
                m(all ? b ^ 1 : b, b) = 1;
            }
            return m;
        case GateName::CZ:
        case GateName::CCZ:
            for (size_t b = 0; b < dim; b++) {
                m(b, b) = b == dim - 1 ? -1 : 1;
            }
            return m;
        case GateName::CRZ:
        case GateName::MCRZ:
            for (size_t b = 0; b < dim; b++) {
                m(b, b) = b == dim - 1 ? turn(g.angle.to_double()) : Amplitude(1);
            }
            return m;
    }
    return m;
}

CMatrix circuit_unitary(const Circuit &c) {
    if (c.width > 14) {
        throw Error(ErrorKind::ResourceLimit, "dense simulation is capped at 14 qubits");
    }
    size_t dim = size_t{1} << c.width;
    CMatrix u = CMatrix::identity(dim);
    for (const auto &g : c.gates) {
        CMatrix gm = gate_matrix(g);
        size_t a = g.qubits.size();
        size_t sub = size_t{1} << a;
        if (a == 0) {
            u = u.scaled(gm(0, 0));
            continue;
        }
        // Bit of qubit q within a basis index (qubit 0 is the MSB).
        std::vector<size_t> bits(a);
        for (size_t i = 0; i < a; i++) {
            bits[i] = size_t{1} << (c.width - 1 - g.qubits[i]);
        }
        size_t touched = 0;
        for (size_t b : bits) {
            touched |= b;
        }
        std::vector<size_t> offsets(sub);
        for (size_t s = 0; s < sub; s++) {
            size_t off = 0;
            for (size_t i = 0; i < a; i++) {
                if ((s >> (a - 1 - i)) & 1) {
                    off |= bits[i];
                }
            }
            offsets[s] = off;
        }
        // Nonzero entries of the gate, row by row.
        std::vector<std::vector<std::pair<size_t, Amplitude>>> nz(sub);
        for (size_t s = 0; s < sub; s++) {
            for (size_t t = 0; t < sub; t++) {
                if (gm(s, t) != Amplitude(0)) {
                    nz[s].emplace_back(t, gm(s, t));
                }
            }
        }
        std::vector<Amplitude> in(sub * dim);
        for (size_t base = 0; base < dim; base++) {
            if (base & touched) {
                continue;
            }
            for (size_t t = 0; t < sub; t++) {
                const Amplitude *row = &u.data[(base | offsets[t]) * dim];
                std::copy(row, row + dim, in.begin() + t * dim);
            }
            for (size_t s = 0; s < sub; s++) {
                Amplitude *row = &u.data[(base | offsets[s]) * dim];
                std::fill(row, row + dim, Amplitude(0));
                for (const auto &[t, v] : nz[s]) {
                    const Amplitude *src = &in[t * dim];
                    for (size_t col = 0; col < dim; col++) {
                        row[col] += v * src[col];
                    }
                }
            }
        }
    }
    return u;
}

}  // namespace pss
