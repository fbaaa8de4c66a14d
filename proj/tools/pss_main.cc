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

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pss/clifford.h"
#include "pss/error.h"
#include "pss/frontends.h"
#include "pss/rewrite.h"

using namespace pss;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

struct Flags {
    std::string out_path;
    uint64_t seed = 0;
    bool json = false;
    bool trace = false;
    unsigned max_oracle_qubits = 10;
    bool ignore_global_phase = false;
    bool strict_phase = false;
    bool relabel = false;
    size_t min_run = 4;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string &text) {
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            return ch == '{';
        }
    }
    return false;
}

Operator read_operator(const std::string &path) {
    std::string text = read_input(path);
    if (looks_like_json(text)) {
        return PathSum::from_json(text);
    }
    return Circuit::parse(text);
}

json stats_json(const CircuitStats &s) {
    json j;
    j["total"] = s.total;
    j["counts"] = s.counts;
    j["t_count"] = s.t_count;
    j["h_layers"] = s.h_layers;
    return j;
}

VerifyOptions verify_options(const Flags &f) {
    VerifyOptions v;
    v.strict_phase = f.strict_phase;
    v.max_oracle_qubits = f.max_oracle_qubits;
    return v;
}

SynthOptions synth_options(const Flags &f) {
    SynthOptions s;
    s.ignore_global_phase = f.ignore_global_phase;
    s.trace = f.trace ? &std::cerr : nullptr;
    return s;
}

// Clifford sums go through the normal form route; everything else through
// the general heuristic.
Circuit synth_any(const PathSum &p, const Flags &f) {
    PathSum q = p;
    normalize_in_place(q);
    if (is_clifford(q)) {
        CliffordSynthOptions co{f.ignore_global_phase};
        if (q.inputs == q.num_outputs()) {
            return synth_clifford(q, co);
        }
        return synth_isometry(q, co);
    }
    return synthesize(q, synth_options(f));
}

void check_verified(const Operator &target, const Circuit &c, const Flags &f) {
    VerifyOptions v = verify_options(f);
    v.strict_phase = v.strict_phase && !f.ignore_global_phase;
    if (std::holds_alternative<PathSum>(target) && std::get<PathSum>(target).inputs != std::get<PathSum>(target).num_outputs()) {
        return;  // isometries have no circuit operator to compare against
    }
    VerifyResult r = verify_equiv(target, c, v);
    if (r.verdict == Verdict::NotEqual) {
        throw Error(ErrorKind::SynthesisIncomplete, "output failed verification");
    }
}

RandomKind parse_kind(const std::string &s) {
    if (s == "clifford") {
        return RandomKind::Clifford;
    }
    if (s == "clifford+t" || s == "cliffordt" || s == "clifford-t") {
        return RandomKind::CliffordT;
    }
    throw UsageError("unknown circuit kind '" + s + "' (clifford or clifford+t)");
}

struct BenchRow {
    uint64_t seed = 0;
    bool success = false;
    size_t in_gates = 0;
    size_t out_gates = 0;
    double ms = 0;
};

BenchRow bench_one(RandomKind kind, uint32_t n, size_t gates, uint64_t seed, const Flags &f) {
    BenchRow row;
    row.seed = seed;
    Circuit c = random_circuit(kind, n, gates, seed);
    row.in_gates = c.gates.size();
    auto t0 = std::chrono::steady_clock::now();
    try {
        PathSum p = simulate_reduced(c);
        Circuit out = kind == RandomKind::Clifford ? synth_clifford(p, {f.ignore_global_phase})
                                                   : synthesize(p, {f.ignore_global_phase, nullptr});
        row.out_gates = out.gates.size();
        row.success = verify_equiv(c, out, verify_options(f)).verdict != Verdict::NotEqual;
    } catch (const Error &) {
        row.success = false;
    }
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

std::string bench_report(RandomKind kind, uint32_t n, size_t gates, size_t count, const Flags &f) {
    std::vector<BenchRow> rows(count);
    std::atomic<size_t> next{0};
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), count));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                rows[i] = bench_one(kind, n, gates, f.seed + i, f);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }

    size_t ok = 0;
    double change = 0;
    double ms = 0;
    for (const auto &r : rows) {
        ms += r.ms;
        if (r.success) {
            ok++;
            change += 100.0 * (static_cast<double>(r.out_gates) - r.in_gates) / r.in_gates;
        }
    }
    double rate = count ? 100.0 * ok / count : 0;
    double avg_change = ok ? change / ok : 0;
    double avg_ms = count ? ms / count : 0;

    if (f.json) {
        json j;
        j["rows"] = json::array();
        for (const auto &r : rows) {
            j["rows"].push_back(
                {{"seed", r.seed}, {"success", r.success}, {"in_gates", r.in_gates}, {"out_gates", r.out_gates},
                 {"ms", r.ms}});
        }
        j["aggregate"] = {
            {"kind", kind == RandomKind::Clifford ? "clifford" : "clifford+t"},
            {"qubits", n},
            {"gates", gates},
            {"count", count},
            {"success_rate", rate},
            {"avg_change_percent", avg_change},
            {"avg_ms", avg_ms}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    char buf[160];
    out << "seed\tsuccess\tin_gates\tout_gates\tchange%\tms\n";
    for (const auto &r : rows) {
        double pc = r.success ? 100.0 * (static_cast<double>(r.out_gates) - r.in_gates) / r.in_gates : 0;
        std::snprintf(
            buf, sizeof(buf), "%llu\t%s\t%zu\t%zu\t%+.1f\t%.1f\n", static_cast<unsigned long long>(r.seed),
            r.success ? "yes" : "no", r.in_gates, r.out_gates, pc, r.ms);
        out << buf;
    }
    out << "\n# qubits  gates  avg. time (s)  avg. change (+/-)  success\n";
    std::string success = kind == RandomKind::Clifford && ok == count ? "--" : std::to_string(rate).substr(0, 5) + "%";
    std::snprintf(
        buf, sizeof(buf), "  %-7u  %-5zu  %-13.3f  %+-17.1f  %s\n", n, gates, avg_ms / 1000.0, avg_change,
        success.c_str());
    out << buf;
    return out.str();
}

void emit(const std::string &text, const Flags &f) {
    if (f.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(f.out_path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write " + f.out_path);
    }
    out << text;
}

std::string circuit_output(const Circuit &c, const Flags &f) {
    if (!f.json) {
        return c.str();
    }
    json j;
    j["circuit"] = c.str();
    j["stats"] = stats_json(stats(c));
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"pss: path-sum simulation, synthesis and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("-o,--output", f.out_path, "Write the primary output to FILE");
    app.add_option("--seed", f.seed, "Random seed");
    app.add_flag("--json", f.json, "Machine-readable output");
    app.add_flag("--trace", f.trace, "Stream synthesis iterations to stderr");
    app.add_option("--max-oracle-qubits", f.max_oracle_qubits, "Matrix oracle cap for verification");
    app.add_flag("--ignore-global-phase", f.ignore_global_phase, "Drop the global phase gate");
    app.add_flag("--strict-phase", f.strict_phase, "Treat a global phase difference as NotEqual");
    app.add_flag("--relabel", f.relabel, "Allow output qubit relabeling in Clifford synthesis");
    app.add_option("--min-run", f.min_run, "Shortest Clifford run resynthesized by opt-clifford");

    std::string file_a;
    std::string file_b;
    std::string text;
    std::string kind_text;
    uint32_t n = 0;
    size_t gates = 0;
    size_t count = 0;
    bool as_circuit = false;

    auto *simulate_cmd = app.add_subcommand("simulate", "Circuit to path-sum JSON");
    simulate_cmd->add_option("file", file_a)->required();
    auto *synth_cmd = app.add_subcommand("synth", "Path-sum JSON to circuit");
    synth_cmd->add_option("file", file_a)->required();
    auto *resynth_cmd = app.add_subcommand("resynth", "Circuit to path sum to circuit");
    resynth_cmd->add_option("file", file_a)->required();
    auto *decompile_cmd = app.add_subcommand("decompile", "Rewrite a circuit over the high-level gate set");
    decompile_cmd->add_option("file", file_a)->required();
    auto *verify_cmd = app.add_subcommand("verify", "Check two circuits or path sums for equality");
    verify_cmd->add_option("a", file_a)->required();
    verify_cmd->add_option("b", file_b)->required();
    auto *qft_cmd = app.add_subcommand("qft", "The QFT path sum or circuit");
    qft_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    qft_cmd->add_flag("--circuit", as_circuit, "Synthesize a circuit");
    auto *taut_cmd = app.add_subcommand("taut", "Decide a formula via its unitarity encoding");
    taut_cmd->add_option("formula", text)->required();
    auto *random_cmd = app.add_subcommand("random", "Seeded random circuit");
    random_cmd->add_option("kind", kind_text)->required();
    random_cmd->add_option("n", n)->required();
    random_cmd->add_option("gates", gates)->required();
    auto *bench_cmd = app.add_subcommand("bench", "Resynthesis benchmark over seeded random circuits");
    bench_cmd->add_option("kind", kind_text)->required();
    bench_cmd->add_option("n", n)->required();
    bench_cmd->add_option("gates", gates)->required();
    bench_cmd->add_option("count", count)->required();
    auto *opt_cmd = app.add_subcommand("opt-clifford", "Resynthesize runs of Clifford gates");
    opt_cmd->add_option("file", file_a)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*simulate_cmd) {
            Circuit c = Circuit::parse(read_input(file_a));
            PathSum p = simulate_reduced(c);
            emit(p.to_json() + "\n", f);
        } else if (*synth_cmd) {
            PathSum p = PathSum::from_json(read_input(file_a));
            Circuit c = synth_any(p, f);
            check_verified(p, c, f);
            emit(circuit_output(c, f), f);
        } else if (*resynth_cmd) {
            Circuit in = Circuit::parse(read_input(file_a));
            Circuit c = synth_any(simulate_reduced(in), f);
            check_verified(in, c, f);
            emit(circuit_output(c, f), f);
        } else if (*decompile_cmd) {
            Circuit in = Circuit::parse(read_input(file_a));
            Circuit c = decompile(in, synth_options(f), verify_options(f));
            emit(circuit_output(c, f), f);
        } else if (*verify_cmd) {
            Operator a = read_operator(file_a);
            Operator b = read_operator(file_b);
            VerifyResult r = verify_equiv(a, b, verify_options(f));
            if (f.json) {
                json j;
                j["verdict"] = std::string(verdict_name(r.verdict));
                if (r.verdict == Verdict::EqualUpToGlobalPhase) {
                    if (r.via_oracle) {
                        j["phase"] = r.oracle_phase;
                    } else {
                        j["phase"] = r.phase.str();
                    }
                }
                j["via_oracle"] = r.via_oracle;
                emit(j.dump() + "\n", f);
            } else {
                emit(r.str() + "\n", f);
            }
            switch (r.verdict) {
                case Verdict::Equal:
                case Verdict::EqualUpToGlobalPhase:
                    return 0;
                case Verdict::NotEqual:
                    return 1;
                case Verdict::Inconclusive:
                    return 2;
            }
        } else if (*qft_cmd) {
            PathSum p = qft_sum(n);
            if (!as_circuit) {
                emit(p.to_json() + "\n", f);
            } else {
                Circuit c = synthesize(p, synth_options(f));
                check_verified(p, c, f);
                emit(circuit_output(c, f), f);
            }
        } else if (*taut_cmd) {
            ParsedFormula pf = parse_formula(text);
            TautResult r = taut_check(pf.root, static_cast<uint32_t>(pf.vars.size()));
            if (!r.encoding_agrees) {
                throw Error(ErrorKind::NonUnitary, "encoded sum disagrees with the truth table");
            }
            bool taut = r.verdict == TautVerdict::Tautology;
            if (f.json) {
                json j;
                j["verdict"] = taut ? "Tautology" : "NotTautology";
                j["variables"] = pf.vars;
                j["connectives"] = pf.root.connectives();
                emit(j.dump() + "\n", f);
            } else {
                emit(std::string(taut ? "Tautology" : "NotTautology") + "\n", f);
            }
        } else if (*random_cmd) {
            if (n < 2) {
                throw UsageError("random circuits need at least 2 qubits");
            }
            emit(random_circuit(parse_kind(kind_text), n, gates, f.seed).str(), f);
        } else if (*bench_cmd) {
            if (n < 2 || gates == 0) {
                throw UsageError("bench needs n >= 2 and at least one gate");
            }
            emit(bench_report(parse_kind(kind_text), n, gates, count, f), f);
        } else if (*opt_cmd) {
            Circuit in = Circuit::parse(read_input(file_a));
            CliffordPassReport rep = clifford_pass(in, {f.min_run, f.ignore_global_phase});
            if (f.json) {
                json j;
                j["circuit"] = rep.circuit.str();
                j["runs_replaced"] = rep.runs_replaced;
                j["before"] = stats_json(rep.before);
                j["after"] = stats_json(rep.after);
                j["verdict"] = std::string(verdict_name(rep.verdict));
                emit(j.dump(2) + "\n", f);
            } else {
                emit(rep.circuit.str(), f);
                std::cerr << "runs replaced: " << rep.runs_replaced << "\nbefore: " << rep.before.str()
                          << "\nafter:  " << rep.after.str() << "\n";
            }
        }
    } catch (const UsageError &e) {
        std::cerr << "pss: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "pss: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::SyntaxError:
            case ErrorKind::WidthError:
            case ErrorKind::ParseError:
                return kExitParse;
            default:
                break;
        }
        if (!e.detail().empty()) {
            std::cerr << "residual: " << e.detail() << "\n";
        }
        return kExitInternal;
    } catch (const std::exception &e) {
        std::cerr << "pss: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
