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

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "magiclab/agsp.h"
#include "magiclab/glue.h"
#include "magiclab/modular.h"
#include "magiclab/prep.h"
#include "magiclab/random.h"
#include "magiclab/suites.h"
#include "magiclab/zxcat.h"

using namespace magiclab;

namespace {

struct Globals {
    bool jsonl = false;
    std::optional<size_t> n;
    uint64_t seed = 7;
    std::optional<double> tol;
    std::optional<size_t> trials;
    std::string out;
    std::optional<size_t> max_n;
    std::string dump_state;

    SuiteParams suite_params() const { return SuiteParams{seed, n, trials, tol}; }
    size_t n_or(size_t d) const { return n.value_or(d); }
    size_t trials_or(size_t d) const { return trials.value_or(d); }
};

CheckReport from_witness(const WitnessReport &w, Json params) {
    CheckReport r;
    r.check = w.name;
    for (const auto &[k, v] : w.values) {
        if (!params.contains(k)) {
            params[k] = v;
        }
    }
    if (!w.note.empty()) {
        params["note"] = w.note;
    }
    r.params = std::move(params);
    r.observed = w.observed;
    r.bound = w.bound;
    r.pass = w.pass;
    return r;
}

void dump_state(const Globals &g, const StateVector &v) {
    if (!g.dump_state.empty()) {
        write_output(g.dump_state, state_to_json(v) + "\n");
    }
}

int emit(const Globals &g, const std::vector<CheckReport> &reports) {
    write_output(g.out, reports_to_string(reports, g.jsonl, false));
    return exit_code(reports);
}

std::vector<size_t> parse_list(const std::string &text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) {
            throw std::invalid_argument("bad list element: " + item);
        }
        out.push_back(static_cast<size_t>(v));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list");
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json perm_json(const std::vector<size_t> &p) {
    Json j = Json::array();
    for (size_t v : p) {
        j.push_back(v + 1);
    }
    return j;
}

// ---------------------------------------------------------------- zxcat

int zxcat_mi(const Globals &g) {
    size_t n = g.n_or(12);
    double mi = mi_numeric(n);
    double limit = mi_asymptote();
    CheckReport r;
    r.check = "zxcat.mi";
    r.params = {{"n", n}, {"asymptote", limit}, {"distance", std::abs(mi - limit)}, {"relation", ">"}};
    r.observed = mi;
    r.bound = 0.0;
    r.pass = mi > 0;
    return emit(g, {r});
}

int zxcat_witness_cu(const Globals &g, std::optional<size_t> i, std::optional<size_t> j, bool random_c) {
    size_t n = g.n_or(12);
    std::vector<CheckReport> reports;
    if (!random_c) {
        LayeredCircuit u(n);
        size_t a = i.value_or(0);
        size_t b = j.value_or(n / 2);
        if (a >= n || b >= n || a == b) {
            throw std::invalid_argument("--i and --j must be distinct qubits below n");
        }
        reports.push_back(
            from_witness(cu_correlation_witness(CliffordMap::identity(n), u, a, b), {{"n", n}, {"c", "identity"}}));
        return emit(g, reports);
    }
    size_t trials = g.trials_or(1);
    for (size_t t = 0; t < trials; t++) {
        uint64_t s = derive_seed(g.seed, t);
        auto c = random_clifford(n, s);
        auto plan = adapted_fanout_circuit(c);
        Json params = {{"n", n}, {"c", "random"}, {"trial", t}};
        if (!plan) {
            CheckReport r;
            r.check = "cu_correlation_witness";
            params["error"] = "no pair of disjoint stabilizer supports";
            r.params = params;
            r.observed = nullptr;
            r.pass = false;
            reports.push_back(r);
            continue;
        }
        reports.push_back(from_witness(cu_correlation_witness(c, plan->circuit, plan->seed_i, plan->seed_j), params));
    }
    return emit(g, reports);
}

int zxcat_witness_uc(const Globals &g, size_t depth) {
    size_t n = g.n_or(10);
    size_t trials = g.trials_or(1);
    Rng rng(g.seed);
    std::vector<CheckReport> reports;
    for (size_t t = 0; t < trials; t++) {
        LayeredCircuit u = depth == 0 ? LayeredCircuit(n) : random_layered_circuit(n, depth, rng);
        reports.push_back(from_witness(uc_sign_witness(u), {{"n", n}, {"depth", depth}, {"trial", t}}));
    }
    return emit(g, reports);
}

// ---------------------------------------------------------------- agsp

int agsp_sweep(const Globals &g, const std::string &n_list, const std::string &m_list, const std::string &csv) {
    auto ns = parse_list(n_list);
    auto ms = parse_list(m_list);
    std::vector<CheckReport> reports;
    std::ostringstream table;
    table << "n,m,sup_error,bound,coeff_sum,p_minus_n\n";
    table.precision(17);
    for (size_t n : ns) {
        for (size_t m : ms) {
            if (n < 2 || m < 1) {
                throw std::invalid_argument("sweep needs n >= 2 and m >= 1");
            }
            auto poly = build_polynomial(n, m);
            auto e = step_error_sup(poly);
            auto id = coeff_sum_identity(poly);
            double pmn = to_double(id.p_minus_n);
            table << n << ',' << m << ',' << e.sup << ',' << e.bound << ',' << id.sum_value << ',' << pmn << '\n';
            CheckReport r;
            r.check = "agsp.step_error";
            r.params = {{"n", n},
                        {"m", m},
                        {"coeff_sum", id.sum_value},
                        {"p_minus_n", pmn},
                        {"identity_exact", id.exact_equal},
                        {"relation", "<="}};
            r.observed = e.sup;
            r.bound = e.bound;
            r.pass = e.within_bound && id.exact_equal;
            reports.push_back(r);
        }
    }
    if (!csv.empty()) {
        write_output(csv, table.str());
    }
    return emit(g, reports);
}

// ---------------------------------------------------------------- prep

int prep_sandwich(const Globals &g) {
    size_t n = g.n_or(8);
    auto state = prepare_sandwich(n);
    double f = state_fidelity(state, build_zxcat(n, ZxVariant::IPhase));
    dump_state(g, state);
    CheckReport r;
    r.check = "prep.sandwich";
    r.params = {{"n", n}, {"global_clifford", verify_global_clifford(n)}, {"relation", ">="}};
    r.observed = f;
    r.bound = 1 - 1e-12;
    r.pass = f >= 1 - 1e-12 && r.params["global_clifford"].get<bool>();
    return emit(g, {r});
}

int prep_adaptive(const Globals &g) {
    size_t n = g.n_or(4);
    size_t trials = g.trials_or(10);
    auto plus = build_zxcat(n, ZxVariant::Plus);
    std::vector<CheckReport> reports;
    for (size_t t = 0; t < trials; t++) {
        auto rec = adaptive_run(n, derive_seed(g.seed, t));
        Json outcomes = Json::array();
        for (auto o : rec.outcomes) {
            outcomes.push_back(o);
        }
        CheckReport r;
        r.check = "prep.adaptive_run";
        r.params = {{"n", n}, {"trial", t}, {"outcomes", outcomes}, {"parity", rec.parity}, {"accepted", rec.accepted}};
        double f = state_fidelity(rec.post_state, plus);
        r.observed = f;
        if (rec.accepted) {
            r.params["relation"] = ">=";
            r.bound = 1 - 1e-10;
            r.pass = f >= 1 - 1e-10;
        } else {
            r.pass = true;
        }
        if (t + 1 == trials) {
            dump_state(g, rec.post_state);
        }
        reports.push_back(r);
    }
    return emit(g, reports);
}

int prep_mps(const Globals &g, const std::string &boundary) {
    size_t n = g.n_or(8);
    Boundary b;
    if (boundary == "open") {
        b = Boundary::Open;
    } else if (boundary == "periodic") {
        b = Boundary::Periodic;
    } else {
        throw std::invalid_argument("--boundary must be open or periodic");
    }
    auto state = mps_contract(n, b);
    dump_state(g, state);
    double f = state_fidelity(state, build_zxcat(n, ZxVariant::Plus));
    CheckReport r;
    r.check = "prep.mps";
    r.params = {{"n", n}, {"boundary", boundary}, {"push_residual", push_relation_residual()}, {"relation", ">="}};
    r.observed = f;
    r.bound = 1 - 1e-12;
    r.pass = f >= 1 - 1e-12 && push_relation_check();
    return emit(g, {r});
}

int prep_bell(const Globals &g) {
    size_t n = g.n_or(3);
    size_t trials = g.trials_or(10);
    auto plus = build_zxcat(n, ZxVariant::Plus);
    std::vector<CheckReport> reports;
    for (size_t t = 0; t < trials; t++) {
        auto rec = bell_protocol_run(n, derive_seed(g.seed, t));
        Json outcomes = Json::array();
        for (auto [z, x] : rec.outcomes) {
            outcomes.push_back(Json::array({z, x}));
        }
        Json flags = Json::array();
        for (auto f : rec.h_flags) {
            flags.push_back(f);
        }
        CheckReport r;
        r.check = "prep.bell_run";
        r.params = {{"n", n},
                    {"trial", t},
                    {"outcomes", outcomes},
                    {"h_flags", flags},
                    {"residual_x", rec.residual_x},
                    {"residual_z", rec.residual_z},
                    {"accepted", rec.accepted}};
        double f = state_fidelity(rec.state, plus);
        r.observed = f;
        if (rec.accepted) {
            r.params["relation"] = ">=";
            r.bound = 1 - 1e-10;
            r.pass = f >= 1 - 1e-10;
        } else {
            r.pass = true;
        }
        if (t + 1 == trials) {
            dump_state(g, rec.state);
        }
        reports.push_back(r);
    }
    return emit(g, reports);
}

// ---------------------------------------------------------------- modular

int modular_lpu(const Globals &g, const std::string &path) {
    ModularData data = path.empty() ? double_fibonacci() : modular_from_json(read_file(path));
    auto result = lpu_search(data, g.tol.value_or(1e-9));
    std::vector<CheckReport> reports;
    for (const auto &cs : result.cases) {
        if (cs.status == SolveStatus::Inconsistent) {
            continue;
        }
        CheckReport r;
        r.check = "modular.lpu_case";
        Json z = Json::array();
        for (const auto &v : cs.z) {
            z.push_back(v.str());
        }
        r.params = {{"data", data.name},
                    {"perm", perm_json(cs.perm)},
                    {"pattern", perm_json(cs.pattern)},
                    {"z", z},
                    {"unimodular", cs.unimodular},
                    {"survives", cs.survives}};
        r.observed = cs.st_distance ? Json(*cs.st_distance) : Json(nullptr);
        r.pass = true;
        reports.push_back(r);
    }
    CheckReport summary;
    summary.check = "modular.lpu_search";
    Json survivors = Json::array();
    for (const auto &s : result.survivors) {
        survivors.push_back(perm_json(s.perm));
    }
    summary.params = {{"data", data.name}, {"cases", result.cases.size()}, {"survivors", survivors}};
    summary.observed = result.survivors.size();
    summary.pass = true;
    reports.push_back(summary);
    return emit(g, reports);
}

int modular_verlinde(const Globals &g, int genus, const std::string &path) {
    if (genus < 0) {
        throw std::invalid_argument("--genus must be non-negative");
    }
    ModularData data = path.empty() ? double_fibonacci() : modular_from_json(read_file(path));
    GoldenNumber v = verlinde_dim(data.dims, genus);
    CheckReport r;
    r.check = "modular.verlinde";
    r.params = {{"data", data.name}, {"genus", genus}, {"exact", v.str()}};
    r.observed = v.to_double();
    r.pass = true;
    return emit(g, {r});
}

// ---------------------------------------------------------------- glue

int glue_run(const Globals &g, const std::string &dims_text) {
    auto dims = parse_list(dims_text);
    if (dims.size() != 6) {
        throw std::invalid_argument("--dims needs six block sizes a,b1,b2,c1,c2,d");
    }
    auto p = Partition::from_sizes(dims[0], dims[1], dims[2], dims[3], dims[4], dims[5]);
    double tol = g.tol.value_or(1e-8);
    size_t trials = g.trials_or(1);
    std::vector<CheckReport> reports;
    for (size_t t = 0; t < trials; t++) {
        auto inst = generate_gluable_instance(p, derive_seed(g.seed, t));
        auto premises = check_premises(inst, tol);
        auto glued = glue_states(inst, tol);
        CheckReport r;
        r.check = "glue.instance";
        r.params = {{"dims", dims},
                    {"trial", t},
                    {"bc_residual", premises.bc_residual},
                    {"premise_mi_a_cd", premises.mi_a_cd},
                    {"premise_mi_ab_d", premises.mi_ab_d},
                    {"d_entropy_gap", premises.d_entropy_gap},
                    {"abc_residual", glued.abc_residual},
                    {"bcd_residual", glued.bcd_residual},
                    {"mi_a_cd", glued.mi_a_cd},
                    {"mi_ab_d", glued.mi_ab_d},
                    {"relation", "<="}};
        r.observed = std::max({glued.abc_residual, glued.bcd_residual, glued.mi_a_cd, glued.mi_ab_d});
        r.bound = tol;
        r.pass = premises.ok() && glued.conclusions_hold;
        if (t + 1 == trials) {
            dump_state(g, glued.state);
        }
        reports.push_back(r);
    }
    return emit(g, reports);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"magiclab: checks for long-range magic constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--jsonl", g.jsonl, "Write one JSON object per line");
    app.add_option("--n", g.n, "Number of qubits");
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--tol", g.tol, "Numerical tolerance");
    app.add_option("--trials", g.trials, "Number of randomized trials");
    app.add_option("--out", g.out, "Output file (default stdout)");
    app.add_option("--max-n", g.max_n, "Largest statevector size in qubits");
    app.add_option("--dump-state", g.dump_state, "Write the final state as JSON");

    std::function<int()> action;
    auto suite_cmd = [&](const std::string &name, const std::string &help) {
        auto *sc = app.add_subcommand(name, help);
        sc->callback([&, sc, name] {
            if (sc->get_subcommands().empty()) {
                action = [&, name] { return run_suite(name, g.suite_params(), g.out, g.jsonl); };
            }
        });
        return sc;
    };

    suite_cmd("symplectic", "Stabilizer overlap checks");
    suite_cmd("all", "Every suite");

    auto *zx = suite_cmd("zxcat", "ZX-cat state checks");
    zx->add_subcommand("mi", "Two-qubit mutual information")->callback([&] { action = [&] { return zxcat_mi(g); }; });
    std::optional<size_t> wi, wj;
    bool random_c = false;
    auto *cu = zx->add_subcommand("witness-cu", "Correlation witness against Clifford after shallow circuit");
    cu->add_option("--i", wi, "First seed qubit");
    cu->add_option("--j", wj, "Second seed qubit");
    cu->add_flag("--random-c", random_c, "Use random Cliffords with an adapted fan-out circuit");
    cu->callback([&] { action = [&] { return zxcat_witness_cu(g, wi, wj, random_c); }; });
    size_t depth = 1;
    auto *uc = zx->add_subcommand("witness-uc", "Fidelity bound against shallow circuit after Clifford");
    uc->add_option("--depth", depth, "Circuit depth, 0 for the identity")->capture_default_str();
    uc->callback([&] { action = [&] { return zxcat_witness_uc(g, depth); }; });

    auto *ag = suite_cmd("agsp", "Chebyshev AGSP checks");
    std::string n_list = "16,64,256", m_list = "1,2,4,8", csv;
    auto *sweep = ag->add_subcommand("sweep", "Step error over an (n, m) grid");
    sweep->add_option("--n-list", n_list)->capture_default_str();
    sweep->add_option("--m-list", m_list)->capture_default_str();
    sweep->add_option("--csv", csv, "Also write a CSV table");
    sweep->callback([&] { action = [&] { return agsp_sweep(g, n_list, m_list, csv); }; });

    auto *pr = suite_cmd("prep", "Preparation protocols");
    pr->add_subcommand("sandwich", "Clifford sandwich preparation")->callback([&] {
        action = [&] { return prep_sandwich(g); };
    });
    pr->add_subcommand("adaptive", "Adaptive measurement protocol")->callback([&] {
        action = [&] { return prep_adaptive(g); };
    });
    std::string boundary = "periodic";
    auto *mps = pr->add_subcommand("mps", "Bond dimension 2 MPS contraction");
    mps->add_option("--boundary", boundary, "open or periodic")->capture_default_str();
    mps->callback([&] { action = [&] { return prep_mps(g, boundary); }; });
    pr->add_subcommand("bell", "Bell measurement protocol")->callback([&] { action = [&] { return prep_bell(g); }; });

    auto *mo = suite_cmd("modular", "Modular data checks");
    std::string data_path;
    auto *lpu = mo->add_subcommand("lpu-search", "Locality-preserving gate search");
    lpu->add_option("--data", data_path, "Modular data JSON (default double Fibonacci)");
    lpu->callback([&] { action = [&] { return modular_lpu(g, data_path); }; });
    int genus = 2;
    auto *ver = mo->add_subcommand("verlinde", "Ground-space dimension on a genus g surface");
    ver->add_option("--genus", genus)->capture_default_str();
    ver->add_option("--data", data_path, "Modular data JSON (default double Fibonacci)");
    ver->callback([&] { action = [&] { return modular_verlinde(g, genus, data_path); }; });

    auto *gl = suite_cmd("glue", "State gluing checks");
    std::string dims = "1,1,1,1,1,1";
    auto *run = gl->add_subcommand("run", "Glue generated instances");
    run->add_option("--dims", dims, "Block sizes a,b1,b2,c1,c2,d")->capture_default_str();
    run->callback([&] { action = [&] { return glue_run(g, dims); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        size_t guard = g.max_n.value_or(max_qubits());
        if (g.max_n) {
            if (guard < 1 || guard > 30) {
                throw std::invalid_argument("--max-n must be in [1, 30]");
            }
            set_max_qubits(guard);
        }
        return action();
    } catch (const std::invalid_argument &e) {
        std::cerr << "magiclab: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error &e) {
        std::cerr << "magiclab: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range &e) {
        std::cerr << "magiclab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "magiclab: " << e.what() << "\n";
        return 1;
    }
}
