/*
   Copyright 2026 The waringff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "waring/verify.hpp"

using nlohmann::json;
using namespace waring;

static const char* kVersion = "1.0.0";

namespace {

struct CommonOpts {
    int q = 3;
    std::string field_json;   // overrides --q when present
    std::string format = "text";
    std::uint64_t seed = 1;
    long long budget = 100000000LL;
    int threads = 1;
    std::string config_path;
};

Fq make_field(const CommonOpts& o) {
    if (!o.field_json.empty()) {
        json spec = json::parse(o.field_json);
        int p = spec.at("p").get<int>();
        int e = spec.value("e", 1);
        if (e == 1) return Fq(p);
        Fq base(p);
        Poly m = poly_parse(base, spec.at("modulus").get<std::string>());
        std::vector<int> coeffs(m.deg() + 1, 0);
        for (int i = 0; i <= m.deg(); ++i) coeffs[i] = m.coeff(i);
        return Fq(p, e, coeffs);
    }
    return Fq::make(o.q);
}

json field_json_of(const Fq& f) {
    json j;
    j["p"] = f.p;
    j["e"] = f.e;
    j["q"] = f.q;
    if (f.e > 1) {
        Fq base(f.p);
        j["modulus"] = poly_to_string(base, Poly(std::vector<felem>(f.modulus.begin(), f.modulus.end())));
    }
    return j;
}

json envelope(const CommonOpts& o, const Fq& f, const std::string& command, json data) {
    json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["field"] = field_json_of(f);
    j["budget"] = o.budget;
    j["seed"] = o.seed;
    j["threads"] = o.threads;
    j["data"] = std::move(data);
    return j;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json threshold_row_json(const ThresholdReport& r) {
    json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["case"] = case_tag_name(r.tag);
    j["b"] = r.b;
    j["m"] = r.m;
    j["j0"] = r.j0;
    j["R"] = r.R_set;
    j["Rprime"] = r.Rprime_set;
    j["r"] = r.r;
    j["kappa"] = r.kappa;
    j["h0"] = r.h0;
    j["delta0"] = rat_to_string(r.delta0);
    j["s1"] = r.s1;
    j["u2"] = r.u2;
    j["closed_s1"] = r.closed_s1;
    j["closed_u2"] = r.closed_u2;
    j["G_bound"] = r.G_bound;
    j["Gplus_bound"] = r.Gplus_bound;
    j["minimizer_j_s1"] = r.minimizer_j_s1;
    j["minimizer_j_u2"] = r.minimizer_j_u2;
    if (!r.candidates.empty()) {
        json rows = json::array();
        for (const CandidateRow& c : r.candidates)
            rows.push_back({{"j", c.j}, {"s_candidate", c.s_candidate}, {"u_candidate", c.u_candidate}});
        j["candidates"] = rows;
    }
    return j;
}

void emit_threshold_rows(const std::vector<ThresholdReport>& rows, const CommonOpts& o) {
    static const char* cols =
        "p,k,case,b,m,j0,r,kappa,h0,delta0,s1,u2,closed_s1,closed_u2,G_bound,Gplus_bound,"
        "minimizer_j_s1,minimizer_j_u2";
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(threshold_row_json(r));
        json j;
        j["version"] = kVersion;
        j["command"] = "thresholds";
        j["rows"] = arr;
        emit_json(j);
        return;
    }
    std::cout << cols << "\n";
    for (const auto& r : rows) {
        std::cout << r.p << "," << r.k << "," << case_tag_name(r.tag) << "," << r.b << "," << r.m
                  << "," << r.j0 << "," << r.r << "," << r.kappa << "," << r.h0 << ","
                  << rat_to_string(r.delta0) << "," << r.s1 << "," << r.u2 << "," << r.closed_s1
                  << "," << r.closed_u2 << "," << r.G_bound << "," << r.Gplus_bound << ","
                  << r.minimizer_j_s1 << "," << r.minimizer_j_u2 << "\n";
    }
}

json prediction_json(const Fq& f, const PredictionReport& r) {
    json j;
    j["n"] = poly_to_string(f, r.n);
    j["deg_n"] = r.n.deg();
    j["k"] = r.k;
    j["s"] = r.s;
    j["q"] = r.q;
    j["P"] = r.P;
    j["X"] = r.X;
    j["G"] = r.G;
    j["exceptional"] = r.exceptional;
    json partials = json::array();
    for (const cplx& c : r.singular_partial) partials.push_back({c.real(), c.imag()});
    j["singular_partial"] = partials;
    j["singular_value"] = r.singular_value;
    j["series_converged"] = r.series_converged;
    j["j_infty"] = r.j_inf;
    j["main_term"] = r.main;
    j["exact_count"] = r.exact_count;
    j["method"] = r.method;
    j["ratio"] = r.ratio;
    j["discrepancy_scaled"] = r.discrepancy_scaled;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Waring-type counting over F_q[t]"};
    app.require_subcommand(1);

    CommonOpts o;
    // a config file may supply defaults; flags given on the command line win
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") o.config_path = argv[i + 1];
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw std::invalid_argument("cannot open config file: " + o.config_path);
        json cfg = json::parse(in);
        o.q = cfg.value("q", o.q);
        o.field_json = cfg.value("field", o.field_json);
        o.format = cfg.value("format", o.format);
        o.seed = cfg.value("seed", o.seed);
        o.budget = cfg.value("budget", o.budget);
        o.threads = cfg.value("threads", o.threads);
    }
    if (const char* env = std::getenv("WARINGFF_THREADS")) o.threads = std::atoi(env);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--q", o.q, "field size (prime, or prime power with a shipped modulus)");
        cmd->add_option("--field", o.field_json, "field spec as JSON {\"p\",\"e\",\"modulus\"}");
        cmd->add_option("--format", o.format, "output format: json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--seed", o.seed, "seed for any sampling");
        cmd->add_option("--budget", o.budget, "enumeration budget (hard cap)");
        cmd->add_option("--threads", o.threads, "parallelism cap (1 = fully serial)");
        cmd->add_option("--config", o.config_path, "JSON config file with option defaults");
    };

    // thresholds
    int p = 3, kmin = 3, kmax = 10;
    bool include_p_divides_k = false;
    auto* cmd_thresholds = app.add_subcommand("thresholds", "threshold/bound table over a k range");
    cmd_thresholds->add_option("--p", p, "field characteristic")->required();
    cmd_thresholds->add_option("--kmin", kmin, "lowest k");
    cmd_thresholds->add_option("--kmax", kmax, "highest k");
    cmd_thresholds->add_flag("--all", include_p_divides_k, "include rows with p | k");
    add_common(cmd_thresholds);

    // count
    std::string n_str;
    int k = 2, s = 2, X_override = -1;
    std::string method = "auto";
    auto* cmd_count = app.add_subcommand("count", "exact strict representation count");
    cmd_count->add_option("--k", k, "power")->required();
    cmd_count->add_option("--s", s, "number of variables")->required();
    cmd_count->add_option("--n", n_str, "target polynomial")->required();
    cmd_count->add_option("--X", X_override, "override the box degree (default: strict X)");
    cmd_count->add_option("--method", method, "brute|mitm|both|auto")
        ->check(CLI::IsMember({"brute", "mitm", "both", "auto"}));
    add_common(cmd_count);

    // predict / compare
    int G = 2;
    auto* cmd_predict = app.add_subcommand("predict", "singular series and main term only");
    cmd_predict->add_option("--k", k, "power")->required();
    cmd_predict->add_option("--s", s, "number of variables")->required();
    cmd_predict->add_option("--n", n_str, "target polynomial")->required();
    cmd_predict->add_option("--G", G, "series truncation degree");
    add_common(cmd_predict);

    auto* cmd_compare = app.add_subcommand("compare", "main term next to the exact count");
    cmd_compare->add_option("--k", k, "power")->required();
    cmd_compare->add_option("--s", s, "number of variables")->required();
    cmd_compare->add_option("--n", n_str, "target polynomial")->required();
    cmd_compare->add_option("--G", G, "series truncation degree");
    add_common(cmd_compare);

    // verify
    std::string suite = "all";
    bool simulate_corruption = false;
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites");
    cmd_verify->add_option("--suite", suite, "algebra|sums|arcs|counts|thresholds|all");
    cmd_verify->add_flag("--simulate-corruption", simulate_corruption)->group("");  // test hook
    add_common(cmd_verify);

    // scan-exceptional
    int N = 3;
    std::string psi_str = "P+1";
    auto* cmd_scan = app.add_subcommand("scan-exceptional",
                                        "flag n where the count strays from the main term");
    cmd_scan->add_option("--N", N, "scan every nonzero n of degree < N")->required();
    cmd_scan->add_option("--k", k, "power")->required();
    cmd_scan->add_option("--s", s, "number of variables")->required();
    cmd_scan->add_option("--G", G, "series truncation degree");
    cmd_scan->add_option("--psi", psi_str, "threshold divisor: \"P+1\" or a numeric constant");
    add_common(cmd_scan);

    // arcs
    int arc_X = 1;
    long long scan_samples = 2000;
    auto* cmd_arcs = app.add_subcommand("arcs", "major-arc centers, measure and minor-arc scan");
    cmd_arcs->add_option("--k", k, "power")->required();
    cmd_arcs->add_option("--X", arc_X, "box degree")->required();
    cmd_arcs->add_option("--samples", scan_samples, "minor-arc sample budget");
    add_common(cmd_arcs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cmd_thresholds->parsed()) {
        std::vector<ThresholdReport> rows;
        for (const ThresholdReport& r : bounds_table(p, kmin, kmax))
            if (include_p_divides_k || r.tag != CaseTag::p_divides_k) rows.push_back(r);
        emit_threshold_rows(rows, o);
        return 0;
    }

    Fq f = make_field(o);

    if (cmd_count->parsed()) {
        Poly n = poly_parse(f, n_str);
        if (n.is_zero()) throw std::invalid_argument("count: n = 0 is not accepted");
        WaringInstance inst(f, k, s);
        StrictProblem prob = make_strict_problem(inst, n);
        int X = X_override > 0 ? X_override : prob.X;
        json data;
        data["n"] = poly_to_string(f, n);
        data["k"] = k;
        data["s"] = s;
        data["q"] = f.q;
        data["P"] = prob.P;
        data["X"] = X;
        data["exceptional"] = is_exceptional(f, n, k);
        std::string chosen = method;
        if (chosen == "auto")
            chosen = std::pow((double)f.q, (double)X * s) <= (double)o.budget ? "brute" : "mitm";
        if (chosen == "both") {
            long long a = count_reps_bruteforce(f, n, k, s, X, o.budget);
            long long b = count_reps_mitm(f, n, k, s, X, o.budget);
            if (a != b) throw std::logic_error("count: brute force and meet-in-the-middle disagree");
            data["count"] = a;
        } else if (chosen == "brute") {
            data["count"] = count_reps_bruteforce(f, n, k, s, X, o.budget);
        } else {
            data["count"] = count_reps_mitm(f, n, k, s, X, o.budget);
        }
        data["method"] = chosen;
        if (o.format == "json")
            emit_json(envelope(o, f, "count", data));
        else
            std::cout << "n=" << data["n"].get<std::string>() << " count=" << data["count"]
                      << " method=" << chosen << " P=" << prob.P << " X=" << X << "\n";
        return 0;
    }

    if (cmd_predict->parsed() || cmd_compare->parsed()) {
        Poly n = poly_parse(f, n_str);
        if (n.is_zero()) throw std::invalid_argument("n = 0 is not accepted for prediction");
        WaringInstance inst(f, k, s);
        if (cmd_predict->parsed()) {
            SingularSeries ss = singular_series_truncated(f, n, k, s, G, o.budget);
            json data;
            data["n"] = poly_to_string(f, n);
            data["G"] = G;
            json partials = json::array();
            for (const cplx& c : ss.partial) partials.push_back({c.real(), c.imag()});
            data["singular_partial"] = partials;
            data["singular_value"] = ss.total.real();
            data["j_infty"] = j_infty(f, b_of(f, n, k), k, s);
            data["main_term"] = main_term(inst, n, G, o.budget);
            if (o.format == "json")
                emit_json(envelope(o, f, "predict", data));
            else
                std::cout << "n=" << data["n"].get<std::string>()
                          << " singular=" << data["singular_value"]
                          << " j_infty=" << data["j_infty"] << " main=" << data["main_term"]
                          << "\n";
            return 0;
        }
        PredictionReport rep = compare_report(inst, n, G, o.budget);
        if (o.format == "json") {
            emit_json(envelope(o, f, "compare", prediction_json(f, rep)));
        } else if (o.format == "csv") {
            std::cout << "n,deg_n,P,count,main_term,ratio,discrepancy_scaled\n"
                      << poly_to_string(f, rep.n) << "," << rep.n.deg() << "," << rep.P << ","
                      << rep.exact_count << "," << rep.main << "," << rep.ratio << ","
                      << rep.discrepancy_scaled << "\n";
        } else {
            std::cout << "n=" << poly_to_string(f, rep.n) << " count=" << rep.exact_count
                      << " main=" << rep.main << " ratio=" << rep.ratio
                      << " discrepancy_scaled=" << rep.discrepancy_scaled << "\n";
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        corrupt_lucas = simulate_corruption;
        std::vector<CheckResult> results = run_suite(suite);
        long long failures = 0;
        json fails = json::array();
        for (const CheckResult& r : results) {
            if (!r.pass) {
                ++failures;
                fails.push_back({{"suite", r.suite}, {"name", r.name}, {"detail", r.detail}});
            }
        }
        if (o.format == "json") {
            json data;
            data["suite"] = suite;
            data["checks"] = results.size();
            data["failures"] = fails;
            emit_json(envelope(o, f, "verify", data));
        } else {
            for (const CheckResult& r : results)
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.suite << "/" << r.name
                          << (r.pass ? "" : (": " + r.detail)) << "\n";
            std::cout << results.size() << " checks, " << failures << " failures\n";
        }
        return failures == 0 ? 0 : 2;
    }

    if (cmd_scan->parsed()) {
        WaringInstance inst(f, k, s);
        std::function<double(int)> psi;
        try {
            double c = std::stod(psi_str);
            psi = [c](int) { return c; };
        } catch (const std::exception&) {
            if (psi_str != "P+1") throw std::invalid_argument("unknown psi choice: " + psi_str);
            psi = [](int P) { return (double)(P + 1); };
        }
        ExceptionalScanReport rep = exceptional_scan(inst, N, G, psi, o.budget);
        if (o.format == "json") {
            json data;
            data["N"] = rep.N;
            data["G"] = rep.G;
            data["skipped_no_witness"] = rep.skipped_no_witness;
            json entries = json::array();
            for (const ScanEntry& e : rep.entries)
                entries.push_back({{"n", poly_to_string(f, e.n)},
                                   {"P", e.P},
                                   {"count", e.count},
                                   {"main_term", e.main},
                                   {"threshold", e.threshold},
                                   {"violator", e.violator}});
            data["entries"] = entries;
            json viols = json::array();
            for (const Poly& v : rep.violators) viols.push_back(poly_to_string(f, v));
            data["violators"] = viols;
            emit_json(envelope(o, f, "scan-exceptional", data));
        } else {
            std::cout << "n,deg_n,P,count,main_term,threshold,violator_flag\n";
            for (const ScanEntry& e : rep.entries)
                std::cout << poly_to_string(f, e.n) << "," << e.n.deg() << "," << e.P << ","
                          << e.count << "," << e.main << "," << e.threshold << ","
                          << (e.violator ? 1 : 0) << "\n";
            std::cout << "# violators: " << rep.violators.size()
                      << ", skipped without witness: " << rep.skipped_no_witness << "\n";
        }
        return 0;
    }

    if (cmd_arcs->parsed()) {
        ArcParams params(k, arc_X);
        auto centers = enumerate_major_centers(f, params);
        Rat measure = major_measure(f, params);
        SupScanReport scan = sup_minor_scan(f, k, arc_X, scan_samples, o.seed);
        json data;
        data["R"] = params.R();
        json cj = json::array();
        for (const ArcCenter& c : centers)
            cj.push_back({{"center", {{"a", poly_to_string(f, c.a)}, {"g", poly_to_string(f, c.g)}}},
                          {"measure_num", rat_pow(f.q, -(params.R() + c.g.deg())).numerator()},
                          {"measure_den", rat_pow(f.q, -(params.R() + c.g.deg())).denominator()}});
        data["centers"] = cj;
        data["measure_num"] = measure.numerator();
        data["measure_den"] = measure.denominator();
        json sj;
        sj["windows_scanned"] = scan.windows_scanned;
        sj["minor_hits"] = scan.minor_hits;
        sj["exhaustive"] = scan.exhaustive;
        sj["max_abs"] = scan.max_abs;
        sj["has_bound"] = scan.has_bound;
        sj["bound"] = scan.bound;
        data["minor_scan"] = sj;
        if (o.format == "json") {
            emit_json(envelope(o, f, "arcs", data));
        } else {
            std::cout << centers.size() << " centers, total measure " << rat_to_string(measure)
                      << "\n";
            std::cout << "minor scan: " << scan.minor_hits << "/" << scan.windows_scanned
                      << " windows minor, max |g| = " << scan.max_abs;
            if (scan.has_bound) std::cout << ", reference bound " << scan.bound;
            std::cout << "\n";
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::logic_error& ex) {
        // reserved for cross-check failures inside the library
        std::cerr << "internal invariant violation: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
