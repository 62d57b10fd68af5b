#include "confrep/irreducibility.hpp"
#include "confrep/irrep.hpp"
#include "confrep/mixed.hpp"
#include "confrep/ortho.hpp"
#include "confrep/spectral.hpp"
#include "confrep/suite.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

using namespace confrep;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string series = "D";
    int n = 0;
    std::string mu;
    std::string b;
    int max_degree = 4;
    int k = 4;
    std::string format = "text";
    std::string output;
    bool inject_fault = false;
    bool submodule = false;
    std::vector<int> only;
};

struct Outcome {
    bool ok = true;
    std::string text;
    json doc;
};

Series series_of(const Options& o) {
    try {
        return parse_series(o.series);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

int rank_of(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be a positive integer");
    return o.n;
}

WeightVec weight_of(const Options& o) {
    if (o.mu.empty()) throw UsageError("--mu is required");
    WeightVec mu = [&] {
        try {
            return WeightVec::parse(series_of(o), o.mu);
        } catch (const std::exception& e) {
            throw UsageError(std::string("cannot parse --mu: ") + e.what());
        }
    }();
    if (o.n != 0 && mu.rank() != o.n)
        throw UsageError("--mu has " + std::to_string(mu.rank()) + " entries but --n is " + std::to_string(o.n));
    if (!is_dominant(mu)) throw UsageError("--mu (" + mu.str() + ") is not a dominant weight");
    return mu;
}

Rat charge_of(const Options& o) {
    if (o.b.empty()) throw UsageError("--b is required");
    try {
        return Rat::parse(o.b);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot parse --b: ") + e.what());
    }
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << r.name << ": " << (r.entries.size() - r.failures()) << "/" << r.entries.size() << " checks pass\n";
    for (const auto& e : r.entries) {
        if (e.pass) continue;
        os << "  FAIL " << e.identity << "\n";
        if (!e.lhs.empty() || !e.rhs.empty()) os << "    got:      " << e.lhs << "\n    expected: " << e.rhs << "\n";
    }
    return os.str();
}

Outcome from_report(const Report& r) { return {r.all_pass(), report_text(r), to_json(r)}; }

Outcome run_brackets(const Options& o) { return from_report(verify_bracket_tables(rank_of(o), series_of(o))); }

Outcome run_theta(const Options& o) { return from_report(verify_theta_homomorphism(rank_of(o), series_of(o))); }

Outcome run_shen(const Options& o) {
    return from_report(verify_shen_monomorphism(rank_of(o), series_of(o), o.inject_fault));
}

Outcome run_build_irrep(const Options& o) {
    const IrrepData v = build_irrep(weight_of(o));
    Report r = validate_irrep(v);
    r.name = "V(" + v.mu.str() + ")";
    std::ostringstream os;
    os << to_string(v.mu.series()) << " n=" << v.mu.rank() << " mu=(" << v.mu.str() << ")\n"
       << "  dimension " << v.dim() << " (Weyl formula " << weyl_dim(v.mu) << ")\n"
       << "  Casimir " << casimir_eigenvalue(v.mu) << "\n"
       << report_text(r);
    json doc = irrep_to_json(v);
    doc["validation"] = to_json(r);
    return {r.all_pass(), os.str(), doc};
}

Outcome run_pieri(const Options& o) {
    const WeightVec mu = weight_of(o);
    const Report r = verify_pieri_eigenspaces(mu);
    std::ostringstream os;
    json summands = json::array();
    os << "V(eps_1) (x) V(" << mu.str() << "):\n";
    for (const auto& s : pieri_decompose(mu)) {
        const Rat lambda = split_casimir_eigenvalue(mu, s);
        os << "  V(" << s.weight.str() << ")  dim " << weyl_dim(s.weight) << "  eigenvalue " << lambda << "\n";
        summands.push_back({{"weight", s.weight.str()}, {"dim", weyl_dim(s.weight)}, {"eigenvalue", lambda.str()}});
    }
    os << "  spectrum " << omega_tilde_spectrum(mu).str() << "\n" << report_text(r);
    json doc{{"mu", mu.str()}, {"series", to_string(mu.series())}, {"summands", summands}, {"report", to_json(r)}};
    return {r.all_pass(), os.str(), doc};
}

Outcome run_charpoly(const Options& o) {
    const CharpolyResult c = verify_charpoly_lemma(weight_of(o));
    std::ostringstream os;
    os << "charpoly of omega~ for mu=(" << c.mu.str() << "): " << c.computed.factored_str() << "\n"
       << "closed form: " << c.closed_form.factored_str() << "\n"
       << "match: " << (c.match ? "yes" : "no") << "\n"
       << report_text(c.report);
    return {c.match && c.report.all_pass(), os.str(), to_json(c)};
}

Outcome run_t_operator(const Options& o) {
    const WeightVec mu = weight_of(o);
    const Rat b = charge_of(o);
    const ConformalModule mod(build_irrep(mu), b);
    Report all;
    all.name = "T on degrees 0.." + std::to_string(o.k);
    std::ostringstream os;
    json levels = json::array();
    for (int k = 0; k <= o.k; ++k) {
        const Report r = verify_T_operator(mod, k);
        const Rat c = T_scalar(mu.series(), mu.rank(), b, k);
        os << "  degree " << k << ": T = " << c << " eta  " << (r.all_pass() ? "ok" : "FAILED") << "\n";
        levels.push_back({{"k", k}, {"scalar", c.str()}, {"pass", r.all_pass()}});
        all.merge(r);
    }
    os << report_text(all);
    json doc{{"mu", mu.str()}, {"series", to_string(mu.series())}, {"b", b.str()}, {"levels", levels},
             {"report", to_json(all)}};
    return {all.all_pass(), os.str(), doc};
}

Outcome run_scan(const Options& o) {
    if (o.max_degree < 1) throw UsageError("--max-degree must be at least 1");
    const WeightVec mu = weight_of(o);
    const Rat b = charge_of(o);
    const ConformalModule mod(build_irrep(mu), b);
    const ScanResult s = surjectivity_scan(mod, o.max_degree);
    bool reducible = s.verdict == Verdict::ProperSubmoduleFound;
    std::ostringstream os;
    os << s.str() << "\n";
    json doc = to_json(s);
    if (o.submodule) {
        const auto sub = detect_submodule(mod, o.max_degree);
        if (sub) {
            reducible = true;
            os << "  proper submodule, dimensions by degree:";
            for (auto d : sub->dims()) os << " " << d;
            os << "\n" << report_text(sub->report);
            doc["submodule"] = {{"dims", sub->dims()}, {"report", to_json(sub->report)}};
        } else {
            os << "  no proper submodule generated by 1 (x) V up to degree " << o.max_degree << "\n";
            doc["submodule"] = nullptr;
        }
    }
    return {!reducible, os.str(), doc};
}

Outcome run_classify(const Options& o) {
    const WeightVec mu = weight_of(o);
    const Rat b = charge_of(o);
    const Classification c = classify_b(mu, b);
    std::ostringstream os;
    os << c.str() << "\n  critical set " << critical_b_set(mu).str() << "\n";
    json doc{{"mu", mu.str()}, {"series", to_string(mu.series())}, {"b", b.str()},
             {"classification", c.str()}, {"generic", c.generic}, {"sharp", c.sharp}};
    doc["violated"] = c.violated ? json(c.violated->name) : json(nullptr);
    return {c.generic, os.str(), doc};
}

Outcome run_harmonic(const Options& o) {
    const int n = rank_of(o);
    const Series s = series_of(o);
    if (o.k < 0) throw UsageError("--k must be non-negative");
    const HarmonicBasis h = harmonic_decompose(o.k, n, s);
    const Report comm = verify_laplacian_commutator(n, s, o.k);
    std::ostringstream os;
    os << to_string(s) << " n=" << n << " k=" << o.k << ": dim A_k = " << h.dim_A << ", dim H_k = " << h.harmonic.size()
       << "\n  A_k = sum eta^m H_{k-2m} with dimensions";
    for (auto d : h.component_dims) os << " " << d;
    os << "\n" << report_text(h.report) << report_text(comm);
    json doc{{"series", to_string(s)}, {"n", n}, {"k", o.k}, {"dim_A", h.dim_A}, {"dim_H", h.harmonic.size()},
             {"component_dims", h.component_dims}, {"decomposition", to_json(h.report)},
             {"commutator", to_json(comm)}};
    return {h.report.all_pass() && comm.all_pass(), os.str(), doc};
}

Outcome run_suite_cmd(const Options& o) {
    SuiteOptions so;
    so.inject_fault = o.inject_fault;
    so.only = o.only;
    const auto results = run_suite(so);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass();
    return {ok, suite_text(results), suite_json(results)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized conformal representations of orthogonal Lie algebras, in exact arithmetic"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", o.output, "Write the report to this file");
    };
    auto add_series = [&](CLI::App* sub) {
        sub->add_option("--series", o.series, "D (o(2n)) or B (o(2n+1))");
        sub->add_option("--n", o.n, "Rank n");
    };

    struct Verb {
        const char* name;
        const char* help;
        Outcome (*run)(const Options&);
        bool mu, b;
    };
    const Verb verbs[] = {
        {"verify-brackets", "Check the bracket tables of the conformal operators", run_brackets, false, false},
        {"verify-theta", "Check that theta is a Lie algebra isomorphism", run_theta, false, false},
        {"verify-shen", "Check the Shen embedding and its closed forms", run_shen, false, false},
        {"build-irrep", "Build V(mu) and validate it", run_build_irrep, true, false},
        {"pieri", "Decompose V(eps_1) (x) V(mu) and check the eigenspaces", run_pieri, true, false},
        {"charpoly", "Characteristic polynomial of the split Casimir", run_charpoly, true, false},
        {"t-operator", "Check T = c eta on low degrees", run_t_operator, true, true},
        {"scan", "Surjectivity scan of the conformal module", run_scan, true, true},
        {"classify", "Classify b against the critical set of mu", run_classify, true, true},
        {"harmonic", "Harmonic decomposition of A_k", run_harmonic, false, false},
        {"suite", "Run the acceptance battery", run_suite_cmd, false, false},
    };

    std::vector<std::pair<CLI::App*, const Verb*>> subs;
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        add_common(sub);
        const std::string name = v.name;
        if (name != "suite") add_series(sub);
        if (v.mu) sub->add_option("--mu", o.mu, "Highest weight, comma separated (e.g. 1,0 or 1/2,1/2)")->required();
        if (v.b) sub->add_option("--b", o.b, "Central charge, rational p/q")->required();
        if (name == "scan") {
            sub->add_option("--max-degree", o.max_degree, "Highest degree scanned");
            sub->add_flag("--submodule", o.submodule, "Also construct the submodule generated by 1 (x) V");
        }
        if (name == "t-operator" || name == "harmonic") sub->add_option("--k", o.k, "Degree bound");
        if (name == "verify-shen" || name == "suite")
            sub->add_flag("--inject-fault", o.inject_fault, "Flip one sign in a closed-form fixture");
        if (name == "suite") sub->add_option("--only", o.only, "Run only these criteria");
        subs.emplace_back(sub, &v);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Verb* verb = nullptr;
    for (auto& [sub, v] : subs)
        if (sub->parsed()) verb = v;

    Outcome out;
    try {
        out = verb->run(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }

    std::string body;
    if (o.format == "json") {
        json doc{{"schema", 1}, {"command", verb->name}, {"status", out.ok ? "pass" : "fail"}, {"result", out.doc}};
        body = doc.dump(2) + "\n";
    } else {
        body = out.text;
        if (!body.empty() && body.back() != '\n') body += '\n';
    }
    if (o.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.output);
        if (!f) {
            std::cerr << "error: cannot write " << o.output << "\n";
            return kExitUsage;
        }
        f << body;
    }
    return out.ok ? kExitOk : kExitFail;
}
