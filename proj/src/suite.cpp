#include "confrep/suite.hpp"

#include "confrep/irreducibility.hpp"
#include "confrep/mixed.hpp"
#include "confrep/ortho.hpp"
#include "confrep/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace confrep {

namespace {

WeightVec W(Series s, const char* text) { return WeightVec::parse(s, text); }

std::string label(const WeightVec& mu) { return to_string(mu.series()) + " mu=(" + mu.str() + ")"; }

const std::vector<WeightVec>& casimir_weights() {
    static const std::vector<WeightVec> ws{W(Series::D, "1,0"), W(Series::D, "1,1"), W(Series::D, "1,-1"),
                                           W(Series::D, "2,0"), W(Series::B, "1,0"), W(Series::B, "1/2,1/2")};
    return ws;
}

std::vector<WeightVec> spectral_weights() {
    auto ws = casimir_weights();
    ws.push_back(W(Series::B, "1,1"));
    ws.push_back(W(Series::D, "1,1,0"));
    return ws;
}

void absorb(Report& into, const Report& part) {
    for (auto e : part.entries) {
        e.identity = part.name + ": " + e.identity;
        into.entries.push_back(std::move(e));
    }
}

Report criterion_brackets() {
    Report r;
    for (auto [n, s] : {std::pair{2, Series::D}, std::pair{3, Series::D}, std::pair{1, Series::B}, std::pair{2, Series::B}}) {
        Report part = verify_bracket_tables(n, s);
        part.name = "brackets " + to_string(s) + " n=" + std::to_string(n);
        absorb(r, part);
    }
    return r;
}

Report criterion_theta() {
    Report r;
    for (auto s : {Series::D, Series::B}) {
        Report part = verify_theta_homomorphism(2, s);
        part.name = s == Series::D ? "o(6)" : "o(7)";
        absorb(r, part);
    }
    return r;
}

Report criterion_shen(bool fault) {
    Report r;
    for (auto s : {Series::D, Series::B}) absorb(r, verify_shen_monomorphism(2, s, fault && s == Series::D));
    return r;
}

Report criterion_casimir() {
    Report r;
    for (const auto& mu : casimir_weights()) {
        const IrrepData v = build_irrep(mu);
        const Rat c = casimir_eigenvalue(mu);
        const SparseMat om = omega_matrix(v);
        const bool ok = om == c * SparseMat::identity(v.dim());
        r.add(label(mu) + ": omega = " + c.str() + " * Id on " + std::to_string(v.dim()) + " dimensions", ok,
              ok ? c.str() : om.str(), c.str());
    }
    return r;
}

Report criterion_charpoly() {
    Report r;
    for (const auto& mu : spectral_weights()) absorb(r, verify_charpoly_lemma(mu).report);
    const auto d = verify_charpoly_lemma(W(Series::D, "1,0"));
    const RatPoly literal = RatPoly::from_roots({{Rat(1), 9}, {Rat(-1), 6}, {Rat(-3), 1}});
    r.add("D mu=(1,0): charpoly is (t-1)^9 (t+1)^6 (t+3)", d.computed == literal, d.computed.factored_str(),
          literal.factored_str());
    return r;
}

Report criterion_phi() {
    Report r;
    for (const auto& mu : casimir_weights()) {
        const IrrepData v = build_irrep(mu);
        for (const Rat& b : {Rat(0), Rat(1, 3), Rat(-2)}) {
            Report part = verify_phi_degree_one(ConformalModule(v, b));
            part.name = label(mu);
            absorb(r, part);
        }
    }
    return r;
}

Report criterion_T() {
    Report r;
    for (const auto& mu : {W(Series::D, "1,0"), W(Series::B, "1,0"), W(Series::B, "1/2,1/2")}) {
        const IrrepData v = build_irrep(mu);
        for (const Rat& b : {Rat(0), Rat(1), Rat(1, 3)}) {
            ConformalModule mod(v, b);
            for (int k = 0; k <= 4; ++k) {
                Report part = verify_T_operator(mod, k);
                part.name = label(mu) + " b=" + b.str();
                absorb(r, part);
            }
        }
    }
    return r;
}

Report criterion_sufficiency() {
    Report r;
    const std::vector<std::pair<WeightVec, Rat>> generic{
        {W(Series::D, "1,0"), Rat(1, 3)}, {W(Series::D, "1,0"), Rat(5, 3)}, {W(Series::D, "1,1"), Rat(7, 2)},
        {W(Series::D, "1,-1"), Rat(-1, 3)}, {W(Series::B, "1/2,1/2"), Rat(1, 4)}, {W(Series::B, "1,0"), Rat(1, 3)}};
    for (const auto& [mu, b] : generic) {
        const Classification cls = classify_b(mu, b);
        const ScanResult scan = surjectivity_scan(mu, b, 4);
        std::ostringstream ranks;
        for (const auto& l : scan.levels) ranks << (l.k > 1 ? "," : "") << l.generated_rank << "/" << l.dim;
        r.add(label(mu) + " b=" + b.str() + ": generic and full rank up to degree 4",
              cls.generic && scan.verdict == Verdict::IrreducibleUpToD, ranks.str(), cls.str());
    }
    const std::vector<std::pair<WeightVec, Rat>> critical{{W(Series::D, "1,0"), Rat(3)}, {W(Series::B, "1,0"), Rat(4)}};
    for (const auto& [mu, b] : critical) {
        const Classification cls = classify_b(mu, b);
        const ScanResult scan = surjectivity_scan(mu, b, 2);
        bool zero_eig = false;
        for (const auto& [x, m] : scan.phi_eigenvalues)
            if (x.is_zero()) zero_eig = true;
        const auto bad = scan.first_deficient();
        r.add(label(mu) + " b=" + b.str() + ": critical, zero eigenvalue on degree 1, deficiency at degree 1",
              !cls.generic && zero_eig && bad && *bad == 1, bad ? "first deficient degree " + std::to_string(*bad) : "none",
              cls.str());
    }
    return r;
}

Report criterion_trivial() {
    Report r;
    for (Series s : {Series::D, Series::B}) {
        const IrrepData v = build_irrep(WeightVec::zero(s, 2));
        const std::string name = to_string(s) + " mu=0";
        for (const Rat& b : {Rat(1, 2), Rat(1), Rat(5, 2)}) {
            const ScanResult scan = surjectivity_scan(ConformalModule(v, b), 4);
            std::ostringstream ranks;
            for (const auto& l : scan.levels) ranks << (l.k > 1 ? "," : "") << l.generated_rank << "/" << l.dim;
            r.add(name + " b=" + b.str() + ": full rank up to degree 4", !scan.first_deficient(), ranks.str(),
                  "full at every degree");
        }
        for (const Rat& b : {Rat(0), Rat(-1), Rat(-2)}) {
            const ConformalModule mod(v, b);
            const auto sub = detect_submodule(mod, 4);
            std::string dims = "none";
            if (sub) {
                std::ostringstream os;
                for (std::size_t k = 0; k < sub->basis.size(); ++k) os << (k ? "," : "") << sub->basis[k].size();
                dims = os.str();
            }
            r.add(name + " b=" + b.str() + ": explicit proper submodule", sub && sub->report.all_pass(), dims, "proper");
            if (b.is_zero()) {
                const bool line = sub && sub->dims() == std::vector<std::size_t>{1, 0, 0, 0, 0};
                r.add(name + " b=0: the submodule is the constants line", line, dims, "1,0,0,0,0");
                std::ostringstream ranks;
                bool full = true;
                for (const auto& l : quotient_scan(mod, 1, 4)) {
                    ranks << (l.k > 2 ? "," : "") << l.generated_rank << "/" << l.dim;
                    full = full && l.full();
                }
                r.add(name + " b=0: quotient by constants is full rank up to degree 4", full, ranks.str(),
                      "full at every degree");
            }
        }
    }
    return r;
}

Report criterion_pieri() {
    Report r;
    for (const auto& mu : spectral_weights()) absorb(r, verify_pieri_eigenspaces(mu));
    const WeightVec spin = W(Series::B, "1/2,1/2");
    std::vector<long> dims;
    for (const auto& s : pieri_decompose(spin)) dims.push_back(weyl_dim(s.weight));
    std::sort(dims.begin(), dims.end());
    std::ostringstream parts;
    for (std::size_t i = 0; i < dims.size(); ++i) parts << (i ? "+" : "") << dims[i];
    r.add("B mu=(1/2,1/2): 5*4 = 4+16", dims == std::vector<long>{4, 16}, parts.str(), "4+16");
    return r;
}

Report criterion_harmonic() {
    Report r;
    absorb(r, verify_laplacian_commutator(2, Series::D, 4));
    absorb(r, verify_laplacian_commutator(2, Series::B, 4));
    const HarmonicBasis h = harmonic_decompose(2, 2, Series::D);
    absorb(r, h.report);
    r.add("dim H_2 = dim A_2 - 1 for D n=2", h.harmonic.size() + 1 == h.dim_A && h.dim_A == 10,
          std::to_string(h.harmonic.size()), "9");
    for (int k = 0; k <= 4; ++k) absorb(r, harmonic_decompose(k, 2, Series::B).report);
    return r;
}

struct Entry {
    int id;
    const char* title;
    std::function<Report(const SuiteOptions&)> run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list{
        {1, "bracket tables of the conformal generators", [](const SuiteOptions&) { return criterion_brackets(); }},
        {2, "theta is an isomorphism onto the conformal algebra", [](const SuiteOptions&) { return criterion_theta(); }},
        {3, "Shen embedding: homomorphism and closed forms",
         [](const SuiteOptions& o) { return criterion_shen(o.inject_fault); }},
        {4, "Casimir acts by (mu+2rho, mu)", [](const SuiteOptions&) { return criterion_casimir(); }},
        {5, "characteristic polynomial of the split Casimir", [](const SuiteOptions&) { return criterion_charpoly(); }},
        {6, "phi = b + omega~ on degree one", [](const SuiteOptions&) { return criterion_phi(); }},
        {7, "T is a scalar multiple of eta", [](const SuiteOptions&) { return criterion_T(); }},
        {8, "sufficiency of the irreducibility condition", [](const SuiteOptions&) { return criterion_sufficiency(); }},
        {9, "trivial highest weight: irreducible iff b not in -N", [](const SuiteOptions&) { return criterion_trivial(); }},
        {10, "Pieri eigenspace dimensions", [](const SuiteOptions&) { return criterion_pieri(); }},
        {11, "harmonic decomposition and [Delta, eta]", [](const SuiteOptions&) { return criterion_harmonic(); }},
    };
    return list;
}

}  // namespace

int suite_size() { return static_cast<int>(entries().size()); }

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
    std::vector<CriterionResult> out;
    for (const auto& e : entries()) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        CriterionResult res;
        res.id = e.id;
        res.title = e.title;
        try {
            res.report = e.run(opts);
        } catch (const std::exception& ex) {
            res.report.add(std::string("completed without error"), false, ex.what(), "");
        }
        res.report.name = e.title;
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(res));
    }
    return out;
}

std::string suite_text(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : results) {
        os << "criterion " << std::setw(2) << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << "  " << r.title << "  ("
           << r.report.entries.size() << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
        if (r.pass()) ++passed;
        for (const auto& e : r.report.entries) {
            if (e.pass) continue;
            os << "    failed: " << e.identity << "\n";
            if (!e.lhs.empty() || !e.rhs.empty()) os << "      got: " << e.lhs << "\n      expected: " << e.rhs << "\n";
        }
    }
    os << passed << "/" << results.size() << " criteria pass\n";
    return os.str();
}

nlohmann::json suite_json(const std::vector<CriterionResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        arr.push_back({{"id", r.id}, {"title", r.title}, {"status", r.pass() ? "pass" : "fail"},
                       {"report", to_json(r.report)}});
        if (r.pass()) ++passed;
    }
    return {{"schema", 1}, {"criteria", arr}, {"passed", passed}, {"total", results.size()}};
}

}  // namespace confrep
