#include "confrep/irreducibility.hpp"

#include "confrep/spectral.hpp"

#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

namespace confrep {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::IrreducibleUpToD: return "irreducible-up-to-D";
        case Verdict::ProperSubmoduleFound: return "proper-submodule-found";
        case Verdict::CriticalB: return "critical-b";
    }
    return "";
}

namespace {

std::size_t span_rank(const std::vector<const SparseMat*>& mats) {
    EchelonBasis eb;
    for (const auto* m : mats)
        for (const auto& col : m->columns())
            if (!col.empty()) eb.insert(col);
    return eb.rank();
}

}  // namespace

// ---------------------------------------------------------------------------
// Surjectivity scan

std::optional<int> ScanResult::first_deficient() const {
    for (const auto& l : levels)
        if (l.generated_rank < l.dim) return l.k;
    return std::nullopt;
}

std::string ScanResult::verdict_label() const {
    if (verdict == Verdict::IrreducibleUpToD) return "irreducible-up-to-" + std::to_string(max_degree);
    return to_string(verdict);
}

std::string ScanResult::str() const {
    std::ostringstream os;
    os << to_string(mu.series()) << " n=" << mu.rank() << " mu=(" << mu.str() << ") b=" << b << "\n";
    for (const auto& l : levels)
        os << "  degree " << l.k << ": dim " << l.dim << ", rank of J-span " << l.j_rank << ", generated "
           << l.generated_rank << (l.full() ? "" : "  <- deficient") << "\n";
    os << "  phi eigenvalues on degree 1:";
    for (const auto& [x, m] : phi_eigenvalues) os << " " << x << (m > 1 ? "^" + std::to_string(m) : "");
    if (phi_residual.degree() > 0) os << " (irrational factor " << phi_residual.str() << ")";
    os << "\n  verdict: " << verdict_label();
    if (critical) os << " (b in " << critical->name << ")";
    return os.str();
}

ScanResult surjectivity_scan(const ConformalModule& mod, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("scan: max degree must be at least 1");
    ScanResult r;
    r.mu = mod.irrep().mu;
    r.b = mod.b();
    r.max_degree = max_degree;
    const Layout& L = mod.layout();
    for (int k = 1; k <= max_degree; ++k) {
        LevelRecord rec;
        rec.k = k;
        rec.dim = mod.slice_dim(k);
        std::vector<SparseMat> js;
        for (int p = L.first(); p <= L.last(); ++p) js.push_back(mod.J(p, k - 1));
        std::vector<const SparseMat*> ptrs;
        for (const auto& j : js) ptrs.push_back(&j);
        rec.j_rank = span_rank(ptrs);
        rec.generated_rank = rank(mod.phi(k));
        r.levels.push_back(rec);
    }
    const auto roots = rational_roots(charpoly(mod.phi(1)));
    r.phi_eigenvalues = roots.roots;
    r.phi_residual = roots.residual;

    const Classification cls = classify_b(r.mu, r.b);
    if (r.first_deficient()) {
        r.verdict = Verdict::ProperSubmoduleFound;
        r.critical = cls.violated;
    } else if (!cls.generic) {
        r.verdict = Verdict::CriticalB;
        r.critical = cls.violated;
    } else {
        r.verdict = Verdict::IrreducibleUpToD;
    }
    return r;
}

ScanResult surjectivity_scan(const WeightVec& mu, const Rat& b, int max_degree) {
    return surjectivity_scan(ConformalModule(build_irrep(mu), b), max_degree);
}

nlohmann::json to_json(const ScanResult& r) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"k", l.k}, {"dim", l.dim}, {"j_rank", l.j_rank}, {"generated_rank", l.generated_rank},
                          {"full", l.full()}});
    nlohmann::json eig = nlohmann::json::array();
    for (const auto& [x, m] : r.phi_eigenvalues) eig.push_back({{"value", x.str()}, {"multiplicity", m}});
    nlohmann::json j{{"mu", r.mu.str()},
                     {"series", to_string(r.mu.series())},
                     {"n", r.mu.rank()},
                     {"b", r.b.str()},
                     {"max_degree", r.max_degree},
                     {"levels", levels},
                     {"phi_eigenvalues", eig},
                     {"phi_irrational_factor", r.phi_residual.str()},
                     {"verdict", r.verdict_label()}};
    j["critical_part"] = r.critical ? nlohmann::json(r.critical->name) : nlohmann::json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// Submodules

std::vector<std::size_t> Submodule::dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis) out.push_back(b.size());
    return out;
}

std::optional<Submodule> detect_submodule(const ConformalModule& mod, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("detect_submodule: negative degree");
    const std::size_t g = mod.num_generators();
    std::vector<std::vector<SparseMat>> mats(g);
    for (std::size_t i = 0; i < g; ++i)
        for (int k = 0; k <= max_degree; ++k) mats[i].push_back(mod.generator_matrix(i, k));

    std::vector<EchelonBasis> spans(static_cast<std::size_t>(max_degree) + 1);
    Submodule sub;
    sub.max_degree = max_degree;
    sub.basis.resize(spans.size());
    std::deque<std::pair<int, SparseVec>> work;
    for (std::size_t v = 0; v < mod.slice_dim(0); ++v) {
        SparseVec e{{v, Rat(1)}};
        spans[0].insert(e);
        sub.basis[0].push_back(e);
        work.emplace_back(0, e);
    }
    while (!work.empty()) {
        auto [k, w] = std::move(work.front());
        work.pop_front();
        for (std::size_t i = 0; i < g; ++i) {
            const int t = k + mod.shift(i);
            if (t < 0 || t > max_degree) continue;
            SparseVec img = mats[i][static_cast<std::size_t>(k)].apply(w);
            if (img.empty()) continue;
            if (spans[static_cast<std::size_t>(t)].insert(img)) {
                sub.basis[static_cast<std::size_t>(t)].push_back(img);
                work.emplace_back(t, std::move(img));
            }
        }
    }

    bool proper = false;
    for (int k = 0; k <= max_degree; ++k) {
        sub.slice_dims.push_back(mod.slice_dim(k));
        if (sub.basis[static_cast<std::size_t>(k)].size() < mod.slice_dim(k)) proper = true;
    }
    if (!proper) return std::nullopt;

    sub.report.name = "submodule generated by 1 (x) M up to degree " + std::to_string(max_degree);
    std::size_t escapes = 0;
    for (std::size_t i = 0; i < g; ++i)
        for (int k = 0; k <= max_degree; ++k) {
            const int t = k + mod.shift(i);
            if (t < 0 || t > max_degree) continue;
            for (const auto& w : sub.basis[static_cast<std::size_t>(k)])
                if (!spans[static_cast<std::size_t>(t)].contains(mats[i][static_cast<std::size_t>(k)].apply(w))) ++escapes;
        }
    sub.report.add("invariant under every generator within the truncation", escapes == 0, "", "",
                   escapes == 0 ? "0" : std::to_string(escapes) + " images outside");
    std::ostringstream dims, full;
    for (int k = 0; k <= max_degree; ++k) {
        dims << (k ? "," : "") << sub.basis[static_cast<std::size_t>(k)].size();
        full << (k ? "," : "") << mod.slice_dim(k);
    }
    sub.report.add("proper in some degree", true, dims.str(), full.str());
    return sub;
}

std::optional<Submodule> detect_submodule(const WeightVec& mu, const Rat& b, int max_degree) {
    return detect_submodule(ConformalModule(build_irrep(mu), b), max_degree);
}

std::vector<LevelRecord> quotient_scan(const ConformalModule& mod, int seed, int max_degree) {
    const Layout& L = mod.layout();
    std::vector<LevelRecord> out;
    std::vector<SparseVec> current;
    for (std::size_t i = 0; i < mod.slice_dim(seed); ++i) current.push_back(SparseVec{{i, Rat(1)}});
    for (int k = seed + 1; k <= max_degree; ++k) {
        LevelRecord rec;
        rec.k = k;
        rec.dim = mod.slice_dim(k);
        std::vector<SparseMat> js;
        for (int p = L.first(); p <= L.last(); ++p) js.push_back(mod.J(p, k - 1));
        std::vector<const SparseMat*> ptrs;
        for (const auto& j : js) ptrs.push_back(&j);
        rec.j_rank = span_rank(ptrs);
        EchelonBasis eb;
        std::vector<SparseVec> next;
        for (const auto& j : js)
            for (const auto& w : current) {
                SparseVec img = j.apply(w);
                if (!img.empty() && eb.insert(img)) next.push_back(std::move(img));
            }
        rec.generated_rank = eb.rank();
        out.push_back(rec);
        current = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Harmonic polynomials

namespace {

SparseMat operator_matrix(const DiffOp& op, int num_vars, int from, int to) {
    if (to < 0) return SparseMat(0, monomial_basis(num_vars, from).size());
    const auto src = monomial_basis(num_vars, from);
    const auto idx = monomial_index(num_vars, to);
    SparseMat out(idx.size(), src.size());
    for (std::size_t a = 0; a < src.size(); ++a) {
        const Poly img = op.apply(Poly::monomial(src[a]));
        for (const auto& [e, c] : img.terms()) out.add(idx.at(e), a, c);
    }
    return out;
}

std::vector<SparseVec> image_of(const SparseMat& m, const std::vector<SparseVec>& vs) {
    std::vector<SparseVec> out;
    for (const auto& v : vs) out.push_back(m.apply(v));
    return out;
}

}  // namespace

HarmonicBasis harmonic_decompose(int k, int n, Series series) {
    if (k < 0) throw std::invalid_argument("harmonic_decompose: negative degree");
    const ConformalOps ops(series, n);
    const int m = ops.num_vars();
    HarmonicBasis h;
    h.k = k;
    h.n = n;
    h.series = series;
    h.dim_A = monomial_basis(m, k).size();
    h.report.name = "harmonic decomposition, " + to_string(series) + " n=" + std::to_string(n) + " k=" +
                    std::to_string(k);
    const DiffOp lap = ops.laplacian();
    const DiffOp eta = ops.mul(ops.eta());

    auto harmonic_basis = [&](int d) { return kernel(operator_matrix(lap, m, d, d - 2)); };
    h.harmonic = harmonic_basis(k);

    const SparseMat lap_k = operator_matrix(lap, m, k, k - 2);
    std::size_t nonzero = 0;
    for (const auto& v : h.harmonic)
        if (!lap_k.apply(v).empty()) ++nonzero;
    h.report.add("Laplacian annihilates the harmonic basis", nonzero == 0);

    // A_k = sum_m eta^m H_{k-2m}
    EchelonBasis all;
    std::size_t total = 0;
    for (int j = 0; 2 * j <= k; ++j) {
        auto comp = harmonic_basis(k - 2 * j);
        h.component_dims.push_back(comp.size());
        total += comp.size();
        for (int r = 0; r < j; ++r) comp = image_of(operator_matrix(eta, m, k - 2 * j + 2 * r, k - 2 * j + 2 * r + 2), comp);
        for (const auto& v : comp) all.insert(v);
    }
    h.report.add("sum of dim H_{k-2m} equals dim A_k", total == h.dim_A, std::to_string(total),
                 std::to_string(h.dim_A));
    h.report.add("the spaces eta^m H_{k-2m} span A_k", all.rank() == h.dim_A, std::to_string(all.rank()),
                 std::to_string(h.dim_A));

    // Filtration: ker Delta^{r+1} on A_k is mapped by Delta^r onto H_{k-2r}.
    SparseMat power = SparseMat::identity(h.dim_A);  // Delta^r : A_k -> A_{k-2r}
    std::size_t bad = 0;
    for (int r = 0; 2 * r <= k; ++r) {
        const SparseMat next = operator_matrix(lap, m, k - 2 * r, k - 2 * r - 2) * power;
        const auto filt = kernel(next);
        const auto img = image_of(power, filt);
        const auto target = harmonic_basis(k - 2 * r);
        EchelonBasis span_target;
        for (const auto& v : target) span_target.insert(v);
        const std::size_t img_rank = rank_of(img);
        bool inside = true;
        for (const auto& v : img)
            if (!v.empty() && !span_target.contains(v)) inside = false;
        if (!inside || img_rank != target.size()) ++bad;
        power = next;
    }
    h.report.add("Delta^r maps ker Delta^{r+1} onto H_{k-2r} for every r", bad == 0);
    return h;
}

Report verify_laplacian_commutator(int n, Series series, int max_k) {
    const ConformalOps ops(series, n);
    Report rep;
    rep.name = "[Delta, eta], " + to_string(series) + " n=" + std::to_string(n);
    const DiffOp comm = bracket(ops.laplacian(), ops.mul(ops.eta()));
    const bool B = series == Series::B;
    const DiffOp claim = ops.one() * Rat(B ? 1 + 2 * n : n) + ops.D();
    const std::string claim_text = B ? "1+2n+D" : "n+D";
    rep.add("[Delta, eta] = " + claim_text + " as operators", comm == claim, comm.str(ops.names()),
            claim.str(ops.names()));
    std::size_t bad = 0;
    const int m = ops.num_vars();
    for (int k = 0; k <= max_k; ++k)
        if (!(operator_matrix(comm, m, k, k) == operator_matrix(claim, m, k, k))) ++bad;
    rep.add("[Delta, eta] = " + claim_text + " on A_k for k <= " + std::to_string(max_k), bad == 0, "", "",
            bad == 0 ? "0" : std::to_string(bad) + " degrees");
    return rep;
}

// ---------------------------------------------------------------------------
// Classification

std::string Classification::str() const {
    if (generic) return sharp ? "generic (irreducible)" : "generic";
    std::string s = "excluded(b in " + violated->name + ")";
    if (sharp) s += ", reducible";
    return s;
}

Classification classify_b(const WeightVec& mu, const Rat& b) {
    const CriticalSet cs = critical_b_set(mu);
    Classification c;
    c.sharp = cs.sharp;
    c.violated = cs.violated_by(b);
    c.generic = !c.violated;
    return c;
}

// ---------------------------------------------------------------------------
// Steps of the surjectivity argument

Report verify_eta_containment(const ConformalModule& mod, int ell) {
    Report rep;
    const Layout& L = mod.layout();
    rep.name = "eta * degree " + std::to_string(ell - 1) + " inside the J-span of degree " + std::to_string(ell);
    if (ell < 1) throw std::invalid_argument("eta containment needs ell >= 1");
    const Rat c = T_scalar(L.series, L.n, mod.b(), ell - 1);
    if (c.is_zero()) {
        rep.add("not applicable: T vanishes on degree " + std::to_string(ell - 1), true, "", "", "n/a");
        return rep;
    }
    EchelonBasis span;
    for (int p = L.first(); p <= L.last(); ++p)
        for (const auto& col : mod.J(p, ell).columns())
            if (!col.empty()) span.insert(col);
    const SparseMat eta = mod.multiply(mod.ops().eta(), ell - 1);
    std::size_t outside = 0;
    for (const auto& col : eta.columns())
        if (!span.contains(col)) ++outside;
    rep.add("eta u lies in sum_p J_p(degree " + std::to_string(ell) + ") for all u (T scalar " + c.str() + ")",
            outside == 0, "", "", outside == 0 ? "0" : std::to_string(outside) + " vectors");
    return rep;
}

Report verify_j_identity(const ConformalModule& mod, int ell, unsigned seed, int samples) {
    Report rep;
    const Layout& L = mod.layout();
    rep.name = "J_p(g (x) v) + eta d_{p*}(g) (x) v = g[(ell+b+omega~)(x_p (x) v)], ell=" + std::to_string(ell);
    const std::size_t d = mod.irrep().dim();
    const int m = L.size();
    const auto om = omega_tilde_matrix(mod.irrep());
    const SparseMat shifted = om.matrix + (Rat(ell) + mod.b()) * SparseMat::identity(om.dim);
    const auto& monos = mod.monomials(ell);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick_v(0, d - 1);
    std::size_t bad = 0, count = 0;
    for (int s = 0; s < samples; ++s) {
        Poly g(m);
        for (const auto& e : monos) g.add_term(e, Rat(coef(rng)));
        if (g.is_zero()) g.add_term(monos.front(), Rat(1));
        const std::size_t v = pick_v(rng);
        SparseVec gv;
        for (const auto& [e, c] : g.terms()) gv.emplace(mod.mono_index(e) * d + v, c);
        for (int p = L.first(); p <= L.last(); ++p) {
            const int q = mod.ops().dual(p);
            SparseVec lhs = mod.J(p, ell).apply(gv);
            const Poly corr = mod.ops().eta() * g.derivative(static_cast<int>(L.internal(q)));
            for (const auto& [e, c] : corr.terms()) {
                Rat& slot = lhs[mod.mono_index(e) * d + v];
                slot += c;
                if (slot.is_zero()) lhs.erase(mod.mono_index(e) * d + v);
            }
            const SparseVec inner = shifted.apply(SparseVec{{L.internal(p) * d + v, Rat(1)}});
            SparseVec rhs;
            for (const auto& [idx, c] : inner) {
                const std::size_t var = idx / d, u = idx % d;
                Exponent unit(static_cast<std::size_t>(m), 0);
                unit[var] = 1;
                for (const auto& [e, x] : g.terms()) {
                    const std::size_t at = mod.mono_index(e + unit) * d + u;
                    Rat& slot = rhs[at];
                    slot += c * x;
                    if (slot.is_zero()) rhs.erase(at);
                }
            }
            ++count;
            if (lhs != rhs) ++bad;
        }
    }
    rep.add("identity holds on " + std::to_string(count) + " random (g, v, p) samples", bad == 0, "", "",
            bad == 0 ? "0" : std::to_string(bad) + " samples");
    return rep;
}

}  // namespace confrep
