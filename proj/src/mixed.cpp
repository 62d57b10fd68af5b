#include "confrep/mixed.hpp"

#include "confrep/spectral.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace confrep {

namespace {

void add_to(PolyMatrix& pm, const Exponent& e, const SparseMat& m) {
    auto it = pm.find(e);
    if (it == pm.end()) {
        if (!m.is_zero()) pm.emplace(e, m);
        return;
    }
    it->second += m;
    if (it->second.is_zero()) pm.erase(it);
}

void add_poly_times(PolyMatrix& pm, const Poly& f, const SparseMat& m) {
    for (const auto& [e, c] : f.terms()) add_to(pm, e, c * m);
}

Exponent zero_exp(int nvars) { return Exponent(static_cast<std::size_t>(nvars), 0); }

int homogeneous_shift(const DiffOp& field) {
    std::optional<int> shift;
    for (const auto& [beta, f] : field.terms())
        for (const auto& [alpha, c] : f.terms()) {
            int s = total_degree(alpha) - total_degree(beta);
            if (shift && *shift != s) throw std::logic_error("operator is not homogeneous");
            shift = s;
        }
    if (!shift) throw std::logic_error("zero operator has no degree");
    return *shift;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtendedOp

PolyMatrix ExtendedOp::gl() const {
    PolyMatrix out = ortho;
    if (!central.is_zero()) {
        const std::size_t m = static_cast<std::size_t>(field.num_vars());
        add_poly_times(out, central, SparseMat::identity(m));
    }
    return out;
}

std::optional<ExtendedOp> ExtendedOp::from_gl(const Layout& L, DiffOp field, const PolyMatrix& gl) {
    const SparseMat G = L.form();
    const std::size_t m = static_cast<std::size_t>(L.size());
    ExtendedOp out{std::move(field), {}, Poly(L.size())};
    for (const auto& [e, M] : gl) {
        SparseMat reflected = G * M.transpose() * G;
        SparseMat k = (M - reflected) * Rat(1, 2);
        SparseMat s = (M + reflected) * Rat(1, 2);
        const Rat c = s.at(0, 0);
        if (!(s == c * SparseMat::identity(m))) return std::nullopt;
        add_to(out.ortho, e, k);
        if (!c.is_zero()) out.central.add_term(e, c);
    }
    return out;
}

std::string ExtendedOp::str(const Layout& L) const {
    std::ostringstream os;
    os << field.str(L.names());
    for (const auto& [e, M] : ortho) {
        os << " + " << Poly::monomial(e).str(L.names()) << "*[";
        bool first = true;
        for (const auto& [r, c, v] : M.triplets()) {
            if (!first) os << ", ";
            first = false;
            os << v.str() << "*E_{" << static_cast<int>(r) + L.first() << "," << static_cast<int>(c) + L.first() << "}";
        }
        os << "]";
    }
    if (!central.is_zero()) os << " + (" << central.str(L.names()) << ")*sum E_{p,p}";
    return os.str();
}

bool operator==(const ExtendedOp& a, const ExtendedOp& b) {
    return a.field == b.field && a.ortho == b.ortho && a.central == b.central;
}

ExtendedOp bracket(const Layout& L, const ExtendedOp& a, const ExtendedOp& b) {
    PolyMatrix gl;
    for (const auto& [ea, Ma] : a.ortho)
        for (const auto& [eb, Mb] : b.ortho) add_to(gl, ea + eb, commutator(Ma, Mb));
    for (const auto& [e, M] : b.gl()) add_poly_times(gl, a.field.apply(Poly::monomial(e)), M);
    for (const auto& [e, M] : a.gl()) add_poly_times(gl, b.field.apply(Poly::monomial(e)), -M);
    auto out = ExtendedOp::from_gl(L, bracket(a.field, b.field), gl);
    if (!out) throw std::logic_error("bracket left the extended conformal algebra");
    return *out;
}

ExtendedOp shen_formula(const Layout& L, const DiffOp& xi) {
    const auto f = xi.vector_field_components();
    const int m = L.size();
    PolyMatrix gl;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            Poly c = f[static_cast<std::size_t>(q)].derivative(p);
            if (c.is_zero()) continue;
            SparseMat unit(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
            unit.set(static_cast<std::size_t>(p), static_cast<std::size_t>(q), Rat(1));
            add_poly_times(gl, c, unit);
        }
    auto out = ExtendedOp::from_gl(L, xi, gl);
    if (!out) throw std::invalid_argument("image lies outside o(m, A) + A sum E_{p,p}");
    return *out;
}

// ---------------------------------------------------------------------------
// ShenEmbedding

ShenEmbedding::ShenEmbedding(Series series, int n) : ops_(series, n) {
    for (const auto& g : build_conformal(n, series)) span_.insert(index_(g.op));
}

bool ShenEmbedding::in_span(const DiffOp& xi) const { return span_.contains(index_(xi)); }

ExtendedOp ShenEmbedding::operator()(const DiffOp& xi) const {
    if (xi.num_vars() != ops_.num_vars() || !in_span(xi))
        throw std::invalid_argument("operator is not in the conformal algebra: " + xi.str(ops_.names()));
    return shen_formula(layout(), xi);
}

ExtendedOp shen_embed(Series series, int n, const DiffOp& xi) { return ShenEmbedding(series, n)(xi); }

std::vector<ShenFixture> shen_closed_forms(Series series, int n, bool inject_fault) {
    const ConformalOps ops(series, n);
    const Layout& L = ops.layout();
    const int m = L.size();
    const bool B = series == Series::B;
    const Exponent one = zero_exp(m);
    auto E = [&](int p, int q) { return L.E(p, q); };
    std::vector<ShenFixture> out;
    auto fixture = [&](std::string label, DiffOp xi, PolyMatrix ortho, Poly central) {
        out.push_back({std::move(label), xi, ExtendedOp{xi, std::move(ortho), std::move(central)}});
    };
    const Poly none(m);
    auto constant = [&](const SparseMat& M) {
        PolyMatrix pm;
        add_to(pm, one, M);
        return pm;
    };
    auto lbl = [](const char* name, int i, int j = -1) {
        std::string s = std::string(name) + "_{" + std::to_string(i);
        if (j >= 0) s += "," + std::to_string(j);
        return s + "}";
    };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            fixture(lbl("A", i, j), ops.A(i, j), constant(E(i, j) - E(n + j, n + i)), none);
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
            fixture(lbl("B", r, s), ops.B(r, s), constant(E(r, n + s) - E(s, n + r)), none);
            fixture(lbl("C", r, s), ops.C(r, s), constant(E(n + r, s) - E(n + s, r)), none);
        }
    for (int p = L.first(); p <= L.last(); ++p) fixture(lbl("d", p), ops.d(p), {}, none);
    fixture("D", ops.D(), {}, Poly::constant(m, Rat(1)));

    for (int i = 1; i <= n; ++i) {
        for (const int side : {0, 1}) {
            const int a = side == 0 ? i : n + i;      // index of J
            const int c = side == 0 ? n + i : i;      // its dual
            PolyMatrix ortho;
            for (int p = 1; p <= n; ++p) add_poly_times(ortho, ops.x(n + p), E(a, n + p) - E(p, c));
            for (int q = 1; q <= n; ++q) add_poly_times(ortho, ops.x(q), E(a, q) - E(n + q, c));
            if (B) add_poly_times(ortho, ops.x(0), E(a, 0) - E(0, c));
            Poly central = ops.x(a);
            if (inject_fault && a == 1) central = -central;
            fixture(lbl("J", a), ops.J(a), std::move(ortho), std::move(central));
        }
    }
    if (B) {
        for (int i = 1; i <= n; ++i) {
            fixture(lbl("K", i), ops.K(i), constant(E(0, i) - E(n + i, 0)), none);
            fixture(lbl("K", n + i), ops.K(n + i), constant(E(0, n + i) - E(i, 0)), none);
        }
        PolyMatrix ortho;
        for (int s = 1; s <= n; ++s) {
            add_poly_times(ortho, ops.x(s), E(0, s) - E(n + s, 0));
            add_poly_times(ortho, ops.x(n + s), E(0, n + s) - E(s, 0));
        }
        fixture("J_{0}", ops.J(0), std::move(ortho), ops.x(0));
    }
    return out;
}

Report verify_shen_monomorphism(int n, Series series, bool inject_fault) {
    Report rep;
    rep.name = "Shen embedding, " + to_string(series) + " n=" + std::to_string(n);
    const ShenEmbedding shen(series, n);
    const Layout& L = shen.layout();
    const auto gens = build_conformal(n, series);

    std::vector<ExtendedOp> images;
    std::size_t outside = 0;
    for (const auto& g : gens) {
        try {
            images.push_back(shen(g.op));
        } catch (const std::invalid_argument&) {
            ++outside;
            images.push_back(ExtendedOp{g.op, {}, Poly(L.size())});
        }
    }
    rep.add("images of all " + std::to_string(gens.size()) + " generators lie in the extended algebra", outside == 0,
            "", "", outside == 0 ? "0" : std::to_string(outside) + " generators");

    std::size_t bad = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            bool ok;
            try {
                ok = shen(bracket(gens[i].op, gens[j].op)) == bracket(L, images[i], images[j]);
            } catch (const std::exception&) {
                ok = false;
            }
            if (!ok && bad++ == 0) first_bad = "[" + gens[i].label + ", " + gens[j].label + "]";
        }
    const std::size_t pairs = gens.size() * gens.size();
    rep.add("homomorphism on all " + std::to_string(pairs) + " generator pairs", bad == 0, first_bad, "",
            bad == 0 ? "0" : std::to_string(bad) + " pairs");

    for (const auto& fx : shen_closed_forms(series, n, inject_fault)) {
        ExtendedOp got = shen_formula(L, fx.xi);
        const bool ok = got == fx.expected;
        rep.add("closed form of image of " + fx.label, ok, got.str(L), fx.expected.str(L));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// ConformalModule

ConformalModule::ConformalModule(IrrepData v, Rat b, std::size_t cap)
    : v_(std::move(v)),
      b_(std::move(b)),
      cap_(cap),
      shen_(v_.mu.series(), v_.mu.rank()),
      theta_(v_.mu.series(), v_.mu.rank()) {
    for (std::size_t i = 0; i < theta_.domain().size(); ++i) {
        gens_.push_back(shen_(theta_.image(i)));
        compiled_.push_back(compile(gens_.back()));
        shifts_.push_back(compiled_.back().shift);
    }
    const Layout& L = layout();
    for (int p = L.first(); p <= L.last(); ++p) j_ops_.push_back(compile(shen_(ops().J(p))));
}

void ConformalModule::check_cap(int k) const {
    if (slice_dim(k) > cap_)
        throw std::length_error("slice of degree " + std::to_string(k) + " has dimension " +
                                std::to_string(slice_dim(k)) + ", above the cap " + std::to_string(cap_));
}

const std::vector<Exponent>& ConformalModule::monomials(int k) const {
    auto it = monos_.find(k);
    if (it == monos_.end()) {
        it = monos_.emplace(k, monomial_basis(num_vars(), k)).first;
        mono_idx_.emplace(k, monomial_index(num_vars(), k));
    }
    return it->second;
}

std::size_t ConformalModule::slice_dim(int k) const {
    if (k < 0) return 0;
    return monomials(k).size() * v_.dim();
}

std::size_t ConformalModule::mono_index(const Exponent& e) const {
    const int k = total_degree(e);
    monomials(k);
    return mono_idx_.at(k).at(e);
}

std::string ConformalModule::basis_label(int k, std::size_t i) const {
    const std::size_t d = v_.dim();
    const Exponent& e = monomials(k).at(i / d);
    std::string mono = total_degree(e) == 0 ? "1" : Poly::monomial(e).str(layout().names());
    return mono + " (x) v" + std::to_string(i % d);
}

ConformalModule::Compiled ConformalModule::compile(const ExtendedOp& op) const {
    Compiled c{op.field, op.central, {}, 0};
    for (const auto& [e, M] : op.ortho) c.ortho_t.emplace_back(e, v_.of(M).transpose());
    c.shift = homogeneous_shift(op.field);
    return c;
}

std::map<int, SparseVec> ConformalModule::apply(const Compiled& op, int k, const SparseVec& w) const {
    const std::size_t d = v_.dim();
    const auto& monos = monomials(k);
    std::map<int, SparseVec> out;
    auto put = [&](const Exponent& e, std::size_t v, const Rat& c) {
        if (c.is_zero()) return;
        SparseVec& tgt = out[total_degree(e)];
        const std::size_t idx = mono_index(e) * d + v;
        Rat& slot = tgt[idx];
        slot += c;
        if (slot.is_zero()) tgt.erase(idx);
    };
    for (const auto& [idx, c] : w) {
        const Exponent& alpha = monos.at(idx / d);
        const std::size_t v = idx % d;
        const Poly g = Poly::monomial(alpha);
        const Poly dg = op.field.apply(g);
        for (const auto& [e, x] : dg.terms()) put(e, v, c * x);
        if (!b_.is_zero())
            for (const auto& [e, x] : op.central.terms()) put(e + alpha, v, c * b_ * x);
        for (const auto& [e, Rt] : op.ortho_t)
            for (const auto& [u, x] : Rt.row(v)) put(e + alpha, u, c * x);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, SparseVec> ConformalModule::apply(const ExtendedOp& op, int k, const SparseVec& w) const {
    return apply(compile(op), k, w);
}

SparseMat ConformalModule::action(const Compiled& op, int from, int to) const {
    if (from < 0 || to < 0) return SparseMat(slice_dim(to), slice_dim(from));
    check_cap(from);
    check_cap(to);
    std::vector<SparseVec> cols;
    const std::size_t dim = slice_dim(from);
    cols.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto img = apply(op, from, SparseVec{{i, Rat(1)}});
        auto it = img.find(to);
        cols.push_back(it == img.end() ? SparseVec{} : std::move(it->second));
    }
    return SparseMat::from_columns(slice_dim(to), cols);
}

SparseMat ConformalModule::action(const ExtendedOp& op, int from, int to) const {
    return action(compile(op), from, to);
}

SparseMat ConformalModule::generator_matrix(std::size_t i, int k) const {
    return action(compiled_.at(i), k, k + shifts_.at(i));
}

SparseMat ConformalModule::J(int p, int k) const {
    const int ip = static_cast<int>(layout().internal(p));
    auto key = std::make_pair(ip, k);
    auto it = j_cache_.find(key);
    if (it == j_cache_.end()) it = j_cache_.emplace(key, action(j_ops_[static_cast<std::size_t>(ip)], k, k + 1)).first;
    return it->second;
}

SparseMat ConformalModule::partial(int p, int k) const { return action(shen_(ops().d(p)), k, k - 1); }

SparseMat ConformalModule::multiply(const Poly& f, int k) const {
    const int deg = f.degree();
    if (!f.is_homogeneous(deg)) throw std::invalid_argument("multiply: polynomial is not homogeneous");
    check_cap(k + deg);
    const std::size_t d = v_.dim();
    const auto& monos = monomials(k);
    SparseMat out(slice_dim(k + deg), slice_dim(k));
    for (std::size_t a = 0; a < monos.size(); ++a)
        for (const auto& [e, c] : f.terms()) {
            const std::size_t target = mono_index(e + monos[a]);
            for (std::size_t v = 0; v < d; ++v) out.add(target * d + v, a * d + v, c);
        }
    return out;
}

SparseMat ConformalModule::phi(int k) const {
    if (k < 0) throw std::invalid_argument("phi: negative degree");
    auto it = phi_cache_.find(k);
    if (it != phi_cache_.end()) return it->second;
    check_cap(k);
    SparseMat out;
    if (k == 0) {
        out = SparseMat::identity(slice_dim(0));
    } else {
        const SparseMat prev = phi(k - 1);
        const std::size_t d = v_.dim();
        const auto& monos = monomials(k);
        const Layout& L = layout();
        std::vector<SparseVec> cols;
        cols.reserve(slice_dim(k));
        for (const auto& alpha : monos) {
            std::size_t p = 0;
            while (alpha[p] == 0) ++p;
            Exponent lower = alpha;
            --lower[p];
            const SparseMat Jp = J(static_cast<int>(p) + L.first(), k - 1);
            const std::size_t base = mono_index(lower) * d;
            for (std::size_t v = 0; v < d; ++v) cols.push_back(Jp.apply(prev.column(base + v)));
        }
        out = SparseMat::from_columns(slice_dim(k), cols);
    }
    return phi_cache_.emplace(k, std::move(out)).first->second;
}

SparseVec ConformalModule::j_power(const Exponent& alpha, std::size_t v, const std::vector<int>& order) const {
    Exponent check(alpha.size(), 0);
    for (int p : order) ++check.at(layout().internal(p));
    if (check != alpha) throw std::invalid_argument("j_power: order does not match the exponent");
    SparseVec w{{v, Rat(1)}};
    int k = 0;
    for (int p : order) {
        auto img = apply(j_ops_.at(layout().internal(p)), k, w);
        ++k;
        auto it = img.find(k);
        w = it == img.end() ? SparseVec{} : std::move(it->second);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Slices and checks

GradedSlice build_slice(const WeightVec& mu, const Rat& b, int k, std::size_t cap) {
    ConformalModule mod(build_irrep(mu), b, cap);
    GradedSlice s{mu, b, k, mod.slice_dim(k), {}, {}};
    for (std::size_t i = 0; i < s.dim; ++i) s.basis.push_back(mod.basis_label(k, i));
    for (std::size_t i = 0; i < mod.num_generators(); ++i)
        s.actions.push_back({mod.theta().domain()[i].label, mod.shift(i), mod.generator_matrix(i, k)});
    return s;
}

SparseMat phi_map(const WeightVec& mu, const Rat& b, int k) { return ConformalModule(build_irrep(mu), b).phi(k); }

Report verify_module_axiom(const ConformalModule& mod, int max_degree) {
    Report rep;
    rep.name = "module axiom up to degree " + std::to_string(max_degree);
    const std::size_t g = mod.num_generators();
    const OrthoBasis& dom = mod.theta().domain();
    // mats[i][k] for k in 0..max_degree+1
    std::vector<std::vector<SparseMat>> mats(g);
    for (std::size_t i = 0; i < g; ++i)
        for (int k = 0; k <= max_degree + 1; ++k) mats[i].push_back(mod.generator_matrix(i, k));
    auto M = [&](std::size_t i, int k) -> std::optional<SparseMat> {
        if (k < 0 || k + mod.shift(i) < 0) return std::nullopt;
        return mats[i][static_cast<std::size_t>(k)];
    };
    std::size_t bad = 0, checked = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            const auto c = dom.coords(commutator(dom[i].mat, dom[j].mat));
            for (int k = 0; k <= max_degree; ++k) {
                const int target = k + mod.shift(i) + mod.shift(j);
                if (target < 0) continue;
                SparseMat lhs(mod.slice_dim(target), mod.slice_dim(k));
                for (std::size_t l = 0; l < g; ++l)
                    if (!c[l].is_zero()) lhs += c[l] * *M(l, k);
                SparseMat rhs(mod.slice_dim(target), mod.slice_dim(k));
                if (auto a = M(j, k)) {
                    if (auto b = M(i, k + mod.shift(j))) rhs += *b * *a;
                }
                if (auto a = M(i, k)) {
                    if (auto b = M(j, k + mod.shift(i))) rhs -= *b * *a;
                }
                ++checked;
                if (!(lhs == rhs) && bad++ == 0)
                    first_bad = "[" + dom[i].label + ", " + dom[j].label + "] on degree " + std::to_string(k);
            }
        }
    rep.add("action([X,Y]) = [action X, action Y] on " + std::to_string(checked) + " (pair, degree) cases", bad == 0,
            first_bad, "", bad == 0 ? "0" : std::to_string(bad) + " cases");
    return rep;
}

Report verify_phi_degree_one(const ConformalModule& mod) {
    Report rep;
    rep.name = "phi on degree one";
    const SparseMat phi1 = mod.phi(1);
    const auto om = omega_tilde_matrix(mod.irrep());
    const SparseMat expect = mod.b() * SparseMat::identity(om.dim) + om.matrix;
    const bool ok = phi1 == expect;
    rep.add("phi = b + omega~ on degree one (b = " + mod.b().str() + ")", ok, ok ? "" : phi1.str(),
            ok ? "" : expect.str());
    return rep;
}

Report verify_j_commute(const ConformalModule& mod, int k, unsigned seed) {
    Report rep;
    rep.name = "J^alpha order independence, degree " + std::to_string(k);
    const SparseMat ph = mod.phi(k);
    const std::size_t d = mod.irrep().dim();
    const int first = mod.layout().first();
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 2; ++trial) {
        std::size_t bad = 0;
        const auto& monos = mod.monomials(k);
        for (std::size_t a = 0; a < monos.size(); ++a) {
            std::vector<int> order;
            for (std::size_t p = 0; p < monos[a].size(); ++p)
                for (int r = 0; r < monos[a][p]; ++r) order.push_back(static_cast<int>(p) + first);
            std::shuffle(order.begin(), order.end(), rng);
            for (std::size_t v = 0; v < d; ++v)
                if (mod.j_power(monos[a], v, order) != ph.column(a * d + v)) ++bad;
        }
        rep.add("random order " + std::to_string(trial + 1) + " reproduces phi", bad == 0, "", "",
                bad == 0 ? "0" : std::to_string(bad) + " columns");
    }
    return rep;
}

Report verify_phi_equivariance(const ConformalModule& mod, int k) {
    Report rep;
    rep.name = "phi equivariance, degree " + std::to_string(k);
    const SparseMat ph = mod.phi(k);
    std::size_t bad = 0, count = 0;
    for (std::size_t i = 0; i < mod.num_generators(); ++i) {
        if (mod.shift(i) != 0) continue;
        const SparseMat X = mod.generator_matrix(i, k);
        ++count;
        if (!(ph * X == X * ph)) ++bad;
    }
    rep.add("phi commutes with all " + std::to_string(count) + " degree-preserving generators", bad == 0, "", "",
            bad == 0 ? "0" : std::to_string(bad) + " generators");
    return rep;
}

}  // namespace confrep
