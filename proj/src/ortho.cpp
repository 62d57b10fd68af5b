#include "confrep/ortho.hpp"

#include "confrep/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace confrep {

namespace {

std::string unit_label(int p, int q) {
    std::ostringstream os;
    os << "E_{" << p << "," << q << "}";
    return os.str();
}

std::string pair_label(int p, int q, int r, int s) { return unit_label(p, q) + "-" + unit_label(r, s); }

std::string idx_label(const char* name, int i, int j) {
    std::ostringstream os;
    os << name << "_{" << i << "," << j << "}";
    return os.str();
}

std::string idx_label(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

SparseVec flatten(const SparseMat& m) {
    SparseVec out;
    for (const auto& [r, c, v] : m.triplets()) out.emplace(r * m.cols() + c, v);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Layout

std::size_t Layout::internal(int p) const {
    if (p < first() || p > last())
        throw std::out_of_range("index " + std::to_string(p) + " outside " + std::to_string(first()) + ".." +
                                std::to_string(last()));
    return static_cast<std::size_t>(p - first());
}

SparseMat Layout::E(int p, int q) const {
    SparseMat m(size(), size());
    m.set(internal(p), internal(q), Rat(1));
    return m;
}

SparseMat Layout::form() const {
    SparseMat g(size(), size());
    for (int i = 1; i <= n; ++i) {
        g.set(internal(i), internal(n + i), Rat(1));
        g.set(internal(n + i), internal(i), Rat(1));
    }
    if (series == Series::B) g.set(internal(0), internal(0), Rat(1));
    return g;
}

Layout layout_for_size(int m) {
    if (m < 3) throw std::invalid_argument("o(m) needs m >= 3, got " + std::to_string(m));
    return m % 2 == 0 ? Layout{Series::D, m / 2} : Layout{Series::B, (m - 1) / 2};
}

// ---------------------------------------------------------------------------
// OrthoBasis

OrthoBasis::OrthoBasis(Layout layout) : layout_(layout) {
    const int n = layout.n;
    const Series s = layout.series;
    if (n < 1 || (s == Series::D && n < 2)) throw std::invalid_argument("OrthoBasis: rank too small");
    const auto& L = layout_;
    auto eps = [&](int i) { return WeightVec::unit(s, n, i); };
    std::vector<Rat> coroot(n);
    for (int i = 1; i <= n; ++i) coroot[i - 1] = s == Series::D ? Rat(n - i) : Rat(n - i + 1);
    const WeightVec height_vec(s, coroot);
    auto height = [&](const WeightVec& r) { return inner(r, height_vec).to_long(); };
    auto element = [&](BasisElement::Kind kind, const WeightVec& root, int p, int q, int r, int t) {
        BasisElement e;
        e.label = pair_label(p, q, r, t);
        e.mat = L.E(p, q) - L.E(r, t);
        e.kind = kind;
        e.root = root;
        e.height = kind == BasisElement::Kind::Cartan ? 0 : static_cast<int>(height(root));
        e.lead_row = L.internal(p);
        e.lead_col = L.internal(q);
        return e;
    };

    for (int k = 1; k <= n; ++k)
        elems_.push_back(element(BasisElement::Kind::Cartan, WeightVec::zero(s, n), k, k, n + k, n + k));

    std::vector<BasisElement> pos, neg;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pos.push_back(element(BasisElement::Kind::Positive, eps(i) - eps(j), i, j, n + j, n + i));
            pos.push_back(element(BasisElement::Kind::Positive, eps(i) + eps(j), i, n + j, j, n + i));
            neg.push_back(element(BasisElement::Kind::Negative, eps(j) - eps(i), j, i, n + i, n + j));
            neg.push_back(element(BasisElement::Kind::Negative, Rat(-1) * (eps(i) + eps(j)), n + j, i, n + i, j));
        }
    if (s == Series::B)
        for (int i = 1; i <= n; ++i) {
            pos.push_back(element(BasisElement::Kind::Positive, eps(i), 0, n + i, i, 0));
            neg.push_back(element(BasisElement::Kind::Negative, Rat(-1) * eps(i), 0, i, n + i, 0));
        }
    auto by_height = [](const BasisElement& a, const BasisElement& b) { return std::abs(a.height) < std::abs(b.height); };
    std::stable_sort(pos.begin(), pos.end(), by_height);
    std::stable_sort(neg.begin(), neg.end(), by_height);
    for (auto& e : pos) elems_.push_back(std::move(e));
    for (auto& e : neg) elems_.push_back(std::move(e));
}

std::optional<std::vector<Rat>> OrthoBasis::coordinates(const SparseMat& x) const {
    if (x.rows() != static_cast<std::size_t>(layout_.size()) || x.cols() != x.rows()) return std::nullopt;
    std::vector<Rat> c(elems_.size());
    SparseMat rebuilt(x.rows(), x.cols());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        const auto& e = elems_[i];
        c[i] = x.at(e.lead_row, e.lead_col) / e.mat.at(e.lead_row, e.lead_col);
        if (!c[i].is_zero()) rebuilt += c[i] * e.mat;
    }
    if (!(rebuilt == x)) return std::nullopt;
    return c;
}

std::vector<Rat> OrthoBasis::coords(const SparseMat& x) const {
    auto c = coordinates(x);
    if (!c) throw std::invalid_argument("matrix is not in o(" + std::to_string(layout_.size()) + ")");
    return *c;
}

SparseMat OrthoBasis::combine(const std::vector<Rat>& c) const {
    if (c.size() != elems_.size()) throw std::invalid_argument("OrthoBasis::combine: size mismatch");
    SparseMat out(layout_.size(), layout_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) out += c[i] * elems_[i].mat;
    return out;
}

std::optional<std::size_t> OrthoBasis::root_index(const WeightVec& root) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i].kind != BasisElement::Kind::Cartan && elems_[i].root == root) return i;
    return std::nullopt;
}

std::vector<std::size_t> OrthoBasis::simple_raising() const {
    std::vector<std::size_t> out;
    for (const auto& a : simple_roots(layout_.series, layout_.n)) out.push_back(*root_index(a));
    return out;
}

std::vector<std::size_t> OrthoBasis::simple_lowering() const {
    std::vector<std::size_t> out;
    for (const auto& a : simple_roots(layout_.series, layout_.n)) out.push_back(*root_index(Rat(-1) * a));
    return out;
}

bool OrthoBasis::preserves_form(const SparseMat& x) const {
    const SparseMat g = layout_.form();
    return (x.transpose() * g + g * x).is_zero();
}

OrthoBasis build_ortho(int m) { return OrthoBasis(layout_for_size(m)); }

std::vector<std::pair<SparseMat, SparseMat>> casimir_pairs(const Layout& L) {
    const int n = L.n;
    std::vector<std::pair<SparseMat, SparseMat>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            SparseMat a = L.E(i, n + j) - L.E(j, n + i);
            SparseMat b = L.E(n + j, i) - L.E(n + i, j);
            out.emplace_back(a, b);
            out.emplace_back(b, a);
        }
    if (L.series == Series::B)
        for (int i = 1; i <= n; ++i) {
            SparseMat a = L.E(0, i) - L.E(n + i, 0);
            SparseMat b = L.E(i, 0) - L.E(0, n + i);
            out.emplace_back(a, b);
            out.emplace_back(b, a);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.emplace_back(L.E(i, j) - L.E(n + j, n + i), L.E(j, i) - L.E(n + i, n + j));
    return out;
}

// ---------------------------------------------------------------------------
// Conformal operators

ConformalOps::ConformalOps(Series series, int n) : layout_{series, n} {
    if (n < 1 || (series == Series::D && n < 2)) throw std::invalid_argument("conformal algebra: rank too small");
}

Poly ConformalOps::x(int p) const { return Poly::variable(num_vars(), static_cast<int>(layout_.internal(p))); }

DiffOp ConformalOps::d(int p) const { return DiffOp::partial(num_vars(), static_cast<int>(layout_.internal(p))); }

DiffOp ConformalOps::D() const {
    DiffOp out = zero();
    for (int p = layout_.first(); p <= layout_.last(); ++p) out += mul(x(p)) * d(p);
    return out;
}

Poly ConformalOps::eta() const {
    const int n = layout_.n;
    Poly out(num_vars());
    for (int i = 1; i <= n; ++i) out += x(i) * x(n + i);
    if (layout_.series == Series::B) out += Rat(1, 2) * x(0) * x(0);
    return out;
}

DiffOp ConformalOps::laplacian() const {
    const int n = layout_.n;
    DiffOp out = zero();
    const Rat c = layout_.series == Series::B ? Rat(2) : Rat(1);
    for (int r = 1; r <= n; ++r) out += c * (d(r) * d(n + r));
    if (layout_.series == Series::B) out += d(0) * d(0);
    return out;
}

int ConformalOps::dual(int p) const {
    const int n = layout_.n;
    layout_.internal(p);
    if (p == 0) return 0;
    return p <= n ? n + p : p - n;
}

DiffOp ConformalOps::J(int p) const { return mul(x(p)) * D() - mul(eta()) * d(dual(p)); }

DiffOp ConformalOps::A(int i, int j) const {
    const int n = layout_.n;
    return mul(x(i)) * d(j) - mul(x(n + j)) * d(n + i);
}

DiffOp ConformalOps::B(int i, int j) const {
    const int n = layout_.n;
    return mul(x(i)) * d(n + j) - mul(x(j)) * d(n + i);
}

DiffOp ConformalOps::C(int i, int j) const {
    const int n = layout_.n;
    return mul(x(n + i)) * d(j) - mul(x(n + j)) * d(i);
}

DiffOp ConformalOps::K(int p) const {
    if (layout_.series != Series::B) throw std::invalid_argument("K_p exists only for the B series");
    const int n = layout_.n;
    if (p < 1 || p > 2 * n) throw std::out_of_range("K index out of range");
    if (p <= n) return mul(x(0)) * d(p) - mul(x(n + p)) * d(0);
    return mul(x(0)) * d(p) - mul(x(p - n)) * d(0);
}

std::vector<LabeledOp> build_conformal(int n, Series series) {
    ConformalOps ops(series, n);
    const auto& L = ops.layout();
    std::vector<LabeledOp> out;
    out.push_back({"D", ops.D()});
    for (int p = L.first(); p <= L.last(); ++p) out.push_back({idx_label("d", p), ops.d(p)});
    for (int p = L.first(); p <= L.last(); ++p) out.push_back({idx_label("J", p), ops.J(p)});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back({idx_label("A", i, j), ops.A(i, j)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({idx_label("B", i, j), ops.B(i, j)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({idx_label("C", i, j), ops.C(i, j)});
    if (series == Series::B)
        for (int p = 1; p <= 2 * n; ++p) out.push_back({idx_label("K", p), ops.K(p)});
    return out;
}

// ---------------------------------------------------------------------------
// Theta

Theta::Theta(Series series, int n) : ops_(series, n), domain_(Layout{series, n + 1}) {
    const Layout& L = domain_.layout();
    const int N = n + 1;
    auto add = [&](int p, int q, int r, int s, DiffOp img) {
        table_.push_back({pair_label(p, q, r, s), L.E(p, q) - L.E(r, s), std::move(img)});
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add(i, j, N + j, N + i, ops_.A(i, j));
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s) {
            add(r, N + s, s, N + r, ops_.B(r, s));
            add(N + r, s, N + s, r, ops_.C(r, s));
        }
    add(N, N, 2 * N, 2 * N, -ops_.D());
    for (int i = 1; i <= n; ++i) {
        add(N, i, N + i, 2 * N, ops_.d(i));
        add(i, 2 * N, N, N + i, -ops_.d(n + i));
        add(i, N, 2 * N, i + N, -ops_.J(i));
        add(2 * N, i, N + i, N, ops_.J(n + i));
    }
    if (series == Series::B) {
        // K_s and d_0 enter with these signs so that theta is a homomorphism with J_0 as below.
        for (int i = 1; i <= n; ++i) {
            add(0, i, N + i, 0, -ops_.K(i));
            add(0, N + i, i, 0, -ops_.K(n + i));
        }
        add(0, 2 * N, N, 0, ops_.d(0));
        add(0, N, 2 * N, 0, ops_.J(0));
    }

    EchelonBasis eb;
    for (const auto& e : table_)
        if (!eb.insert(flatten(e.mat))) throw std::logic_error("theta table is linearly dependent");
    if (eb.rank() != domain_.size()) throw std::logic_error("theta table does not span the domain");
    for (const auto& be : domain_.elements()) {
        auto c = eb.coordinates(flatten(be.mat));
        if (!c) throw std::logic_error("domain basis element outside the theta table span");
        DiffOp img = ops_.zero();
        for (const auto& [g, v] : *c) img += v * table_[g].image;
        images_.push_back(std::move(img));
    }
}

DiffOp Theta::operator()(const SparseMat& x) const {
    auto c = domain_.coordinates(x);
    if (!c) throw std::invalid_argument("theta: matrix outside o(" + std::to_string(domain_.layout().size()) + ")");
    DiffOp out = ops_.zero();
    for (std::size_t i = 0; i < c->size(); ++i)
        if (!(*c)[i].is_zero()) out += (*c)[i] * images_[i];
    return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class BracketChecker {
public:
    BracketChecker(const ConformalOps& ops, Report& r) : ops_(ops), r_(r) {}
    void operator()(const std::string& identity, const DiffOp& lhs, const DiffOp& rhs) {
        const bool ok = lhs == rhs;
        const auto names = ops_.names();
        r_.add(identity, ok, lhs.str(names), rhs.str(names), ok ? "0" : (lhs - rhs).str(names));
    }

private:
    const ConformalOps& ops_;
    Report& r_;
};

std::string ijk(int i, int j, int k) {
    std::ostringstream os;
    os << " (i=" << i << ",j=" << j << ",k=" << k << ")";
    return os.str();
}

std::string ik(int i, int k) {
    std::ostringstream os;
    os << " (i=" << i << ",k=" << k << ")";
    return os.str();
}

std::string ij(int i, int j) {
    std::ostringstream os;
    os << " (i=" << i << ",j=" << j << ")";
    return os.str();
}

Rat delta(int a, int b) { return a == b ? Rat(1) : Rat(0); }

}  // namespace

Report verify_bracket_tables(int n, Series series) {
    ConformalOps ops(series, n);
    Report rep;
    rep.name = "bracket tables " + to_string(series) + " n=" + std::to_string(n);
    BracketChecker check(ops, rep);
    const DiffOp Z = ops.zero();
    const DiffOp Dop = ops.D();
    auto d = [&](int p) { return ops.d(p); };
    auto J = [&](int p) { return ops.J(p); };

    // Translations and special conformal generators commute among themselves.
    for (int p = 1; p <= 2 * n; ++p)
        for (int q = 1; q <= 2 * n; ++q) {
            check("[J_p, J_q] = 0" + ij(p, q), bracket(J(p), J(q)), Z);
            check("[d_p, d_q] = 0" + ij(p, q), bracket(d(p), d(q)), Z);
        }
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            check("[d_k, J_{n+i}] = C_{i,k}" + ik(i, k), bracket(d(k), J(n + i)), ops.C(i, k));
            check("[d_{n+k}, J_i] = B_{i,k}" + ik(i, k), bracket(d(n + k), J(i)), ops.B(i, k));
            check("[d_k, J_i] = delta_{k,i} D + A_{i,k}" + ik(i, k), bracket(d(k), J(i)),
                  delta(k, i) * Dop + ops.A(i, k));
            check("[d_{n+k}, J_{n+i}] = delta_{k,i} D - A_{k,i}" + ik(i, k), bracket(d(n + k), J(n + i)),
                  delta(k, i) * Dop - ops.A(k, i));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                const auto tag = ijk(i, j, k);
                const DiffOp A = ops.A(i, j), B = ops.B(i, j), C = ops.C(i, j);
                check("[d_k, A_{i,j}] = delta_{k,i} d_j" + tag, bracket(d(k), A), delta(k, i) * d(j));
                check("[d_k, B_{i,j}] = delta_{k,i} d_{n+j} - delta_{k,j} d_{n+i}" + tag, bracket(d(k), B),
                      delta(k, i) * d(n + j) - delta(k, j) * d(n + i));
                check("[d_k, C_{i,j}] = 0" + tag, bracket(d(k), C), Z);
                check("[d_{n+k}, A_{i,j}] = -delta_{k,j} d_{n+i}" + tag, bracket(d(n + k), A),
                      -(delta(k, j) * d(n + i)));
                check("[d_{n+k}, B_{i,j}] = 0" + tag, bracket(d(n + k), B), Z);
                check("[d_{n+k}, C_{i,j}] = delta_{k,i} d_j - delta_{k,j} d_i" + tag, bracket(d(n + k), C),
                      delta(k, i) * d(j) - delta(k, j) * d(i));
                check("[J_k, A_{i,j}] = -delta_{k,j} J_i" + tag, bracket(J(k), A), -(delta(k, j) * J(i)));
                check("[J_k, B_{i,j}] = 0" + tag, bracket(J(k), B), Z);
                check("[J_k, C_{i,j}] = delta_{k,i} J_{n+j} - delta_{k,j} J_{n+i}" + tag, bracket(J(k), C),
                      delta(k, i) * J(n + j) - delta(k, j) * J(n + i));
                check("[J_{n+k}, A_{i,j}] = delta_{k,i} J_{n+j}" + tag, bracket(J(n + k), A),
                      delta(k, i) * J(n + j));
                check("[J_{n+k}, B_{i,j}] = delta_{k,i} J_j - delta_{k,j} J_i" + tag, bracket(J(n + k), B),
                      delta(k, i) * J(j) - delta(k, j) * J(i));
                check("[J_{n+k}, C_{i,j}] = 0" + tag, bracket(J(n + k), C), Z);
            }
    for (int k = 1; k <= n; ++k) {
        const std::string tag = " (k=" + std::to_string(k) + ")";
        check("[D, J_k] = J_k" + tag, bracket(Dop, J(k)), J(k));
        check("[D, J_{n+k}] = J_{n+k}" + tag, bracket(Dop, J(n + k)), J(n + k));
        check("[d_k, D] = d_k" + tag, bracket(d(k), Dop), d(k));
        check("[d_{n+k}, D] = d_{n+k}" + tag, bracket(d(n + k), Dop), d(n + k));
    }

    if (series == Series::B) {
        auto K = [&](int p) { return ops.K(p); };
        check("[d_0, J_0] = D", bracket(d(0), J(0)), Dop);
        for (int i = 1; i <= n; ++i) {
            const std::string tag = " (i=" + std::to_string(i) + ")";
            check("[d_0, J_{n+i}] = -K_i" + tag, bracket(d(0), J(n + i)), -K(i));
            check("[d_0, J_i] = -K_{n+i}" + tag, bracket(d(0), J(i)), -K(n + i));
            check("[d_0, K_i] = d_i" + tag, bracket(d(0), K(i)), d(i));
            check("[d_0, K_{n+i}] = d_{n+i}" + tag, bracket(d(0), K(n + i)), d(n + i));
            check("[d_i, J_0] = K_i" + tag, bracket(d(i), J(0)), K(i));
            check("[d_{n+i}, J_0] = K_{n+i}" + tag, bracket(d(n + i), J(0)), K(n + i));
            check("[J_0, K_i] = J_{n+i}" + tag, bracket(J(0), K(i)), J(n + i));
            check("[J_0, K_{n+i}] = J_i" + tag, bracket(J(0), K(n + i)), J(i));
            for (int j = 1; j <= n; ++j) {
                const auto t = ij(i, j);
                check("[d_i, K_j] = 0" + t, bracket(d(i), K(j)), Z);
                check("[d_{n+i}, K_{n+j}] = 0" + t, bracket(d(n + i), K(n + j)), Z);
                check("[d_i, K_{n+j}] = -delta_{i,j} d_0" + t, bracket(d(i), K(n + j)), -(delta(i, j) * d(0)));
                check("[d_{n+i}, K_j] = -delta_{i,j} d_0" + t, bracket(d(n + i), K(j)), -(delta(i, j) * d(0)));
                check("[J_i, K_j] = -delta_{i,j} J_0" + t, bracket(J(i), K(j)), -(delta(i, j) * J(0)));
                check("[J_{n+i}, K_{n+j}] = -delta_{i,j} J_0" + t, bracket(J(n + i), K(n + j)),
                      -(delta(i, j) * J(0)));
                check("[J_i, K_{n+j}] = 0" + t, bracket(J(i), K(n + j)), Z);
                check("[J_{n+i}, K_j] = 0" + t, bracket(J(n + i), K(j)), Z);
            }
        }
        std::vector<LabeledOp> rot;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) rot.push_back({idx_label("A", i, j), ops.A(i, j)});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                rot.push_back({idx_label("B", i, j), ops.B(i, j)});
                rot.push_back({idx_label("C", i, j), ops.C(i, j)});
            }
        for (const auto& x : rot) {
            check("[d_0, " + x.label + "] = 0", bracket(d(0), x.op), Z);
            check("[J_0, " + x.label + "] = 0", bracket(J(0), x.op), Z);
        }

        // The generators without K, d_0, J_0 close under the bracket.
        std::vector<LabeledOp> sub;
        for (auto& g : build_conformal(n, series))
            if (g.label[0] != 'K' && g.label != "d_0" && g.label != "J_0") sub.push_back(std::move(g));
        DiffOpIndexer index;
        EchelonBasis span;
        for (const auto& g : sub) span.insert(index(g.op));
        std::size_t outside = 0;
        for (const auto& a : sub)
            for (const auto& b : sub)
                if (!span.contains(index(bracket(a.op, b.op)))) ++outside;
        rep.add("subalgebra without d_0, J_0, K closes under the bracket", outside == 0, "", "",
                outside == 0 ? "0" : std::to_string(outside) + " brackets outside");
    }

    // The generators are independent and span an algebra of dimension dim o(m+2).
    DiffOpIndexer index;
    std::vector<SparseVec> vecs;
    const auto gens = build_conformal(n, series);
    for (const auto& g : gens) vecs.push_back(index(g.op));
    const std::size_t m2 = static_cast<std::size_t>(ops.layout().size() + 2);
    const std::size_t expect = m2 * (m2 - 1) / 2;
    const std::size_t rk = rank_of(vecs);
    rep.add("generators independent, dimension " + std::to_string(expect), rk == expect && gens.size() == expect,
            std::to_string(rk), std::to_string(expect), rk == expect ? "0" : std::to_string(expect - rk));
    return rep;
}

Report verify_theta_homomorphism(int n, Series series) {
    Theta theta(series, n);
    const auto& dom = theta.domain();
    const auto names = theta.ops().names();
    Report rep;
    rep.name = "theta homomorphism " + to_string(series) + " n=" + std::to_string(n);
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j) {
            DiffOp lhs = theta(commutator(dom[i].mat, dom[j].mat));
            DiffOp rhs = bracket(theta.image(i), theta.image(j));
            const bool ok = lhs == rhs;
            rep.add("theta([" + dom[i].label + ", " + dom[j].label + "])", ok, lhs.str(names), rhs.str(names),
                    ok ? "0" : (lhs - rhs).str(names));
        }
    DiffOpIndexer index;
    std::vector<SparseVec> vecs;
    for (std::size_t i = 0; i < dom.size(); ++i) vecs.push_back(index(theta.image(i)));
    const std::size_t rk = rank_of(vecs);
    rep.add("theta images linearly independent", rk == dom.size(), std::to_string(rk), std::to_string(dom.size()),
            rk == dom.size() ? "0" : std::to_string(dom.size() - rk));
    return rep;
}

}  // namespace confrep
