#include "confrep/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace confrep {

// ---------------------------------------------------------------------------
// EchelonBasis

std::pair<SparseVec, SparseVec> EchelonBasis::reduce(const SparseVec& v) const {
    SparseVec rem = v;
    SparseVec combo;
    auto it = rem.begin();
    while (it != rem.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Rat c = it->second;  // leading coefficient of the row is 1
        std::size_t key = it->first;
        axpy(rem, -c, row->second.vec);
        axpy(combo, c, row->second.combo);
        it = rem.upper_bound(key);
    }
    return {std::move(rem), std::move(combo)};
}

bool EchelonBasis::insert(const SparseVec& v) {
    auto [rem, combo] = reduce(v);
    if (rem.empty()) return false;
    std::size_t gen = rows_.size();
    // rem = v - combo, with v the new generator
    SparseVec row_combo;
    row_combo.emplace(gen, Rat(1));
    axpy(row_combo, Rat(-1), combo);
    Rat lead = rem.begin()->second;
    Rat inv = Rat(1) / lead;
    for (auto& [i, x] : rem) x *= inv;
    for (auto& [i, x] : row_combo) x *= inv;
    std::size_t pivot = rem.begin()->first;
    rows_.emplace(pivot, Row{std::move(rem), std::move(row_combo)});
    return true;
}

bool EchelonBasis::contains(const SparseVec& v) const { return reduce(v).first.empty(); }

std::optional<SparseVec> EchelonBasis::coordinates(const SparseVec& v) const {
    auto [rem, combo] = reduce(v);
    if (!rem.empty()) return std::nullopt;
    return combo;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
    EchelonBasis basis;
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

std::size_t rank(const SparseMat& m) {
    std::vector<SparseVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rank_of(rows);
}

std::vector<SparseVec> kernel(const SparseMat& m) {
    // Reduced row-echelon form, keyed by pivot column.
    std::map<std::size_t, SparseVec> piv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVec row = m.row(r);
        for (const auto& [col, prow] : piv) {
            auto it = row.find(col);
            if (it != row.end()) {
                Rat c = it->second;
                axpy(row, -c, prow);
            }
        }
        if (row.empty()) continue;
        std::size_t lead = row.begin()->first;
        Rat inv = Rat(1) / row.begin()->second;
        for (auto& [i, x] : row) x *= inv;
        for (auto& [col, prow] : piv) {
            auto it = prow.find(lead);
            if (it != prow.end()) {
                Rat c = it->second;
                axpy(prow, -c, row);
            }
        }
        piv.emplace(lead, std::move(row));
    }
    std::vector<SparseVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (piv.count(f)) continue;
        SparseVec x;
        x.emplace(f, Rat(1));
        for (const auto& [col, prow] : piv) {
            auto it = prow.find(f);
            if (it != prow.end()) x.emplace(col, -it->second);
        }
        out.push_back(std::move(x));
    }
    return out;
}

DenseMat to_dense(const SparseMat& m) {
    DenseMat d(m.rows(), std::vector<Rat>(m.cols()));
    for (const auto& [r, c, v] : m.triplets()) d[r][c] = v;
    return d;
}

Rat determinant(DenseMat a) {
    const std::size_t n = a.size();
    Rat det(1);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && a[p][j].is_zero()) ++p;
        if (p == n) return Rat();
        if (p != j) {
            std::swap(a[p], a[j]);
            det = -det;
        }
        det *= a[j][j];
        for (std::size_t i = j + 1; i < n; ++i) {
            if (a[i][j].is_zero()) continue;
            Rat u = a[i][j] / a[j][j];
            for (std::size_t k = j; k < n; ++k) a[i][k] -= u * a[j][k];
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::from_roots(const std::vector<std::pair<Rat, std::size_t>>& roots) {
    RatPoly p({Rat(1)});
    for (const auto& [r, mult] : roots) {
        RatPoly lin({-r, Rat(1)});
        for (std::size_t i = 0; i < mult; ++i) p = p * lin;
    }
    return p;
}

Rat RatPoly::eval(const Rat& t) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return RatPoly(std::move(d));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return RatPoly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("RatPoly: division by zero polynomial");
    std::vector<Rat> rem = c_;
    if (rem.size() < d.c_.size()) return {RatPoly(), *this};
    std::vector<Rat> q(rem.size() - d.c_.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat coef = rem[k + d.c_.size() - 1] / d.c_.back();
        q[k] = coef;
        if (coef.is_zero()) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= coef * d.c_[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return *this;
    std::vector<Rat> out = c_;
    Rat inv = Rat(1) / c_.back();
    for (auto& x : out) x *= inv;
    return RatPoly(std::move(out));
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string RatPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rat& c = c_[k];
        if (c.is_zero()) continue;
        Rat mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rat(1)) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::string RatPoly::factored_str(const std::string& var) const {
    if (c_.empty()) return "0";
    auto rr = rational_roots(*this);
    if (rr.residual.degree() > 0) return str(var);
    std::ostringstream os;
    if (leading() != Rat(1)) os << leading() << " ";
    bool first = true;
    // Largest root first reads like the usual factored form.
    for (auto it = rr.roots.rbegin(); it != rr.roots.rend(); ++it) {
        const auto& [root, mult] = *it;
        os << (first ? "" : " ");
        first = false;
        if (root.is_zero())
            os << var;
        else
            os << "(" << var << (root.sign() > 0 ? " - " : " + ") << (root.sign() > 0 ? root : -root) << ")";
        if (mult > 1) os << "^" << mult;
    }
    if (first) os << "1";
    return os.str();
}

// ---------------------------------------------------------------------------
// Characteristic polynomial

RatPoly charpoly(const SparseMat& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
    const std::size_t n = m.rows();
    DenseMat h = to_dense(m);
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t i = j + 1;
        while (i < n && h[i][j].is_zero()) ++i;
        if (i == n) continue;
        if (i != j + 1) {
            std::swap(h[i], h[j + 1]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][j + 1]);
        }
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h[r][j].is_zero()) continue;
            Rat u = h[r][j] / h[j + 1][j];
            for (std::size_t c = 0; c < n; ++c)
                if (!h[j + 1][c].is_zero()) h[r][c] -= u * h[j + 1][c];
            for (std::size_t c = 0; c < n; ++c)
                if (!h[c][r].is_zero()) h[c][j + 1] += u * h[c][r];
        }
    }
    // p_m(t) = (t - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i-1}
    std::vector<RatPoly> p;
    p.emplace_back(std::vector<Rat>{Rat(1)});
    for (std::size_t mm = 1; mm <= n; ++mm) {
        const std::size_t a = mm - 1;  // 0-based index of row/col m
        RatPoly cur = RatPoly({-h[a][a], Rat(1)}) * p[mm - 1];
        Rat prod(1);
        for (std::size_t i = 1; i < mm; ++i) {
            prod *= h[a - i + 1][a - i];
            if (prod.is_zero()) break;
            Rat coef = prod * h[a - i][a];
            if (coef.is_zero()) continue;
            cur = cur - RatPoly({coef}) * p[mm - i - 1];
        }
        p.push_back(std::move(cur));
    }
    return p.back();
}

// ---------------------------------------------------------------------------
// Rational roots

namespace {

std::vector<mpz_class> prime_factors(mpz_class x) {
    std::vector<mpz_class> out;
    if (x < 0) x = -x;
    for (mpz_class d = 2; d * d <= x && d < 2000000; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& x) {
    mpz_class a = x < 0 ? mpz_class(-x) : x;
    std::vector<mpz_class> out{1};
    for (const auto& p : prime_factors(a)) {
        std::size_t base = out.size();
        mpz_class y = a, pk = 1;
        while (y % p == 0) {
            y /= p;
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

}  // namespace

RationalRoots rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    RationalRoots out;
    RatPoly rest = p;
    // Zero roots first.
    std::size_t zero_mult = 0;
    while (rest.degree() > 0 && rest.coeffs()[0].is_zero()) {
        rest = rest.divmod(RatPoly({Rat(), Rat(1)})).first;
        ++zero_mult;
    }
    std::vector<std::pair<Rat, std::size_t>> found;
    if (zero_mult) found.emplace_back(Rat(), zero_mult);
    if (rest.degree() > 0) {
        // Search on the square-free part, whose coefficients stay small.
        RatPoly sqfree = rest.divmod(gcd(rest, rest.derivative())).first.monic();
        mpz_class lcm = 1;
        for (const auto& c : sqfree.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
        mpz_class a0 = (sqfree.coeffs().front() * Rat(mpq_class(lcm))).num();
        mpz_class an = (sqfree.coeffs().back() * Rat(mpq_class(lcm))).num();
        std::set<Rat> candidates;
        for (const auto& num : divisors(a0))
            for (const auto& den : divisors(an)) {
                Rat q(mpq_class(num, den));
                candidates.insert(q);
                candidates.insert(-q);
            }
        for (const auto& q : candidates) {
            if (!sqfree.eval(q).is_zero()) continue;
            RatPoly lin({-q, Rat(1)});
            std::size_t mult = 0;
            for (;;) {
                auto [quo, rem] = rest.divmod(lin);
                if (!rem.is_zero()) break;
                rest = std::move(quo);
                ++mult;
            }
            found.emplace_back(q, mult);
        }
    }
    std::sort(found.begin(), found.end());
    out.roots = std::move(found);
    out.residual = rest.monic();
    return out;
}

}  // namespace confrep
