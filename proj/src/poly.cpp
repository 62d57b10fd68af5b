#include "confrep/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confrep {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

namespace {

void enumerate(int num_vars, int pos, int remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (pos == num_vars - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate(num_vars, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Exponent> monomial_basis(int num_vars, int k) {
    if (k < 0) throw std::invalid_argument("monomial_basis: negative degree");
    if (num_vars <= 0) throw std::invalid_argument("monomial_basis: need at least one variable");
    std::vector<Exponent> out;
    Exponent cur(num_vars, 0);
    enumerate(num_vars, 0, k, cur, out);
    return out;
}

std::map<Exponent, std::size_t> monomial_index(int num_vars, int k) {
    std::map<Exponent, std::size_t> idx;
    auto basis = monomial_basis(num_vars, k);
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
    return idx;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Exponent: length mismatch");
    Exponent out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Poly Poly::constant(int num_vars, const Rat& c) {
    Poly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

Poly Poly::variable(int num_vars, int i) {
    if (i < 0 || i >= num_vars) throw std::out_of_range("Poly::variable: index out of range");
    Exponent e(num_vars, 0);
    e[i] = 1;
    return monomial(e);
}

Poly Poly::monomial(const Exponent& e, const Rat& c) {
    Poly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

bool Poly::is_homogeneous(int k) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != k) return false;
    return true;
}

Rat Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat() : it->second;
}

void Poly::add_term(const Exponent& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("Poly: exponent length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("Poly::derivative: index out of range");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d(e);
        d[i] -= 1;
        out.add_term(d, c * Rat(e[i]));
    }
    return out;
}

Poly Poly::derivative(const Exponent& beta) const {
    if (static_cast<int>(beta.size()) != nvars_) throw std::invalid_argument("Poly::derivative: multi-index length mismatch");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Rat factor = c;
        Exponent d(e);
        bool vanishes = false;
        for (int i = 0; i < nvars_ && !vanishes; ++i) {
            if (beta[i] > e[i]) {
                vanishes = true;
                break;
            }
            for (int j = 0; j < beta[i]; ++j) factor *= Rat(e[i] - j);
            d[i] -= beta[i];
        }
        if (!vanishes) out.add_term(d, factor);
    }
    return out;
}

void Poly::check_vars(const Poly& o, const char* op) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument(std::string("Poly: variable-count mismatch in ") + op);
}

Poly& Poly::operator+=(const Poly& o) {
    check_vars(o, "+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_vars(o, "-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b, "*");
    Poly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string Poly::str(VarNames names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool constant = total_degree(e) == 0;
        Rat mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == Rat(1);
        if (!unit || constant) os << mag;
        bool need_star = !unit;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << (need_star ? "*" : "") << "x" << (i + names.offset);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace confrep
