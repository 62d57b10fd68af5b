#include "confrep/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace confrep {

namespace {

// Product of binomial coefficients C(beta_i, delta_i).
Rat multi_binomial(const Exponent& beta, const Exponent& delta) {
    Rat out(1);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        long num = 1, den = 1;
        for (int j = 0; j < delta[i]; ++j) {
            num *= beta[i] - j;
            den *= j + 1;
        }
        out *= Rat(num, den);
    }
    return out;
}

// All delta with 0 <= delta <= beta componentwise.
void sub_indices(const Exponent& beta, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
    if (pos == beta.size()) {
        out.push_back(cur);
        return;
    }
    for (int d = 0; d <= beta[pos]; ++d) {
        cur[pos] = d;
        sub_indices(beta, pos + 1, cur, out);
    }
}

}  // namespace

DiffOp DiffOp::multiplication(const Poly& f) { return term(f, Exponent(f.num_vars(), 0)); }

DiffOp DiffOp::scalar(int num_vars, const Rat& c) { return multiplication(Poly::constant(num_vars, c)); }

DiffOp DiffOp::partial(int num_vars, int i) {
    if (i < 0 || i >= num_vars) throw std::out_of_range("DiffOp::partial: index out of range");
    Exponent beta(num_vars, 0);
    beta[i] = 1;
    return term(Poly::constant(num_vars, Rat(1)), beta);
}

DiffOp DiffOp::term(const Poly& f, const Exponent& beta) {
    DiffOp d(f.num_vars());
    d.add_term(beta, f);
    return d;
}

int DiffOp::order() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

Poly DiffOp::coefficient(const Exponent& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? Poly(nvars_) : it->second;
}

void DiffOp::add_term(const Exponent& beta, const Poly& f) {
    if (static_cast<int>(beta.size()) != nvars_ || f.num_vars() != nvars_)
        throw std::invalid_argument("DiffOp: variable-count mismatch");
    if (f.is_zero()) return;
    auto it = terms_.find(beta);
    if (it == terms_.end()) {
        terms_.emplace(beta, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<Poly> DiffOp::vector_field_components() const {
    std::vector<Poly> f(nvars_, Poly(nvars_));
    for (const auto& [beta, c] : terms_) {
        if (total_degree(beta) != 1) throw std::invalid_argument("DiffOp: not a vector field: " + str());
        for (int i = 0; i < nvars_; ++i)
            if (beta[i] == 1) f[i] = c;
    }
    return f;
}

Poly DiffOp::apply(const Poly& f) const {
    if (f.num_vars() != nvars_) throw std::invalid_argument("DiffOp::apply: variable-count mismatch");
    Poly out(nvars_);
    for (const auto& [beta, c] : terms_) out += c * f.derivative(beta);
    return out;
}

void DiffOp::check_vars(const DiffOp& o, const char* op) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument(std::string("DiffOp: variable-count mismatch in ") + op);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_vars(o, "+");
    for (const auto& [beta, c] : o.terms_) add_term(beta, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_vars(o, "-");
    for (const auto& [beta, c] : o.terms_) add_term(beta, -c);
    return *this;
}

DiffOp& DiffOp::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [beta, f] : terms_) f *= c;
    return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    a.check_vars(b, "composition");
    DiffOp out(a.nvars_);
    // (f d^beta)(g d^gamma) = f * sum_{delta <= beta} C(beta, delta) d^delta(g) d^{beta - delta + gamma}
    for (const auto& [beta, f] : a.terms_) {
        std::vector<Exponent> deltas;
        Exponent cur(a.nvars_, 0);
        sub_indices(beta, 0, cur, deltas);
        for (const auto& delta : deltas) {
            Exponent rest(beta);
            for (int i = 0; i < a.nvars_; ++i) rest[i] -= delta[i];
            Rat binom = multi_binomial(beta, delta);
            for (const auto& [gamma, g] : b.terms_) {
                Poly dg = g.derivative(delta);
                if (dg.is_zero()) continue;
                out.add_term(rest + gamma, binom * (f * dg));
            }
        }
    }
    return out;
}

DiffOp bracket(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

std::string DiffOp::str(VarNames names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [beta, f] : terms_) {
        os << (first ? "" : " + ");
        first = false;
        bool bare = total_degree(beta) == 0;
        os << (bare ? "" : "(") << f.str(names) << (bare ? "" : ")");
        for (int i = 0; i < nvars_; ++i) {
            if (beta[i] == 0) continue;
            os << "*d" << (i + names.offset);
            if (beta[i] > 1) os << "^" << beta[i];
        }
    }
    return os.str();
}

SparseVec DiffOpIndexer::operator()(const DiffOp& op) {
    SparseVec out;
    for (const auto& [beta, f] : op.terms())
        for (const auto& [alpha, c] : f.terms()) {
            auto key = std::make_pair(beta, alpha);
            auto it = index_.find(key);
            if (it == index_.end()) it = index_.emplace(key, index_.size()).first;
            out.emplace(it->second, c);
        }
    return out;
}

}  // namespace confrep
