#pragma once

#include "confrep/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace confrep {

/// Exponent vector of a monomial (or multi-index of a derivative).
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded-lex order: lower total degree first, then lexicographically larger first,
/// so that (2,0) < (1,1) < (0,2).
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors with |alpha| = k over num_vars variables, in graded-lex order.
std::vector<Exponent> monomial_basis(int num_vars, int k);

/// Index of each exponent in monomial_basis(num_vars, k).
std::map<Exponent, std::size_t> monomial_index(int num_vars, int k);

/// How variables are printed: index i is shown as x{i + offset}.
struct VarNames {
    int offset = 1;
};

/// Multivariate polynomial with rational coefficients.
class Poly {
public:
    using Terms = std::map<Exponent, Rat, GradedLex>;

    Poly() = default;
    explicit Poly(int num_vars) : nvars_(num_vars) {}

    static Poly constant(int num_vars, const Rat& c);
    static Poly variable(int num_vars, int i);
    static Poly monomial(const Exponent& e, const Rat& c = Rat(1));

    int num_vars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest total degree, or -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int k) const;
    Rat coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rat& c);

    Poly derivative(int i) const;
    /// Applies the multi-index derivative d^beta.
    Poly derivative(const Exponent& beta) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    std::string str(VarNames names = {}) const;

private:
    void check_vars(const Poly& o, const char* op) const;

    int nvars_ = 0;
    Terms terms_;
};

Exponent operator+(const Exponent& a, const Exponent& b);

}  // namespace confrep
