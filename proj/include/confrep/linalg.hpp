#pragma once

#include "confrep/sparse_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace confrep {

/// Incrementally maintained row-echelon basis of a subspace of Q^N.
/// Every stored row also records its expression in terms of the vectors that were
/// accepted by insert(), so coordinates with respect to those vectors can be recovered.
class EchelonBasis {
public:
    /// Reduces v against the basis. Returns true and records v (as generator number
    /// rank()-1) when v is independent of what is already stored.
    bool insert(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    /// Coordinates of v in terms of the accepted generators, if v lies in the span.
    std::optional<SparseVec> coordinates(const SparseVec& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        SparseVec vec;    // leading entry normalized to 1
        SparseVec combo;  // vec as a combination of accepted generators
    };
    /// Returns the remainder and the combination c such that v = remainder + sum c_g gen_g.
    std::pair<SparseVec, SparseVec> reduce(const SparseVec& v) const;

    std::map<std::size_t, Row> rows_;  // keyed by pivot index
};

std::size_t rank_of(const std::vector<SparseVec>& vectors);
std::size_t rank(const SparseMat& m);

/// Basis of the null space {x : m x = 0}.
std::vector<SparseVec> kernel(const SparseMat& m);

/// Dense square matrix utilities.
using DenseMat = std::vector<std::vector<Rat>>;
DenseMat to_dense(const SparseMat& m);
/// Determinant by exact Gaussian elimination.
Rat determinant(DenseMat a);

/// Univariate polynomial with rational coefficients, coefficient i multiplies t^i.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);

    /// prod (t - root)^mult
    static RatPoly from_roots(const std::vector<std::pair<Rat, std::size_t>>& roots);

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat leading() const { return c_.empty() ? Rat() : c_.back(); }
    Rat eval(const Rat& t) const;
    RatPoly derivative() const;

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    RatPoly monic() const;

    /// e.g. "t^3 - 2*t + 1/2"
    std::string str(const std::string& var = "t") const;
    /// e.g. "(t - 1)^9 (t + 1)^6 (t + 3)", using rational roots; falls back to str().
    std::string factored_str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

RatPoly gcd(RatPoly a, RatPoly b);

/// Monic characteristic polynomial det(t I - m), via similarity reduction to Hessenberg form.
RatPoly charpoly(const SparseMat& m);

/// Rational roots with multiplicities, in increasing order; the residual factor without
/// rational roots is returned separately (constant 1 when the polynomial splits over Q).
struct RationalRoots {
    std::vector<std::pair<Rat, std::size_t>> roots;
    RatPoly residual;
};
RationalRoots rational_roots(const RatPoly& p);

}  // namespace confrep
