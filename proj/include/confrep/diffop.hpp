#pragma once

#include "confrep/poly.hpp"
#include "confrep/sparse_matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace confrep {

/// Differential operator with polynomial coefficients, kept in normal order:
/// sum over multi-indices beta of coefficient(beta) * d^beta, coefficients to the left.
class DiffOp {
public:
    using Terms = std::map<Exponent, Poly, GradedLex>;

    DiffOp() = default;
    explicit DiffOp(int num_vars) : nvars_(num_vars) {}

    /// Multiplication operator by f.
    static DiffOp multiplication(const Poly& f);
    static DiffOp scalar(int num_vars, const Rat& c);
    /// d/dx_i
    static DiffOp partial(int num_vars, int i);
    /// f * d^beta
    static DiffOp term(const Poly& f, const Exponent& beta);

    int num_vars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest derivative order present, -1 for the zero operator.
    int order() const;
    Poly coefficient(const Exponent& beta) const;

    void add_term(const Exponent& beta, const Poly& f);

    /// Coefficients f_i of a vector field sum f_i d_i; throws unless the operator is
    /// purely first order.
    std::vector<Poly> vector_field_components() const;

    Poly apply(const Poly& f) const;

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp& operator*=(const Rat& c);

    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator-(DiffOp a) { return a *= Rat(-1); }
    friend DiffOp operator*(DiffOp a, const Rat& c) { return a *= c; }
    friend DiffOp operator*(const Rat& c, DiffOp a) { return a *= c; }
    /// Composition a∘b, normal-ordered through the Leibniz rule.
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    std::string str(VarNames names = {}) const;

private:
    void check_vars(const DiffOp& o, const char* op) const;

    int nvars_ = 0;
    Terms terms_;
};

/// a∘b - b∘a
DiffOp bracket(const DiffOp& a, const DiffOp& b);

/// Assigns stable indices to (derivative, monomial) pairs so operators become vectors.
class DiffOpIndexer {
public:
    SparseVec operator()(const DiffOp& op);

private:
    std::map<std::pair<Exponent, Exponent>, std::size_t> index_;
};

}  // namespace confrep
