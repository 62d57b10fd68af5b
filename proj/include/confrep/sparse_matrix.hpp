#pragma once

#include "confrep/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace confrep {

/// Sparse vector: index -> nonzero value.
using SparseVec = std::map<std::size_t, Rat>;

/// Adds c * src into dst, dropping entries that cancel.
void axpy(SparseVec& dst, const Rat& c, const SparseVec& src);

/// Matrix with exact rational entries stored row-wise; zero entries are never stored.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMat identity(std::size_t n);
    static SparseMat diagonal(const std::vector<Rat>& d);
    /// Matrix whose columns are the given vectors.
    static SparseMat from_columns(std::size_t rows, const std::vector<SparseVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rat& v);
    void add(std::size_t r, std::size_t c, const Rat& v);

    const SparseVec& row(std::size_t r) const { return data_.at(r); }
    std::vector<SparseVec> columns() const;
    SparseVec column(std::size_t c) const;
    SparseVec apply(const SparseVec& v) const;

    bool is_zero() const;
    std::size_t nnz() const;
    Rat trace() const;
    /// True iff the only nonzero entries sit on the diagonal.
    bool is_diagonal() const;

    SparseMat transpose() const;

    SparseMat& operator+=(const SparseMat& o);
    SparseMat& operator-=(const SparseMat& o);
    SparseMat& operator*=(const Rat& c);

    friend SparseMat operator+(SparseMat a, const SparseMat& b) { return a += b; }
    friend SparseMat operator-(SparseMat a, const SparseMat& b) { return a -= b; }
    friend SparseMat operator*(SparseMat a, const Rat& c) { return a *= c; }
    friend SparseMat operator*(const Rat& c, SparseMat a) { return a *= c; }
    friend SparseMat operator-(SparseMat a) { return a *= Rat(-1); }
    friend SparseMat operator*(const SparseMat& a, const SparseMat& b);

    friend bool operator==(const SparseMat& a, const SparseMat& b);

    /// Row-major (row, col, value) triplets.
    std::vector<std::tuple<std::size_t, std::size_t, Rat>> triplets() const;

    std::string str() const;

private:
    void check_index(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

/// a*b - b*a
SparseMat commutator(const SparseMat& a, const SparseMat& b);

/// Kronecker product; index of (i, j) is i * b.rows() + j.
SparseMat kron(const SparseMat& a, const SparseMat& b);

}  // namespace confrep
