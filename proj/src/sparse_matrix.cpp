#include "confrep/sparse_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace confrep {

void axpy(SparseVec& dst, const Rat& c, const SparseVec& src) {
    if (c.is_zero()) return;
    for (const auto& [i, v] : src) {
        auto it = dst.find(i);
        if (it == dst.end()) {
            dst.emplace(i, c * v);
        } else {
            it->second += c * v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

SparseMat SparseMat::identity(std::size_t n) {
    SparseMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Rat(1));
    return m;
}

SparseMat SparseMat::diagonal(const std::vector<Rat>& d) {
    SparseMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
}

SparseMat SparseMat::from_columns(std::size_t rows, const std::vector<SparseVec>& cols) {
    SparseMat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) m.set(r, c, v);
    return m;
}

void SparseMat::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("SparseMat: index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

Rat SparseMat::at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rat() : it->second;
}

void SparseMat::set(std::size_t r, std::size_t c, const Rat& v) {
    check_index(r, c);
    if (v.is_zero())
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseMat::add(std::size_t r, std::size_t c, const Rat& v) {
    check_index(r, c);
    if (v.is_zero()) return;
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        data_[r].emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) data_[r].erase(it);
    }
}

std::vector<SparseVec> SparseMat::columns() const {
    std::vector<SparseVec> out(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out[c].emplace(r, v);
    return out;
}

SparseVec SparseMat::column(std::size_t c) const {
    SparseVec out;
    for (std::size_t r = 0; r < rows_; ++r) {
        auto it = data_[r].find(c);
        if (it != data_[r].end()) out.emplace(r, it->second);
    }
    return out;
}

SparseVec SparseMat::apply(const SparseVec& v) const {
    SparseVec out;
    for (std::size_t r = 0; r < rows_; ++r) {
        Rat acc;
        for (const auto& [c, a] : data_[r]) {
            auto it = v.find(c);
            if (it != v.end()) acc += a * it->second;
        }
        if (!acc.is_zero()) out.emplace(r, acc);
    }
    return out;
}

bool SparseMat::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

std::size_t SparseMat::nnz() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

Rat SparseMat::trace() const {
    if (!is_square()) throw std::invalid_argument("SparseMat::trace: non-square matrix");
    Rat t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool SparseMat::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            if (c != r) return false;
    return true;
}

SparseMat SparseMat::transpose() const {
    SparseMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
    return t;
}

SparseMat& SparseMat::operator+=(const SparseMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SparseMat: shape mismatch in +");
    for (std::size_t r = 0; r < rows_; ++r) axpy(data_[r], Rat(1), o.data_[r]);
    return *this;
}

SparseMat& SparseMat::operator-=(const SparseMat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SparseMat: shape mismatch in -");
    for (std::size_t r = 0; r < rows_; ++r) axpy(data_[r], Rat(-1), o.data_[r]);
    return *this;
}

SparseMat& SparseMat::operator*=(const Rat& c) {
    if (c.is_zero()) {
        for (auto& row : data_) row.clear();
        return *this;
    }
    for (auto& row : data_)
        for (auto& [k, v] : row) v *= c;
    return *this;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMat: shape mismatch in *");
    SparseMat out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (const auto& [k, v] : a.data_[r]) axpy(out.data_[r], v, b.data_[k]);
    return out;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::tuple<std::size_t, std::size_t, Rat>> SparseMat::triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, Rat>> out;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.emplace_back(r, c, v);
    return out;
}

std::string SparseMat::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "{";
    bool first = true;
    for (const auto& [r, c, v] : triplets()) {
        os << (first ? "" : ", ") << "(" << r << "," << c << "):" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

SparseMat kron(const SparseMat& a, const SparseMat& b) {
    SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (const auto& [ra, ca, va] : a.triplets())
        for (const auto& [rb, cb, vb] : b.triplets())
            out.set(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
    return out;
}

}  // namespace confrep
