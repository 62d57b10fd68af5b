#pragma once

#include "confrep/diffop.hpp"
#include "confrep/report.hpp"
#include "confrep/sparse_matrix.hpp"
#include "confrep/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confrep {

/// Index conventions of o(2n) (indices 1..2n) and o(2n+1) (indices 0..2n).
/// The same indices name the variables x_p of the polynomial algebra.
struct Layout {
    Series series = Series::D;
    int n = 0;

    /// Matrix size m, equal to the number of variables.
    int size() const { return series == Series::D ? 2 * n : 2 * n + 1; }
    /// Smallest index: 1 for D, 0 for B.
    int first() const { return series == Series::D ? 1 : 0; }
    int last() const { return 2 * n; }
    std::size_t internal(int p) const;
    /// The matrix unit E_{p,q}.
    SparseMat E(int p, int q) const;
    /// Symmetric form exchanging p and n+p (and fixing 0 for B); o(m) = {X : X^T G + G X = 0}.
    SparseMat form() const;
    VarNames names() const { return {first()}; }
};

/// Layout of o(m): even m is D with n = m/2, odd m is B with n = (m-1)/2.
Layout layout_for_size(int m);

struct BasisElement {
    enum class Kind { Cartan, Positive, Negative };
    std::string label;
    SparseMat mat;
    Kind kind;
    /// Root (zero for Cartan elements).
    WeightVec root;
    int height = 0;
    /// Entry that determines the coordinate of this element.
    std::size_t lead_row = 0, lead_col = 0;
};

/// Basis of o(m): Cartan E_{k,k}-E_{n+k,n+k} first, then positive root vectors by height,
/// then negative root vectors in the same order.
class OrthoBasis {
public:
    explicit OrthoBasis(Layout layout);

    const Layout& layout() const { return layout_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<BasisElement>& elements() const { return elems_; }
    const BasisElement& operator[](std::size_t i) const { return elems_.at(i); }

    /// Coordinates of x, or nothing when x is not in o(m).
    std::optional<std::vector<Rat>> coordinates(const SparseMat& x) const;
    /// As coordinates(), throwing when x lies outside the algebra.
    std::vector<Rat> coords(const SparseMat& x) const;
    SparseMat combine(const std::vector<Rat>& c) const;

    /// Index of the root vector for root, if any.
    std::optional<std::size_t> root_index(const WeightVec& root) const;
    /// Root vectors of the simple roots, in the usual order.
    std::vector<std::size_t> simple_raising() const;
    std::vector<std::size_t> simple_lowering() const;

    bool preserves_form(const SparseMat& x) const;

private:
    Layout layout_;
    std::vector<BasisElement> elems_;
};

OrthoBasis build_ortho(int m);

/// Pairs (a, b) of the quadratic Casimir: omega = sum a*b over all pairs.
std::vector<std::pair<SparseMat, SparseMat>> casimir_pairs(const Layout& layout);

/// The conformal differential operators on the polynomial algebra of a layout.
class ConformalOps {
public:
    ConformalOps(Series series, int n);

    const Layout& layout() const { return layout_; }
    int num_vars() const { return layout_.size(); }
    VarNames names() const { return layout_.names(); }

    Poly x(int p) const;
    DiffOp mul(const Poly& f) const { return DiffOp::multiplication(f); }
    DiffOp d(int p) const;
    DiffOp one() const { return DiffOp::scalar(num_vars(), Rat(1)); }
    DiffOp zero() const { return DiffOp(num_vars()); }
    /// Euler operator sum x_p d_p.
    DiffOp D() const;
    Poly eta() const;
    DiffOp laplacian() const;
    /// J_p = x_p D - eta d_{p*}, where p* is the index paired with p.
    DiffOp J(int p) const;
    DiffOp A(int i, int j) const;
    DiffOp B(int i, int j) const;
    DiffOp C(int i, int j) const;
    /// K_i and K_{n+i}, B series only.
    DiffOp K(int p) const;
    /// Index paired with p by the form: i <-> n+i, 0 <-> 0.
    int dual(int p) const;

private:
    Layout layout_;
};

struct LabeledOp {
    std::string label;
    DiffOp op;
};

/// Generators of the conformal algebra in a fixed order.
std::vector<LabeledOp> build_conformal(int n, Series series);

/// The isomorphism from o(m+2) onto the conformal algebra of the rank-n layout.
class Theta {
public:
    Theta(Series series, int n);

    const ConformalOps& ops() const { return ops_; }
    const OrthoBasis& domain() const { return domain_; }
    /// Defining table: matrices of o(m+2) and their images.
    struct Entry {
        std::string label;
        SparseMat mat;
        DiffOp image;
    };
    const std::vector<Entry>& table() const { return table_; }

    DiffOp operator()(const SparseMat& x) const;
    /// Image of the i-th domain basis element.
    const DiffOp& image(std::size_t i) const { return images_.at(i); }

private:
    ConformalOps ops_;
    OrthoBasis domain_;
    std::vector<Entry> table_;
    std::vector<DiffOp> images_;
};

/// Checks every bracket identity among the conformal generators.
Report verify_bracket_tables(int n, Series series);

/// Checks theta([X,Y]) = [theta X, theta Y] for all domain basis pairs, and injectivity.
Report verify_theta_homomorphism(int n, Series series);

}  // namespace confrep
