#pragma once

#include "confrep/diffop.hpp"
#include "confrep/irrep.hpp"
#include "confrep/linalg.hpp"
#include "confrep/ortho.hpp"
#include "confrep/report.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confrep {

/// Matrix with polynomial entries, stored as coefficient matrices per monomial.
using PolyMatrix = std::map<Exponent, SparseMat, GradedLex>;

/// Element field + ortho + central * sum E_{p,p} of the mixed product, where ortho has
/// coefficients in o(m) and central is a polynomial.
struct ExtendedOp {
    DiffOp field;
    PolyMatrix ortho;
    Poly central;

    /// The full gl(m, A) part ortho + central * Id.
    PolyMatrix gl() const;
    /// Splits a gl part into its o(m) and scalar components; nothing if the symmetric
    /// component is not a multiple of the identity.
    static std::optional<ExtendedOp> from_gl(const Layout& layout, DiffOp field, const PolyMatrix& gl);

    std::string str(const Layout& layout) const;
    friend bool operator==(const ExtendedOp& a, const ExtendedOp& b);
};

/// [d1 + A1, d2 + A2] = [d1, d2] + [A1, A2] + d1(A2) - d2(A1).
ExtendedOp bracket(const Layout& layout, const ExtendedOp& a, const ExtendedOp& b);

/// General formula: sum f_q d_q  ->  sum f_q d_q + sum_{p,q} d_p(f_q) E_{p,q}.
/// Throws when the result leaves o(m, A) + A sum E_{p,p}.
ExtendedOp shen_formula(const Layout& layout, const DiffOp& xi);

/// The embedding restricted to the conformal algebra.
class ShenEmbedding {
public:
    ShenEmbedding(Series series, int n);

    const ConformalOps& ops() const { return ops_; }
    const Layout& layout() const { return ops_.layout(); }
    /// Throws std::invalid_argument when xi is not in the conformal span.
    ExtendedOp operator()(const DiffOp& xi) const;
    bool in_span(const DiffOp& xi) const;

private:
    ConformalOps ops_;
    mutable DiffOpIndexer index_;
    EchelonBasis span_;
};

ExtendedOp shen_embed(Series series, int n, const DiffOp& xi);

/// Closed-form images of the conformal generators.
struct ShenFixture {
    std::string label;
    DiffOp xi;
    ExtendedOp expected;
};
/// With inject_fault, one sign in the image of J_1 is flipped.
std::vector<ShenFixture> shen_closed_forms(Series series, int n, bool inject_fault = false);

/// Homomorphism over all generator pairs, containment, and the closed forms.
Report verify_shen_monomorphism(int n, Series series, bool inject_fault = false);

/// A (x) M for M = V(mu), with the o(m+2) action through the embedding and theta, and
/// central charge b. Degree-k slices have basis index mono * dim M + v, with mono the
/// position in monomial_basis(m, k).
class ConformalModule {
public:
    ConformalModule(IrrepData v, Rat b, std::size_t cap = 20000);

    const IrrepData& irrep() const { return v_; }
    const Rat& b() const { return b_; }
    const Layout& layout() const { return shen_.layout(); }
    const ConformalOps& ops() const { return shen_.ops(); }
    const Theta& theta() const { return theta_; }
    const ShenEmbedding& shen() const { return shen_; }
    int num_vars() const { return layout().size(); }

    std::size_t slice_dim(int k) const;
    const std::vector<Exponent>& monomials(int k) const;
    std::size_t mono_index(const Exponent& e) const;
    std::string basis_label(int k, std::size_t i) const;

    /// An extended operator with its o(m) coefficients already represented on M.
    struct Compiled {
        DiffOp field;
        Poly central;
        std::vector<std::pair<Exponent, SparseMat>> ortho_t;  // transposed action matrices
        int shift = 0;
    };
    Compiled compile(const ExtendedOp& op) const;

    /// Image of an element of slice k under an extended operator, split by degree.
    std::map<int, SparseVec> apply(const ExtendedOp& op, int k, const SparseVec& w) const;
    std::map<int, SparseVec> apply(const Compiled& op, int k, const SparseVec& w) const;
    /// Matrix of op from slice `from` to slice `to`.
    SparseMat action(const ExtendedOp& op, int from, int to) const;
    SparseMat action(const Compiled& op, int from, int to) const;

    /// Number of o(m+2) basis elements and their images under the embedding.
    std::size_t num_generators() const { return theta_.domain().size(); }
    const ExtendedOp& generator(std::size_t i) const { return gens_.at(i); }
    /// Degree shift of generator i: -1, 0 or +1.
    int shift(std::size_t i) const { return shifts_.at(i); }
    /// Matrix of generator i from slice k to slice k + shift(i).
    SparseMat generator_matrix(std::size_t i, int k) const;

    /// Action of J_p (Â<k> -> Â<k+1>), of d_p (Â<k> -> Â<k-1>), of multiplication by
    /// a homogeneous polynomial f, and of the Euler operator.
    SparseMat J(int p, int k) const;
    SparseMat partial(int p, int k) const;
    SparseMat multiply(const Poly& f, int k) const;

    /// phi(x^alpha (x) v) = J^alpha (1 (x) v), with J_p applied for the first nonzero
    /// index p last.
    SparseMat phi(int k) const;
    /// J^alpha (1 (x) v) computed with the factors in the given order of variable indices.
    SparseVec j_power(const Exponent& alpha, std::size_t v, const std::vector<int>& order) const;

private:
    void check_cap(int k) const;

    IrrepData v_;
    Rat b_;
    std::size_t cap_;
    ShenEmbedding shen_;
    Theta theta_;
    std::vector<ExtendedOp> gens_;
    std::vector<Compiled> compiled_;
    std::vector<int> shifts_;
    std::vector<Compiled> j_ops_;  // by internal index
    mutable std::map<int, std::vector<Exponent>> monos_;
    mutable std::map<int, std::map<Exponent, std::size_t>> mono_idx_;
    mutable std::map<int, SparseMat> phi_cache_;
    mutable std::map<std::pair<int, int>, SparseMat> j_cache_;
};

/// One graded component with the matrices of every o(m+2) basis element leaving it.
struct GradedSlice {
    WeightVec mu;
    Rat b;
    int k = 0;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    struct GeneratorAction {
        std::string label;
        int shift;
        SparseMat matrix;
    };
    std::vector<GeneratorAction> actions;
};

GradedSlice build_slice(const WeightVec& mu, const Rat& b, int k, std::size_t cap = 20000);
SparseMat phi_map(const WeightVec& mu, const Rat& b, int k);

/// Module axiom on slices 0..max_degree: action([X,Y]) = [action X, action Y].
Report verify_module_axiom(const ConformalModule& mod, int max_degree);
/// phi on Â<1> equals b + omega~ in the basis of V(eps_1) (x) V(mu).
Report verify_phi_degree_one(const ConformalModule& mod);
/// J^alpha computed in two shuffled orders agrees with phi.
Report verify_j_commute(const ConformalModule& mod, int k, unsigned seed);
/// phi commutes with the o(m) rotations on slice k.
Report verify_phi_equivariance(const ConformalModule& mod, int k);

}  // namespace confrep
