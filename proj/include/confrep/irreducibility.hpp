#pragma once

#include "confrep/linalg.hpp"
#include "confrep/mixed.hpp"
#include "confrep/report.hpp"
#include "confrep/weights.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace confrep {

enum class Verdict { IrreducibleUpToD, ProperSubmoduleFound, CriticalB };
std::string to_string(Verdict v);

struct LevelRecord {
    int k = 0;
    std::size_t dim = 0;
    /// Rank of sum_p J_p(Â<k-1>) inside Â<k>.
    std::size_t j_rank = 0;
    /// Dimension of the degree-k part of U(J)(1 (x) M), the image of phi.
    std::size_t generated_rank = 0;
    bool full() const { return generated_rank == dim && j_rank == dim; }
};

struct ScanResult {
    WeightVec mu;
    Rat b;
    int max_degree = 0;
    std::vector<LevelRecord> levels;
    /// Rational eigenvalues of phi on Â<1> with multiplicities, and the factor without
    /// rational roots.
    std::vector<std::pair<Rat, std::size_t>> phi_eigenvalues;
    RatPoly phi_residual;
    Verdict verdict = Verdict::IrreducibleUpToD;
    std::optional<Progression> critical;

    /// First level whose generated part is not everything, if any.
    std::optional<int> first_deficient() const;
    /// "irreducible-up-to-4", "proper-submodule-found" or "critical-b".
    std::string verdict_label() const;
    std::string str() const;
};

ScanResult surjectivity_scan(const ConformalModule& mod, int max_degree);
ScanResult surjectivity_scan(const WeightVec& mu, const Rat& b, int max_degree);
nlohmann::json to_json(const ScanResult& r);

/// A graded subspace closed under all generators up to the truncation degree.
struct Submodule {
    int max_degree = 0;
    /// Basis vectors per degree 0..max_degree.
    std::vector<std::vector<SparseVec>> basis;
    std::vector<std::size_t> slice_dims;
    Report report;
    std::vector<std::size_t> dims() const;
};

/// Closure of 1 (x) M under the o(m+2) action, truncated at max_degree; returned when
/// it is a proper subspace in some degree.
std::optional<Submodule> detect_submodule(const ConformalModule& mod, int max_degree);
std::optional<Submodule> detect_submodule(const WeightVec& mu, const Rat& b, int max_degree);

/// Span generated by J from the whole slice of degree seed, level by level; the ranks
/// show whether the quotient by lower degrees is reached.
std::vector<LevelRecord> quotient_scan(const ConformalModule& mod, int seed, int max_degree);

struct HarmonicBasis {
    int k = 0;
    int n = 0;
    Series series = Series::D;
    std::size_t dim_A = 0;
    /// Basis of H_k in the monomial basis of A_k.
    std::vector<SparseVec> harmonic;
    /// dim H_{k-2m} for m = 0, 1, ..., so that A_k = sum eta^m H_{k-2m}.
    std::vector<std::size_t> component_dims;
    Report report;
};

HarmonicBasis harmonic_decompose(int k, int n, Series series);
/// Checks [Delta, eta] against n + D (D series) and 1 + 2n + D (B series) on A_k, k <= max_k.
Report verify_laplacian_commutator(int n, Series series, int max_k);

struct Classification {
    bool generic = true;
    /// For mu = 0 the answer is an equivalence.
    bool sharp = false;
    std::optional<Progression> violated;
    std::string str() const;
};
Classification classify_b(const WeightVec& mu, const Rat& b);

/// eta * Â<ell-1> is contained in sum_p J_p(Â<ell>) when the T scalar on Â<ell-1> is nonzero.
Report verify_eta_containment(const ConformalModule& mod, int ell);
/// J_p(g (x) v) + eta d_{p*}(g) (x) v = g [(ell + b + omega~)(x_p (x) v)] on random g, v.
Report verify_j_identity(const ConformalModule& mod, int ell, unsigned seed, int samples = 6);

}  // namespace confrep
