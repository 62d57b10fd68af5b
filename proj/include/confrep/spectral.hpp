#pragma once

#include "confrep/irrep.hpp"
#include "confrep/linalg.hpp"
#include "confrep/report.hpp"
#include "confrep/sparse_matrix.hpp"
#include "confrep/weights.hpp"

#include <cstddef>

#include "json.hpp"

namespace confrep {

class ConformalModule;

/// Casimir sum a*b over casimir_pairs, evaluated in the module.
SparseMat omega_matrix(const ModuleRep& v);

/// The split Casimir sum a (x) b on V(eps_1) (x) V(mu), basis index p * dim V(mu) + v.
struct OmegaTildeMatrix {
    WeightVec mu;
    std::size_t dim = 0;
    SparseMat matrix;
};
OmegaTildeMatrix omega_tilde_matrix(const IrrepData& v, std::size_t cap = 4 * kDefaultDimCap);
OmegaTildeMatrix omega_tilde_matrix(const WeightVec& mu, std::size_t cap = 4 * kDefaultDimCap);

struct CharpolyResult {
    WeightVec mu;
    RatPoly computed;
    RatPoly closed_form;
    bool match = false;
    Report report;
};
/// Charpoly of omega~ against the closed-form spectrum, the identity
/// omega~ = (omega_tensor - c(eps_1) - c(mu)) / 2, and commutation with the diagonal action.
CharpolyResult verify_charpoly_lemma(const WeightVec& mu, std::size_t cap = 4 * kDefaultDimCap);
nlohmann::json to_json(const CharpolyResult& r);

/// Each omega~ eigenspace has the dimension predicted by the Pieri summands, and the
/// dimensions add up to dim V(eps_1) * dim V(mu).
Report verify_pieri_eigenspaces(const WeightVec& mu, std::size_t cap = 4 * kDefaultDimCap);

/// T = sum (J_i x_{n+i} + J_{n+i} x_i) (+ J_0 x_0 for B) as a map from slice k to slice k+2.
SparseMat T_matrix(const ConformalModule& mod, int k);
/// Scalar c with T = c * eta on slice k: 2b+2-2n+k (D) or 2b-2n+k+1 (B).
Rat T_scalar(Series series, int n, const Rat& b, int k);
Report verify_T_operator(const ConformalModule& mod, int k);

}  // namespace confrep
