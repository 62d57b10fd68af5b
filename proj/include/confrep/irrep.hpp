#pragma once

#include "confrep/ortho.hpp"
#include "confrep/report.hpp"
#include "confrep/sparse_matrix.hpp"
#include "confrep/weights.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace confrep {

inline constexpr std::size_t kDefaultDimCap = 512;

/// Finite-dimensional o(m)-module in a weight basis: one matrix per basis element of o(m).
struct ModuleRep {
    OrthoBasis basis;
    std::vector<WeightVec> weights;
    std::vector<SparseMat> rep;

    explicit ModuleRep(OrthoBasis b) : basis(std::move(b)) {}
    std::size_t dim() const { return weights.size(); }
    /// Action of an arbitrary element of o(m), by linearity.
    SparseMat of(const SparseMat& x) const;
    /// Action of a combination given by basis coordinates.
    SparseMat of_coords(const std::vector<Rat>& c) const;
};

/// The irreducible module V(mu).
struct IrrepData : ModuleRep {
    WeightVec mu;
    std::size_t highest = 0;

    IrrepData(OrthoBasis b, WeightVec m) : ModuleRep(std::move(b)), mu(std::move(m)) {}
};

/// Builds V(mu); throws if mu is not dominant or weyl_dim(mu) exceeds cap.
IrrepData build_irrep(const WeightVec& mu, std::size_t cap = kDefaultDimCap);

/// V(eps_1) realized on span{x_p}, so that E_{p,q} acts by x_p d_q. Basis order is the
/// variable order of the layout.
IrrepData natural_module(Series series, int n);

/// V(eps_1) (x) V with the diagonal action; basis index is p * dim V + v.
ModuleRep tensor_with_natural(const IrrepData& v, std::size_t cap = 4 * kDefaultDimCap);

/// Dimension of the space of matrices commuting with every action matrix.
std::size_t commutant_dimension(const ModuleRep& m);

/// Homomorphism property, weights, highest weight vector, irreducibility and Casimir scalar.
Report validate_irrep(const IrrepData& v);

nlohmann::json irrep_to_json(const IrrepData& v);
IrrepData irrep_from_json(const nlohmann::json& j);

}  // namespace confrep
