#include "confrep/spectral.hpp"

#include "confrep/mixed.hpp"

#include <stdexcept>

namespace confrep {

SparseMat omega_matrix(const ModuleRep& v) {
    SparseMat out(v.dim(), v.dim());
    for (const auto& [a, b] : casimir_pairs(v.basis.layout())) out += v.of(a) * v.of(b);
    return out;
}

OmegaTildeMatrix omega_tilde_matrix(const IrrepData& v, std::size_t cap) {
    const Layout& L = v.basis.layout();
    const std::size_t dim = static_cast<std::size_t>(L.size()) * v.dim();
    if (dim > cap)
        throw std::length_error("omega~: dimension " + std::to_string(dim) + " exceeds the cap " + std::to_string(cap));
    OmegaTildeMatrix out{v.mu, dim, SparseMat(dim, dim)};
    for (const auto& [a, b] : casimir_pairs(L)) out.matrix += kron(a, v.of(b));
    return out;
}

OmegaTildeMatrix omega_tilde_matrix(const WeightVec& mu, std::size_t cap) {
    return omega_tilde_matrix(build_irrep(mu), cap);
}

CharpolyResult verify_charpoly_lemma(const WeightVec& mu, std::size_t cap) {
    CharpolyResult r;
    r.mu = mu;
    r.report.name = "split Casimir, " + to_string(mu.series()) + " mu=(" + mu.str() + ")";
    const IrrepData v = build_irrep(mu);
    const auto om = omega_tilde_matrix(v, cap);
    r.computed = charpoly(om.matrix);
    r.closed_form = RatPoly::from_roots(omega_tilde_spectrum(mu).as_roots());
    r.match = r.computed == r.closed_form;
    r.report.add("charpoly of omega~ equals the closed form", r.match, r.computed.factored_str(),
                 r.closed_form.factored_str());

    const ModuleRep tensor = tensor_with_natural(v, cap);
    const Layout& L = v.basis.layout();
    const Rat c1 = casimir_eigenvalue(WeightVec::unit(L.series, L.n, 1));
    const Rat cm = casimir_eigenvalue(mu);
    const SparseMat half =
        (omega_matrix(tensor) - (c1 + cm) * SparseMat::identity(om.dim)) * Rat(1, 2);
    r.report.add("omega~ = (omega on the tensor product - c(eps_1) - c(mu)) / 2", half == om.matrix);

    std::size_t bad = 0;
    for (const auto& g : tensor.rep)
        if (!(commutator(g, om.matrix).is_zero())) ++bad;
    r.report.add("omega~ commutes with the diagonal action", bad == 0, "", "",
                 bad == 0 ? "0" : std::to_string(bad) + " generators");
    return r;
}

nlohmann::json to_json(const CharpolyResult& r) {
    return {{"mu", r.mu.str()},
            {"series", to_string(r.mu.series())},
            {"charpoly_computed", r.computed.factored_str()},
            {"charpoly_closed_form", r.closed_form.factored_str()},
            {"match", r.match},
            {"report", to_json(r.report)}};
}

Report verify_pieri_eigenspaces(const WeightVec& mu, std::size_t cap) {
    Report rep;
    rep.name = "Pieri eigenspaces, " + to_string(mu.series()) + " mu=(" + mu.str() + ")";
    const auto om = omega_tilde_matrix(mu, cap);
    const Spectrum spec = omega_tilde_spectrum(mu);
    long total = 0;
    for (const auto& e : spec.entries()) {
        const SparseMat shifted = om.matrix - e.eigenvalue * SparseMat::identity(om.dim);
        const long kdim = static_cast<long>(kernel(shifted).size());
        std::string summands;
        for (const auto& w : e.summands) {
            if (!summands.empty()) summands += " + ";
            summands += "V(" + w.str() + ")";
        }
        rep.add("eigenspace of " + e.eigenvalue.str() + " has the dimension of " + summands, kdim == e.multiplicity,
                std::to_string(kdim), std::to_string(e.multiplicity));
        total += kdim;
    }
    const long expect = static_cast<long>(om.dim);
    long pieri_total = 0;
    for (const auto& s : pieri_decompose(mu)) pieri_total += weyl_dim(s.weight);
    rep.add("eigenspaces fill V(eps_1) (x) V(mu)", total == expect, std::to_string(total), std::to_string(expect));
    rep.add("Weyl dimensions of the summands add up to " + std::to_string(expect), pieri_total == expect,
            std::to_string(pieri_total), std::to_string(expect));
    return rep;
}

SparseMat T_matrix(const ConformalModule& mod, int k) {
    const ConformalOps& ops = mod.ops();
    const int n = mod.layout().n;
    SparseMat out(mod.slice_dim(k + 2), mod.slice_dim(k));
    for (int i = 1; i <= n; ++i) {
        out += mod.J(i, k + 1) * mod.multiply(ops.x(n + i), k);
        out += mod.J(n + i, k + 1) * mod.multiply(ops.x(i), k);
    }
    if (mod.layout().series == Series::B) out += mod.J(0, k + 1) * mod.multiply(ops.x(0), k);
    return out;
}

Rat T_scalar(Series series, int n, const Rat& b, int k) {
    return series == Series::D ? Rat(2) * b + Rat(2 - 2 * n + k) : Rat(2) * b + Rat(-2 * n + k + 1);
}

Report verify_T_operator(const ConformalModule& mod, int k) {
    Report rep;
    const Layout& L = mod.layout();
    const Rat c = T_scalar(L.series, L.n, mod.b(), k);
    rep.name = "T operator, " + to_string(L.series) + " n=" + std::to_string(L.n) + " b=" + mod.b().str() +
               " k=" + std::to_string(k);
    const SparseMat T = T_matrix(mod, k);
    const SparseMat expect = c * mod.multiply(mod.ops().eta(), k);
    const bool ok = T == expect;
    rep.add("T = " + c.str() + " * eta on degree " + std::to_string(k), ok, ok ? "" : T.str(), ok ? "" : expect.str());
    return rep;
}

}  // namespace confrep
