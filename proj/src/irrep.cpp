#include "confrep/irrep.hpp"

#include "confrep/linalg.hpp"
#include "confrep/spectral.hpp"

#include <map>
#include <stdexcept>

namespace confrep {

SparseMat ModuleRep::of_coords(const std::vector<Rat>& c) const {
    SparseMat out(dim(), dim());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) out += c[i] * rep.at(i);
    return out;
}

SparseMat ModuleRep::of(const SparseMat& x) const { return of_coords(basis.coords(x)); }

namespace {

// Value of the Cartan element h on the weight lam.
Rat cartan_value(const Layout& L, const SparseMat& h, const WeightVec& lam) {
    if (!h.is_diagonal()) throw std::logic_error("expected a Cartan element");
    Rat out;
    for (int k = 1; k <= L.n; ++k) out += h.at(L.internal(k), L.internal(k)) * lam[k];
    return out;
}

// Fills the matrices of non-simple root vectors from brackets of lower ones.
void complete_root_vectors(ModuleRep& m) {
    const OrthoBasis& ob = m.basis;
    const auto simple = simple_roots(ob.layout().series, ob.layout().n);
    for (const auto sign : {1, -1}) {
        const auto simple_idx = sign > 0 ? ob.simple_raising() : ob.simple_lowering();
        std::vector<bool> done(ob.size(), false);
        for (auto i : simple_idx) done[i] = true;
        for (std::size_t b = 0; b < ob.size(); ++b) {
            const auto& be = ob[b];
            const bool wanted = sign > 0 ? be.kind == BasisElement::Kind::Positive
                                         : be.kind == BasisElement::Kind::Negative;
            if (!wanted || done[b]) continue;
            bool found = false;
            for (std::size_t s = 0; s < simple.size() && !found; ++s) {
                auto g = ob.root_index(be.root - Rat(sign) * simple[s]);
                if (!g || !done[*g]) continue;
                const std::size_t e = simple_idx[s];
                SparseMat br = commutator(ob[*g].mat, ob[e].mat);
                Rat c = br.at(be.lead_row, be.lead_col) / be.mat.at(be.lead_row, be.lead_col);
                if (c.is_zero() || !(br == c * be.mat)) continue;
                m.rep[b] = commutator(m.rep[*g], m.rep[e]) * (Rat(1) / c);
                done[b] = true;
                found = true;
            }
            if (!found) throw std::logic_error("could not reach root vector " + be.label);
        }
    }
}

}  // namespace

IrrepData build_irrep(const WeightVec& mu, std::size_t cap) {
    if (!is_dominant(mu)) throw std::invalid_argument("build_irrep: weight (" + mu.str() + ") is not dominant");
    const long expect = weyl_dim(mu);
    if (static_cast<std::size_t>(expect) > cap)
        throw std::length_error("build_irrep: dim V(" + mu.str() + ") = " + std::to_string(expect) +
                                " exceeds the cap " + std::to_string(cap));
    IrrepData out(OrthoBasis(Layout{mu.series(), mu.rank()}), mu);
    const OrthoBasis& ob = out.basis;
    const Layout& L = ob.layout();
    const auto simple = simple_roots(L.series, L.n);
    const auto e_idx = ob.simple_raising();
    const auto f_idx = ob.simple_lowering();
    const std::size_t r = simple.size();
    std::vector<SparseMat> h;
    for (std::size_t i = 0; i < r; ++i) h.push_back(commutator(ob[e_idx[i]].mat, ob[f_idx[i]].mat));

    std::vector<WeightVec>& wt = out.weights;
    std::vector<std::vector<SparseVec>> e_act(r), f_act(r);  // [i][vector] -> image
    auto new_vector = [&](const WeightVec& w) {
        wt.push_back(w);
        for (std::size_t i = 0; i < r; ++i) {
            e_act[i].emplace_back();
            f_act[i].emplace_back();
        }
        return wt.size() - 1;
    };

    std::vector<std::size_t> level{new_vector(mu)};
    while (!level.empty()) {
        struct Space {
            EchelonBasis eb;
            std::vector<std::size_t> members;
        };
        std::map<WeightVec, Space> spaces;
        std::vector<std::size_t> next;
        for (std::size_t w : level)
            for (std::size_t i = 0; i < r; ++i) {
                // Stacked images e_j f_i w, indexed by vector * r + j.
                SparseVec img;
                for (std::size_t j = 0; j < r; ++j) {
                    SparseVec col;
                    for (const auto& [u, c] : e_act[j][w]) axpy(col, c, f_act[i][u]);
                    if (i == j) axpy(col, cartan_value(L, h[i], wt[w]), SparseVec{{w, Rat(1)}});
                    for (const auto& [u, c] : col) img.emplace(u * r + j, c);
                }
                if (img.empty()) continue;
                const WeightVec lam = wt[w] - simple[i];
                Space& sp = spaces[lam];
                if (sp.eb.insert(img)) {
                    if (wt.size() >= static_cast<std::size_t>(expect))
                        throw std::logic_error("build_irrep: construction exceeds the Weyl dimension");
                    std::size_t g = new_vector(lam);
                    sp.members.push_back(g);
                    next.push_back(g);
                    for (const auto& [key, c] : img) e_act[key % r][g].emplace(key / r, c);
                    f_act[i][w] = {{g, Rat(1)}};
                } else {
                    auto c = sp.eb.coordinates(img);
                    SparseVec v;
                    for (const auto& [k, x] : *c) v.emplace(sp.members[k], x);
                    f_act[i][w] = std::move(v);
                }
            }
        level = std::move(next);
    }

    const std::size_t dim = wt.size();
    out.rep.assign(ob.size(), SparseMat(dim, dim));
    for (int k = 1; k <= L.n; ++k) {
        std::vector<Rat> diag;
        for (const auto& w : wt) diag.push_back(w[k]);
        out.rep[static_cast<std::size_t>(k - 1)] = SparseMat::diagonal(diag);
    }
    for (std::size_t i = 0; i < r; ++i) {
        out.rep[e_idx[i]] = SparseMat::from_columns(dim, e_act[i]);
        out.rep[f_idx[i]] = SparseMat::from_columns(dim, f_act[i]);
    }
    complete_root_vectors(out);
    out.highest = 0;
    return out;
}

IrrepData natural_module(Series series, int n) {
    const int first = 1;
    IrrepData out(OrthoBasis(Layout{series, n}), WeightVec::unit(series, n, first));
    const Layout& L = out.basis.layout();
    for (int p = L.first(); p <= L.last(); ++p) {
        if (p == 0)
            out.weights.push_back(WeightVec::zero(series, n));
        else if (p <= n)
            out.weights.push_back(WeightVec::unit(series, n, p));
        else
            out.weights.push_back(Rat(-1) * WeightVec::unit(series, n, p - n));
    }
    for (const auto& e : out.basis.elements()) out.rep.push_back(e.mat);
    out.highest = L.internal(1);
    return out;
}

ModuleRep tensor_with_natural(const IrrepData& v, std::size_t cap) {
    const Layout& L = v.basis.layout();
    IrrepData nat = natural_module(L.series, L.n);
    const std::size_t dim = nat.dim() * v.dim();
    if (dim > cap)
        throw std::length_error("tensor_with_natural: dimension " + std::to_string(dim) + " exceeds the cap " +
                                std::to_string(cap));
    ModuleRep out(v.basis);
    for (const auto& a : nat.weights)
        for (const auto& b : v.weights) out.weights.push_back(a + b);
    const SparseMat In = SparseMat::identity(nat.dim()), Iv = SparseMat::identity(v.dim());
    for (std::size_t i = 0; i < v.basis.size(); ++i) out.rep.push_back(kron(nat.rep[i], Iv) + kron(In, v.rep[i]));
    return out;
}

std::size_t commutant_dimension(const ModuleRep& m) {
    // Any commuting matrix preserves weight spaces, so only same-weight entries are unknowns.
    const std::size_t dim = m.dim();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            if (m.weights[a] == m.weights[b]) var.emplace(std::make_pair(a, b), var.size());
    std::vector<SparseVec> equations;
    for (std::size_t gi = 0; gi < m.rep.size(); ++gi) {
        if (m.basis[gi].kind == BasisElement::Kind::Cartan) continue;
        const SparseMat& g = m.rep[gi];
        const SparseMat gt = g.transpose();
        std::map<std::pair<std::size_t, std::size_t>, SparseVec> eq;
        for (const auto& [ab, x] : var) {
            const auto [a, b] = ab;
            for (const auto& [c, v] : g.row(b)) eq[{a, c}][x] += v;   // (C g)[a,c]
            for (const auto& [rr, v] : gt.row(a)) eq[{rr, b}][x] -= v;  // (g C)[rr,b]
        }
        for (auto& [pos, row] : eq) {
            for (auto it = row.begin(); it != row.end();)
                it = it->second.is_zero() ? row.erase(it) : std::next(it);
            if (!row.empty()) equations.push_back(std::move(row));
        }
    }
    return var.size() - rank_of(equations);
}

Report validate_irrep(const IrrepData& v) {
    Report rep;
    rep.name = "V(" + v.mu.str() + ") " + to_string(v.mu.series());
    const OrthoBasis& ob = v.basis;
    const Layout& L = ob.layout();
    const long wd = weyl_dim(v.mu);
    rep.add("dimension equals Weyl dimension", static_cast<long>(v.dim()) == wd, std::to_string(v.dim()),
            std::to_string(wd));

    std::size_t bad = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < ob.size(); ++i)
        for (std::size_t j = 0; j < ob.size(); ++j) {
            SparseMat lhs = v.of(commutator(ob[i].mat, ob[j].mat));
            if (!(lhs == commutator(v.rep[i], v.rep[j]))) {
                if (bad++ == 0) first_bad = "[" + ob[i].label + ", " + ob[j].label + "]";
            }
        }
    rep.add("representation is a homomorphism", bad == 0, first_bad, "", bad == 0 ? "0" : std::to_string(bad) + " pairs");

    bool weights_ok = true;
    for (int k = 1; k <= L.n; ++k) {
        const SparseMat& hk = v.rep[static_cast<std::size_t>(k - 1)];
        if (!hk.is_diagonal()) weights_ok = false;
        for (std::size_t a = 0; a < v.dim() && weights_ok; ++a)
            if (hk.at(a, a) != v.weights[a][k]) weights_ok = false;
    }
    rep.add("Cartan acts diagonally by the listed weights", weights_ok);

    bool hw_ok = v.weights.at(v.highest) == v.mu;
    for (std::size_t i = 0; i < ob.size(); ++i)
        if (ob[i].kind == BasisElement::Kind::Positive && !v.rep[i].column(v.highest).empty()) hw_ok = false;
    rep.add("highest weight vector annihilated by positive root vectors", hw_ok);

    const std::size_t cd = commutant_dimension(v);
    rep.add("commutant is scalar (irreducible)", cd == 1, std::to_string(cd), "1");

    const SparseMat om = omega_matrix(v);
    const Rat c = casimir_eigenvalue(v.mu);
    const bool cas = om == c * SparseMat::identity(v.dim());
    rep.add("Casimir acts by (mu+2rho, mu) = " + c.str(), cas, cas ? c.str() : om.str(), c.str());
    return rep;
}

// ---------------------------------------------------------------------------
// Persistence

nlohmann::json irrep_to_json(const IrrepData& v) {
    nlohmann::json j;
    j["schema"] = 1;
    j["series"] = to_string(v.mu.series());
    j["n"] = v.mu.rank();
    j["mu"] = v.mu.str();
    j["dim"] = v.dim();
    j["highest"] = v.highest;
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : v.weights) w.push_back(x.str());
    j["weights"] = w;
    nlohmann::json mats = nlohmann::json::array();
    for (std::size_t i = 0; i < v.rep.size(); ++i) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& [r, c, x] : v.rep[i].triplets()) t.push_back({r, c, x.str()});
        mats.push_back({{"label", v.basis[i].label}, {"triplets", t}});
    }
    j["matrices"] = mats;
    return j;
}

IrrepData irrep_from_json(const nlohmann::json& j) {
    if (j.value("schema", 0) != 1) throw std::invalid_argument("irrep JSON: unsupported schema");
    const Series s = parse_series(j.at("series").get<std::string>());
    WeightVec mu = WeightVec::parse(s, j.at("mu").get<std::string>());
    if (mu.rank() != j.at("n").get<int>()) throw std::invalid_argument("irrep JSON: rank mismatch");
    IrrepData out(OrthoBasis(Layout{s, mu.rank()}), mu);
    const std::size_t dim = j.at("dim").get<std::size_t>();
    for (const auto& w : j.at("weights")) out.weights.push_back(WeightVec::parse(s, w.get<std::string>()));
    if (out.weights.size() != dim) throw std::invalid_argument("irrep JSON: weight count mismatch");
    out.highest = j.at("highest").get<std::size_t>();
    const auto& mats = j.at("matrices");
    if (mats.size() != out.basis.size()) throw std::invalid_argument("irrep JSON: matrix count mismatch");
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].at("label").get<std::string>() != out.basis[i].label)
            throw std::invalid_argument("irrep JSON: unexpected label " + mats[i].at("label").get<std::string>());
        SparseMat m(dim, dim);
        for (const auto& t : mats[i].at("triplets"))
            m.set(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(), Rat::parse(t.at(2).get<std::string>()));
        out.rep.push_back(std::move(m));
    }
    return out;
}

}  // namespace confrep
