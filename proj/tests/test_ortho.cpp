#include <algorithm>
#include "confrep/linalg.hpp"
#include "confrep/ortho.hpp"

#include "doctest.h"

using namespace confrep;

TEST_CASE("orthogonal bases have the right size and preserve the form") {
    for (int m = 3; m <= 9; ++m) {
        OrthoBasis ob = build_ortho(m);
        CHECK(ob.size() == static_cast<std::size_t>(m * (m - 1) / 2));
        std::vector<SparseVec> flat;
        for (const auto& e : ob.elements()) {
            CHECK(ob.preserves_form(e.mat));
            SparseVec v;
            for (const auto& [r, c, x] : e.mat.triplets()) v.emplace(r * m + c, x);
            flat.push_back(v);
        }
        CHECK(rank_of(flat) == ob.size());
    }
    CHECK_THROWS(build_ortho(2));
}

TEST_CASE("root vectors are ad-eigenvectors of the Cartan with the listed root") {
    for (int m : {4, 5, 6, 7}) {
        OrthoBasis ob = build_ortho(m);
        const int n = ob.layout().n;
        std::vector<WeightVec> all_roots;
        for (const auto& r : positive_roots(ob.layout().series, n)) {
            all_roots.push_back(r);
            all_roots.push_back(Rat(-1) * r);
        }
        std::size_t nonCartan = 0;
        for (const auto& e : ob.elements()) {
            if (e.kind == BasisElement::Kind::Cartan) continue;
            ++nonCartan;
            CHECK(std::find(all_roots.begin(), all_roots.end(), e.root) != all_roots.end());
            for (int k = 1; k <= n; ++k) {
                const SparseMat& h = ob[static_cast<std::size_t>(k - 1)].mat;
                CHECK(commutator(h, e.mat) == e.root[k] * e.mat);
            }
        }
        CHECK(nonCartan == all_roots.size());
    }
}

TEST_CASE("bracket of root vectors in o(6)") {
    Layout L{Series::D, 3};
    SparseMat a = L.E(1, 2) - L.E(5, 4), b = L.E(2, 1) - L.E(4, 5);
    CHECK(commutator(a, b) == (L.E(1, 1) - L.E(4, 4)) - (L.E(2, 2) - L.E(5, 5)));
}

TEST_CASE("coordinates reconstruct and reject non-members") {
    OrthoBasis ob = build_ortho(7);
    std::vector<Rat> c(ob.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(static_cast<long>(i % 5) - 2, 1 + static_cast<long>(i % 3));
    SparseMat x = ob.combine(c);
    CHECK(ob.coords(x) == c);
    SparseMat bad = ob.layout().E(0, 0);
    CHECK_FALSE(ob.coordinates(bad).has_value());
    CHECK_THROWS(ob.coords(bad));
}

TEST_CASE("conformal generators") {
    auto d2 = build_conformal(2, Series::D);
    CHECK(d2.size() == 15);
    CHECK(build_conformal(2, Series::B).size() == 21);
    ConformalOps ops(Series::D, 2);
    const int nv = 4;
    DiffOp D = ops.D();
    DiffOp expect = ops.mul(ops.x(1)) * D - ops.mul(ops.x(1) * ops.x(3) + ops.x(2) * ops.x(4)) * ops.d(3);
    CHECK(ops.J(1) == expect);
    // Euler operator scales monomials by degree.
    Poly m = Poly::monomial({2, 0, 1, 3}, Rat(5));
    CHECK(D.apply(m) == Rat(6) * m);
    // Laplacian of eta equals n.
    CHECK(ops.laplacian().apply(ops.eta()) == Poly::constant(nv, Rat(2)));
    CHECK(bracket(ops.d(1), ops.mul(ops.x(1)) * ops.d(1)) == ops.d(1));
    CHECK(bracket(ops.d(1), ops.J(1)) == D + ops.A(1, 1));
}

TEST_CASE("laplacian and eta commutator") {
    for (int n = 2; n <= 3; ++n) {
        ConformalOps ops(Series::D, n);
        CHECK(bracket(ops.laplacian(), ops.mul(ops.eta())) == Rat(n) * ops.one() + ops.D());
    }
    // For the B series the commutator is 1 + 2n + 2D.
    for (int n = 1; n <= 2; ++n) {
        ConformalOps ops(Series::B, n);
        CHECK(bracket(ops.laplacian(), ops.mul(ops.eta())) == Rat(1 + 2 * n) * ops.one() + Rat(2) * ops.D());
    }
}

TEST_CASE("theta images of selected elements") {
    Theta th(Series::D, 2);
    const Layout& L = th.domain().layout();
    CHECK(th(L.E(3, 3) - L.E(6, 6)) == -th.ops().D());
    CHECK(th(L.E(1, 3) - L.E(6, 4)) == -th.ops().J(1));
    Theta tb(Series::B, 2);
    const Layout& LB = tb.domain().layout();
    CHECK(tb(LB.E(0, 3) - LB.E(6, 0)) == tb.ops().J(0));
    CHECK_THROWS(tb(LB.E(0, 0)));
}

TEST_CASE("bracket tables hold") {
    for (auto [s, n] : {std::pair{Series::D, 2}, {Series::D, 3}, {Series::B, 1}, {Series::B, 2}}) {
        Report r = verify_bracket_tables(n, s);
        CHECK_MESSAGE(r.all_pass(), r.name << " failed: " << (r.failed().empty() ? "" : r.failed().front()));
        CHECK(r.entries.size() > 40);
    }
}

TEST_CASE("theta is an injective homomorphism") {
    for (auto [s, n] : {std::pair{Series::D, 2}, {Series::B, 1}, {Series::B, 2}}) {
        Report r = verify_theta_homomorphism(n, s);
        CHECK_MESSAGE(r.all_pass(), r.name << " failed: " << (r.failed().empty() ? "" : r.failed().front()));
    }
}
