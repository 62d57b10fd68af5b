#include "confrep/diffop.hpp"
#include "confrep/linalg.hpp"
#include "confrep/poly.hpp"
#include "confrep/rational.hpp"
#include "confrep/sparse_matrix.hpp"

#include "doctest.h"

#include <random>

using namespace confrep;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK((Rat(-7, 2)).floor() == -4);
    CHECK(Rat(-3, 6).str() == "-1/2");
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("abc"));
    CHECK_THROWS(Rat(1) / Rat(0));
    CHECK(is_natural(Rat(0)));
    CHECK(is_natural(Rat(4)));
    CHECK_FALSE(is_natural(Rat(-1)));
    CHECK_FALSE(is_natural(Rat(1, 2)));
}

TEST_CASE("sparse matrix products") {
    SparseMat a(2, 2), b(2, 2);
    a.set(0, 1, Rat(1));
    b.set(1, 0, Rat(1));
    SparseMat h = commutator(a, b);
    CHECK(h.at(0, 0) == Rat(1));
    CHECK(h.at(1, 1) == Rat(-1));
    CHECK(h.is_diagonal());
    CHECK(h.trace().is_zero());
    SparseMat k = kron(a, SparseMat::identity(3));
    CHECK(k.rows() == 6);
    CHECK(k.at(0, 3) == Rat(1));
    CHECK(k.nnz() == 3);
    a.set(0, 1, Rat(0));
    CHECK(a.is_zero());
}

TEST_CASE("monomial basis ordering and size") {
    auto basis = monomial_basis(3, 2);
    CHECK(basis.size() == 6);
    CHECK(basis.front() == Exponent{2, 0, 0});
    CHECK(basis.back() == Exponent{0, 0, 2});
    auto idx = monomial_index(3, 2);
    CHECK(idx.at(Exponent{1, 1, 0}) == 1);
    CHECK(monomial_basis(4, 3).size() == 20);
}

TEST_CASE("polynomial derivative and product") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly f = x * x * y + Rat(3) * y;
    CHECK(f.derivative(0) == Rat(2) * x * y);
    CHECK(f.derivative(Exponent{2, 1}) == Poly::constant(2, Rat(2)));
    CHECK(f.degree() == 3);
    CHECK_FALSE(f.is_homogeneous(3));
}

TEST_CASE("differential operator composition obeys Leibniz") {
    const int nv = 2;
    DiffOp d0 = DiffOp::partial(nv, 0);
    DiffOp x0 = DiffOp::multiplication(Poly::variable(nv, 0));
    // [d, x] = 1
    CHECK(bracket(d0, x0) == DiffOp::scalar(nv, Rat(1)));
    // Composition agrees with sequential application on sample polynomials.
    DiffOp a = x0 * d0 * d0 + DiffOp::partial(nv, 1);
    DiffOp b = DiffOp::multiplication(Poly::variable(nv, 1) * Poly::variable(nv, 0)) * d0;
    Poly g = Poly::monomial({3, 2}) + Poly::monomial({1, 4}, Rat(-2));
    CHECK((a * b).apply(g) == a.apply(b.apply(g)));
    CHECK((b * a).apply(g) == b.apply(a.apply(g)));
    CHECK_THROWS(a.vector_field_components());
    auto comps = b.vector_field_components();
    CHECK(comps[0] == Poly::variable(nv, 1) * Poly::variable(nv, 0));
    CHECK(comps[1].is_zero());
}

TEST_CASE("echelon basis coordinates") {
    EchelonBasis eb;
    SparseVec v1{{0, Rat(1)}, {1, Rat(2)}}, v2{{1, Rat(1)}, {2, Rat(1)}};
    CHECK(eb.insert(v1));
    CHECK(eb.insert(v2));
    SparseVec w = v1;
    axpy(w, Rat(-3), v2);
    CHECK_FALSE(eb.insert(w));
    auto c = eb.coordinates(w);
    REQUIRE(c.has_value());
    CHECK(c->at(0) == Rat(1));
    CHECK(c->at(1) == Rat(-3));
    CHECK_FALSE(eb.contains(SparseVec{{2, Rat(1)}}));
    CHECK(eb.rank() == 2);
}

TEST_CASE("kernel and rank") {
    SparseMat m(2, 3);
    m.set(0, 0, Rat(1));
    m.set(0, 1, Rat(1));
    m.set(1, 1, Rat(1));
    m.set(1, 2, Rat(-1));
    CHECK(rank(m) == 2);
    auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(m.apply(ker[0]).empty());
}

namespace {

// det(tI - M) sampled at deg+1 points and interpolated; independent of the Hessenberg route.
RatPoly charpoly_by_interpolation(const SparseMat& m) {
    const std::size_t n = m.rows();
    std::vector<Rat> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        Rat t(static_cast<long>(k) - static_cast<long>(n / 2));
        DenseMat a = to_dense(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? t : Rat(0)) - a[i][j];
        xs.push_back(t);
        ys.push_back(determinant(a));
    }
    RatPoly out;
    for (std::size_t i = 0; i <= n; ++i) {
        RatPoly basis(std::vector<Rat>{Rat(1)});
        Rat denom(1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis = basis * RatPoly(std::vector<Rat>{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        out = out + basis * RatPoly(std::vector<Rat>{ys[i] / denom});
    }
    return out;
}

}  // namespace

TEST_CASE("characteristic polynomial matches interpolated determinant") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t n = 2 + trial;
        SparseMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (dist(rng) > 0) m.set(i, j, Rat(dist(rng), 1 + (trial % 2)));
        CHECK(charpoly(m) == charpoly_by_interpolation(m));
    }
}

TEST_CASE("rational roots with multiplicity") {
    RatPoly p = RatPoly::from_roots({{Rat(1), 3}, {Rat(-1, 2), 2}, {Rat(0), 1}});
    p = p * RatPoly(std::vector<Rat>{Rat(2), Rat(0), Rat(1)});  // t^2 + 2 has no rational roots
    auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots[0] == std::pair<Rat, std::size_t>{Rat(-1, 2), 2});
    CHECK(rr.roots[1] == std::pair<Rat, std::size_t>{Rat(0), 1});
    CHECK(rr.roots[2] == std::pair<Rat, std::size_t>{Rat(1), 3});
    CHECK(rr.residual.degree() == 2);
    CHECK(RatPoly::from_roots({{Rat(1), 2}, {Rat(-3), 1}}).factored_str() == "(t - 1)^2 (t + 3)");
}
