#include "confrep/mixed.hpp"
#include "confrep/spectral.hpp"

#include "doctest.h"

using namespace confrep;

namespace {

WeightVec W(Series s, const char* text) { return WeightVec::parse(s, text); }

ConformalModule module(Series s, const char* mu, Rat b) { return ConformalModule(build_irrep(W(s, mu)), b); }

}  // namespace

TEST_CASE("embedding of the dilation and translations") {
    const ShenEmbedding shen(Series::D, 2);
    const auto& ops = shen.ops();
    auto d = shen(ops.D());
    CHECK(d.ortho.empty());
    CHECK(d.central == Poly::constant(4, Rat(1)));
    auto p = shen(ops.d(3));
    CHECK(p.ortho.empty());
    CHECK(p.central.is_zero());
    CHECK(shen(ops.A(1, 2)).central.is_zero());
    CHECK_THROWS_AS(shen(ops.mul(ops.x(1)) * ops.d(1)), std::invalid_argument);
}

TEST_CASE("extended bracket matches a hand computation") {
    // [d_1, x_1 (E_{1,1} - E_{3,3})] = E_{1,1} - E_{3,3}
    const Layout L{Series::D, 2};
    ExtendedOp a{DiffOp::partial(4, 0), {}, Poly(4)};
    PolyMatrix pm;
    pm.emplace(Exponent{1, 0, 0, 0}, L.E(1, 1) - L.E(3, 3));
    ExtendedOp b{DiffOp(4), pm, Poly(4)};
    auto c = bracket(L, a, b);
    CHECK(c.field.is_zero());
    REQUIRE(c.ortho.size() == 1);
    CHECK(c.ortho.begin()->first == Exponent{0, 0, 0, 0});
    CHECK(c.ortho.begin()->second == L.E(1, 1) - L.E(3, 3));
}

TEST_CASE("embedding is a monomorphism with the closed forms") {
    for (auto [n, s] : {std::pair{2, Series::D}, std::pair{3, Series::D}, std::pair{1, Series::B}, std::pair{2, Series::B}}) {
        CAPTURE(n);
        Report r = verify_shen_monomorphism(n, s);
        for (const auto& f : r.failed()) MESSAGE(f);
        CHECK(r.all_pass());
    }
}

TEST_CASE("fault injection flips exactly one closed form") {
    Report r = verify_shen_monomorphism(2, Series::D, true);
    REQUIRE(r.failures() == 1);
    CHECK(r.failed()[0] == "closed form of image of J_{1}");
}

TEST_CASE("module axiom on low slices") {
    for (auto [s, mu] : {std::pair{Series::D, "1,0"}, std::pair{Series::B, "1/2,1/2"}, std::pair{Series::B, "1,0"}}) {
        INFO("mu = ", mu);
        auto mod = module(s, mu, Rat(1, 3));
        Report r = verify_module_axiom(mod, 2);
        for (const auto& e : r.entries)
            if (!e.pass) MESSAGE(e.lhs);
        CHECK(r.all_pass());
    }
}

TEST_CASE("degree zero actions") {
    auto mod = module(Series::D, "0,0", Rat(5, 2));
    // J_i (1 (x) v0) = b x_i (x) v0
    for (int p = 1; p <= 4; ++p) {
        SparseMat j = mod.J(p, 0);
        CHECK(j.rows() == 4);
        CHECK(j.at(static_cast<std::size_t>(p - 1), 0) == Rat(5, 2));
        CHECK(j.nnz() == 1);
        CHECK(mod.partial(p, 0).rows() == 0);
    }
    CHECK(mod.phi(0) == SparseMat::identity(1));
}

TEST_CASE("phi on degree one is b + omega~") {
    for (auto [s, mu] : {std::pair{Series::D, "1,0"}, std::pair{Series::D, "1,1"}, std::pair{Series::B, "1,0"},
                         std::pair{Series::B, "1/2,1/2"}})
        for (Rat b : {Rat(0), Rat(1, 3), Rat(-2)}) {
            INFO("mu = ", mu);
            CHECK(verify_phi_degree_one(module(s, mu, b)).all_pass());
        }
}

TEST_CASE("phi singularity follows the spectrum") {
    CHECK(rank(module(Series::D, "1,0", Rat(1, 3)).phi(1)) == 16);
    CHECK(rank(module(Series::D, "1,0", Rat(3)).phi(1)) < 16);
}

TEST_CASE("J factors commute and phi is equivariant") {
    auto mod = module(Series::B, "1,0", Rat(1, 3));
    CHECK(verify_j_commute(mod, 3, 11).all_pass());
    CHECK(verify_phi_equivariance(mod, 2).all_pass());
    auto modd = module(Series::D, "1,-1", Rat(-1));
    CHECK(verify_j_commute(modd, 3, 5).all_pass());
    CHECK(verify_phi_equivariance(modd, 2).all_pass());
}

TEST_CASE("T operator is a multiple of eta") {
    for (Series s : {Series::D, Series::B})
        for (Rat b : {Rat(0), Rat(1), Rat(1, 3), Rat(-1), Rat(7, 2)}) {
            auto mod = module(s, "1,0", b);
            for (int k = 0; k <= 3; ++k) CHECK(verify_T_operator(mod, k).all_pass());
        }
    CHECK(T_scalar(Series::D, 2, Rat(1), 0) == Rat(0));
    CHECK(T_scalar(Series::D, 2, Rat(2), 1) == Rat(3));
    CHECK(T_scalar(Series::B, 2, Rat(2), 1) == Rat(2));
    CHECK(T_matrix(module(Series::D, "1,0", Rat(1)), 0).is_zero());
}

TEST_CASE("graded slice") {
    auto s = build_slice(W(Series::D, "1,0"), Rat(1, 3), 1);
    CHECK(s.dim == 16);
    CHECK(s.actions.size() == 15);
    CHECK(s.basis[0] == "x1 (x) v0");
    for (const auto& a : s.actions) CHECK(a.matrix.cols() == 16);
    CHECK_THROWS_AS(build_slice(W(Series::D, "1,0"), Rat(0), 3, 50), std::length_error);
}

TEST_CASE("split Casimir lemma") {
    auto r = verify_charpoly_lemma(W(Series::D, "1,0"));
    CHECK(r.match);
    CHECK(r.computed.factored_str() == "(t - 1)^9 (t + 1)^6 (t + 3)");
    CHECK(r.report.all_pass());
    auto spin = verify_charpoly_lemma(W(Series::B, "1/2,1/2"));
    CHECK(spin.computed.factored_str() == "(t - 1/2)^16 (t + 2)^4");
    CHECK(spin.report.all_pass());
    CHECK(omega_tilde_matrix(WeightVec::zero(Series::B, 2)).matrix.is_zero());
}

TEST_CASE("Pieri eigenspaces") {
    for (auto [s, mu] : {std::pair{Series::D, "1,0"}, std::pair{Series::D, "1,-1"}, std::pair{Series::D, "2,0"},
                         std::pair{Series::B, "1/2,1/2"}, std::pair{Series::B, "1,1"}, std::pair{Series::D, "1,1,0"}}) {
        INFO("mu = ", mu);
        CHECK(verify_pieri_eigenspaces(W(s, mu)).all_pass());
    }
}
