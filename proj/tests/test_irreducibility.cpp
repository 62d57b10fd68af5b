#include "confrep/irreducibility.hpp"
#include "confrep/spectral.hpp"

#include "doctest.h"

using namespace confrep;

namespace {

WeightVec W(Series s, const char* text) { return WeightVec::parse(s, text); }

ConformalModule module(Series s, const char* mu, Rat b) { return ConformalModule(build_irrep(W(s, mu)), b); }

// Binomial coefficient, for slice dimensions.
std::size_t choose(std::size_t a, std::size_t b) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace

TEST_CASE("generic b gives full rank") {
    auto r = surjectivity_scan(W(Series::D, "1,0"), Rat(1, 3), 4);
    CHECK(r.verdict == Verdict::IrreducibleUpToD);
    REQUIRE(r.levels.size() == 4);
    for (const auto& l : r.levels) {
        CHECK(l.dim == choose(l.k + 3, 3) * 4);
        CHECK(l.full());
    }
    // eigenvalues b+1, b-1, b-3
    REQUIRE(r.phi_eigenvalues.size() == 3);
    CHECK(r.phi_eigenvalues[0].first == Rat(1, 3) - Rat(3));
    CHECK(r.phi_eigenvalues[2].first == Rat(1, 3) + Rat(1));

    auto spin = surjectivity_scan(W(Series::B, "1/2,1/2"), Rat(1, 4), 3);
    CHECK(spin.verdict == Verdict::IrreducibleUpToD);
}

TEST_CASE("critical b gives a deficiency at degree one") {
    auto r = surjectivity_scan(W(Series::D, "1,0"), Rat(3), 2);
    CHECK(r.verdict == Verdict::ProperSubmoduleFound);
    REQUIRE(r.first_deficient());
    CHECK(*r.first_deficient() == 1);
    CHECK(r.levels[0].generated_rank == 16 - 1);
}

TEST_CASE("critical b with full rank is reported as such") {
    // b = 1/2 lies in n-1-N/2 while the degree-one eigenvalues 3/2, -1/2, -5/2 are nonzero.
    auto r = surjectivity_scan(W(Series::D, "1,0"), Rat(1, 2), 2);
    CHECK_FALSE(classify_b(r.mu, r.b).generic);
    CHECK_FALSE(r.first_deficient());
    CHECK(r.verdict == Verdict::CriticalB);
    CHECK(r.critical->name == "n-1-N/2");
}

TEST_CASE("trivial module: constants line at b = 0") {
    auto mod = module(Series::D, "0,0", Rat(0));
    auto sub = detect_submodule(mod, 3);
    REQUIRE(sub);
    CHECK(sub->dims() == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(sub->report.all_pass());
    auto q = quotient_scan(ConformalModule(build_irrep(WeightVec::zero(Series::B, 2)), Rat(0)), 1, 4);
    for (const auto& l : q) CHECK(l.full());
}

// The only o(m)-invariant of degree 2r is eta^r, and J can reach it from degree 2r-1 only
// through T(eta^{r-1}) = c eta^r with c the T scalar on degree 2r-2. Where c vanishes the
// J-span misses exactly eta^r.
TEST_CASE("trivial module: eta^r is unreachable where the T scalar vanishes") {
    auto oracle_missing = [](Series s, int n, const Rat& b, int k) {
        return k % 2 == 0 && k >= 2 && T_scalar(s, n, b, k - 2).is_zero() ? 1u : 0u;
    };
    for (Series s : {Series::D, Series::B})
        for (Rat b : {Rat(1, 2), Rat(1), Rat(5, 2), Rat(3, 2)}) {
            auto mod = ConformalModule(build_irrep(WeightVec::zero(s, 2)), b);
            auto r = surjectivity_scan(mod, 4);
            for (const auto& l : r.levels) {
                INFO("k = ", l.k);
                CHECK(l.dim - l.j_rank == oracle_missing(s, 2, b, l.k));
            }
        }
    auto q = quotient_scan(ConformalModule(build_irrep(WeightVec::zero(Series::D, 2)), Rat(0)), 1, 4);
    REQUIRE(q.size() == 3);
    CHECK(q[0].full());
    CHECK(q[1].full());
    CHECK(q[2].dim - q[2].generated_rank == 1);
}

TEST_CASE("trivial module: submodules at negative integers and where eta^r is blocked") {
    for (Series s : {Series::D, Series::B})
        for (Rat b : {Rat(-1), Rat(-2)}) {
            auto sub = detect_submodule(ConformalModule(build_irrep(WeightVec::zero(s, 2)), b), 3);
            REQUIRE(sub);
            CHECK(sub->report.all_pass());
        }
    auto blocked = detect_submodule(ConformalModule(build_irrep(WeightVec::zero(Series::D, 2)), Rat(1)), 2);
    REQUIRE(blocked);
    CHECK(blocked->dims() == std::vector<std::size_t>{1, 4, 9});
    for (Rat b : {Rat(1, 2), Rat(5, 2)})
        CHECK_FALSE(detect_submodule(ConformalModule(build_irrep(WeightVec::zero(Series::D, 2)), b), 4));
    for (Rat b : {Rat(1), Rat(5, 2)})
        CHECK_FALSE(detect_submodule(ConformalModule(build_irrep(WeightVec::zero(Series::B, 2)), b), 4));
}

TEST_CASE("harmonic decomposition") {
    auto h = harmonic_decompose(2, 2, Series::D);
    CHECK(h.dim_A == 10);
    CHECK(h.harmonic.size() == 9);
    CHECK(h.component_dims == std::vector<std::size_t>{9, 1});
    CHECK(h.report.all_pass());
    CHECK(harmonic_decompose(0, 2, Series::D).harmonic.size() == 1);
    CHECK(harmonic_decompose(1, 3, Series::B).harmonic.size() == 7);
    for (int k = 0; k <= 5; ++k) {
        CHECK(harmonic_decompose(k, 2, Series::D).report.all_pass());
        CHECK(harmonic_decompose(k, 2, Series::B).report.all_pass());
    }
}

TEST_CASE("Laplacian commutator") {
    CHECK(verify_laplacian_commutator(2, Series::D, 4).all_pass());
    CHECK(verify_laplacian_commutator(3, Series::D, 3).all_pass());
    // For the B series the operator is 1 + 2n + 2D.
    const ConformalOps ops(Series::B, 2);
    CHECK(bracket(ops.laplacian(), ops.mul(ops.eta())) == ops.one() * Rat(5) + ops.D() * Rat(2));
}

TEST_CASE("classification of b") {
    auto c = classify_b(W(Series::D, "1,0"), Rat(1));
    CHECK_FALSE(c.generic);
    CHECK(c.violated->name == "n-1-N/2");
    CHECK(classify_b(W(Series::D, "1,0"), Rat(5, 3)).generic);
    auto z = classify_b(WeightVec::zero(Series::D, 2), Rat(-2));
    CHECK_FALSE(z.generic);
    CHECK(z.sharp);
    CHECK(z.str() == "excluded(b in -N), reducible");
    CHECK(classify_b(W(Series::B, "1/2,1/2"), Rat(2)).violated->name == "n-N/2");
}

TEST_CASE("steps of the surjectivity argument") {
    for (auto [s, mu] : {std::pair{Series::D, "1,0"}, std::pair{Series::B, "1,0"}, std::pair{Series::B, "1/2,1/2"}})
        for (Rat b : {Rat(0), Rat(1, 3), Rat(-1)}) {
            INFO("mu = ", mu);
            auto mod = module(s, mu, b);
            for (int ell = 1; ell <= 3; ++ell) {
                CHECK(verify_eta_containment(mod, ell).all_pass());
                CHECK(verify_j_identity(mod, ell, 17u + static_cast<unsigned>(ell)).all_pass());
            }
        }
}
