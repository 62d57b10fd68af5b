#include "confrep/weights.hpp"

#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

using namespace confrep;

namespace {

WeightVec W(Series s, const char* t) { return WeightVec::parse(s, t); }

// Independent oracle: every dominant mu +- eps_i, plus mu itself for B when a zero
// weight survives, i.e. when mu_n > 0.
std::set<WeightVec> pieri_oracle(const WeightVec& mu) {
    std::set<WeightVec> out;
    const int n = mu.rank();
    for (int i = 1; i <= n; ++i)
        for (int sgn : {1, -1}) {
            WeightVec nu = mu + Rat(sgn) * WeightVec::unit(mu.series(), n, i);
            if (is_dominant(nu)) out.insert(nu);
        }
    if (mu.series() == Series::B && mu[n].sign() > 0) out.insert(mu);
    return out;
}

// Dimension of V(eps_1) (x) V(mu) by the Weyl formula alone.
long tensor_dim(const WeightVec& mu) {
    long nat = mu.series() == Series::D ? 2 * mu.rank() : 2 * mu.rank() + 1;
    return nat * weyl_dim(mu);
}

std::vector<WeightVec> sample_weights(Series s, int n) {
    std::vector<WeightVec> out;
    std::vector<Rat> c(n);
    // all dominant weights with coordinates in {-3/2..5/2} step 1/2
    std::vector<Rat> vals;
    for (int k = -3; k <= 5; ++k) vals.push_back(Rat(k, 2));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            WeightVec w(s, c);
            if (is_dominant(w)) out.push_back(w);
            return;
        }
        for (const auto& v : vals) {
            c[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("dominance") {
    CHECK(is_dominant(W(Series::D, "1,-1")));
    CHECK(is_dominant(W(Series::D, "1/2,-1/2")));
    CHECK_FALSE(is_dominant(W(Series::D, "1,-2")));
    CHECK_FALSE(is_dominant(W(Series::D, "1,1/2")));
    CHECK(is_dominant(W(Series::B, "3/2,1/2")));
    CHECK_FALSE(is_dominant(W(Series::B, "1,-1")));
    CHECK_FALSE(is_dominant(W(Series::B, "1/2,0")));
    CHECK_THROWS(W(Series::D, "1/3,0"));
}

TEST_CASE("Weyl dimensions of familiar modules") {
    CHECK(weyl_dim(W(Series::D, "1,0,0")) == 6);
    CHECK(weyl_dim(W(Series::D, "1,1,0")) == 15);
    CHECK(weyl_dim(W(Series::D, "1/2,1/2,1/2")) == 4);
    CHECK(weyl_dim(W(Series::D, "2,0,0")) == 20);
    CHECK(weyl_dim(W(Series::B, "1,0")) == 5);
    CHECK(weyl_dim(W(Series::B, "1/2,1/2")) == 4);
    CHECK(weyl_dim(W(Series::B, "1,1")) == 10);
    CHECK(weyl_dim(W(Series::B, "2,0,0")) == 27);
    CHECK(weyl_dim(W(Series::B, "1,0,0,0")) == 9);
}

TEST_CASE("jump sequence") {
    auto j = jump_sequence(W(Series::D, "2,2,1,-1"));
    CHECK(j.points() == std::vector<int>{0, 2, 3, 4});
    CHECK(j.leading_block() == 2);
    CHECK(j.blocks() == 3);
    CHECK_THROWS(jump_sequence(W(Series::D, "0,1")));
}

TEST_CASE("Pieri rule matches the dominant-shift oracle and dimensions add up") {
    for (Series s : {Series::D, Series::B})
        for (int n = 2; n <= 4; ++n)
            for (const auto& mu : sample_weights(s, n)) {
                std::set<WeightVec> got;
                long dim = 0;
                for (const auto& ps : pieri_decompose(mu)) {
                    CHECK(got.insert(ps.weight).second);
                    dim += weyl_dim(ps.weight);
                }
                CHECK_MESSAGE(got == pieri_oracle(mu), "mu = " << mu.str());
                CHECK_MESSAGE(dim == tensor_dim(mu), "mu = " << mu.str());
            }
}

TEST_CASE("split Casimir closed form equals the Casimir difference") {
    for (Series s : {Series::D, Series::B})
        for (int n = 2; n <= 4; ++n) {
            const Rat c_nat = casimir_eigenvalue(WeightVec::unit(s, n, 1));
            CHECK(c_nat == Rat(s == Series::D ? 2 * n - 1 : 2 * n));
            for (const auto& mu : sample_weights(s, n))
                for (const auto& ps : pieri_decompose(mu)) {
                    Rat expect = (casimir_eigenvalue(ps.weight) - casimir_eigenvalue(mu) - c_nat) / Rat(2);
                    CHECK_MESSAGE(split_casimir_eigenvalue(mu, ps) == expect, "mu = " << mu.str());
                }
        }
}

TEST_CASE("spectrum merges and sorts") {
    auto sp = omega_tilde_spectrum(W(Series::D, "0,0,0"));
    REQUIRE(sp.entries().size() == 1);
    CHECK(sp.entries()[0].eigenvalue == Rat(0));
    CHECK(sp.total_multiplicity() == 6);
    auto sp2 = omega_tilde_spectrum(W(Series::B, "1,0"));
    CHECK(sp2.total_multiplicity() == 25);
    for (std::size_t i = 1; i < sp2.entries().size(); ++i)
        CHECK(sp2.entries()[i - 1].eigenvalue < sp2.entries()[i].eigenvalue);
}

TEST_CASE("critical central charges") {
    auto z = critical_b_set(W(Series::D, "0,0,0"));
    CHECK(z.sharp);
    CHECK(z.violated_by(Rat(-2)).has_value());
    CHECK_FALSE(z.violated_by(Rat(1, 2)).has_value());
    auto d = critical_b_set(W(Series::D, "1,0,0"));
    CHECK(d.violated_by(Rat(3, 2)).has_value());  // n-1-N/2 with n = 3
    CHECK(d.violated_by(Rat(4)).has_value());     // 1+6-1-1-N
    CHECK_FALSE(d.violated_by(Rat(5, 2)).has_value());
    auto sp = critical_b_set(W(Series::D, "1,-1"));
    CHECK(sp.violated_by(Rat(2)).has_value());  // special case mu_1+n-1
    CHECK_FALSE(sp.violated_by(Rat(3)).has_value());
    auto bh = critical_b_set(W(Series::B, "1/2,1/2"));
    CHECK(bh.parts.size() == 1);
    auto b = critical_b_set(W(Series::B, "1,0"));
    CHECK(b.violated_by(Rat(4)).has_value());
    CHECK_FALSE(b.violated_by(Rat(5)).has_value());
}
