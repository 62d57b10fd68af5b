#include "confrep/irrep.hpp"
#include "confrep/spectral.hpp"

#include <map>

#include "doctest.h"

using namespace confrep;

namespace {

WeightVec W(Series s, const char* text) { return WeightVec::parse(s, text); }

std::map<std::vector<Rat>, int> weight_multiset(const IrrepData& v) {
    std::map<std::vector<Rat>, int> out;
    for (const auto& w : v.weights) ++out[w.coords()];
    return out;
}

// Multiset invariant under the simple reflections of the Weyl group.
bool weyl_invariant(const IrrepData& v) {
    const auto ms = weight_multiset(v);
    const int n = v.mu.rank();
    const bool B = v.mu.series() == Series::B;
    for (const auto& [w, mult] : ms) {
        std::vector<std::vector<Rat>> images;
        for (int i = 0; i + 1 < n; ++i) {
            auto x = w;
            std::swap(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i + 1)]);
            images.push_back(x);
        }
        auto x = w;
        if (B) {
            x[static_cast<std::size_t>(n - 1)] = -x[static_cast<std::size_t>(n - 1)];
        } else {
            auto a = x[static_cast<std::size_t>(n - 2)], b = x[static_cast<std::size_t>(n - 1)];
            x[static_cast<std::size_t>(n - 2)] = -b;
            x[static_cast<std::size_t>(n - 1)] = -a;
        }
        images.push_back(x);
        for (const auto& y : images) {
            auto it = ms.find(y);
            if (it == ms.end() || it->second != mult) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("natural modules have the expected weights") {
    auto d = build_irrep(W(Series::D, "1,0"));
    CHECK(d.dim() == 4);
    std::map<std::vector<Rat>, int> expect{{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    CHECK(weight_multiset(d) == expect);

    auto b = build_irrep(W(Series::B, "1,0"));
    CHECK(b.dim() == 5);
    expect[{0, 0}] = 1;
    CHECK(weight_multiset(b) == expect);
}

TEST_CASE("trivial module has zero matrices") {
    for (Series s : {Series::D, Series::B}) {
        auto v = build_irrep(WeightVec::zero(s, 2));
        CHECK(v.dim() == 1);
        for (const auto& m : v.rep) CHECK(m.is_zero());
        CHECK(omega_matrix(v).is_zero());
    }
}

TEST_CASE("constructed irreps pass validation and match the Weyl dimension") {
    const std::vector<std::pair<Series, const char*>> cases{
        {Series::D, "1,0"},     {Series::D, "1,1"},     {Series::D, "1,-1"},   {Series::D, "2,0"},
        {Series::D, "1/2,1/2"}, {Series::D, "1/2,-1/2"}, {Series::D, "2,1"},    {Series::D, "1,1,0"},
        {Series::D, "1/2,1/2,1/2"}, {Series::B, "1,0"}, {Series::B, "1/2,1/2"}, {Series::B, "1,1"},
        {Series::B, "2,0"},     {Series::B, "3/2,1/2"}, {Series::B, "1"},      {Series::B, "1/2"},
        {Series::B, "3"},       {Series::B, "1,0,0"},   {Series::B, "1/2,1/2,1/2"}};
    for (const auto& [s, text] : cases) {
        INFO("mu = ", text);
        auto v = build_irrep(W(s, text));
        CHECK(static_cast<long>(v.dim()) == weyl_dim(v.mu));
        CHECK(weyl_invariant(v));
        Report r = validate_irrep(v);
        CHECK(r.all_pass());
    }
}

TEST_CASE("Casimir scalars") {
    CHECK(omega_matrix(build_irrep(W(Series::D, "1,0"))) == Rat(3) * SparseMat::identity(4));
    CHECK(omega_matrix(build_irrep(W(Series::D, "1,1"))) == Rat(4) * SparseMat::identity(3));
    auto spin = build_irrep(W(Series::B, "1/2,1/2"));
    CHECK(spin.dim() == 4);
    CHECK(omega_matrix(spin) == Rat(5, 2) * SparseMat::identity(4));
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(build_irrep(W(Series::D, "0,1")), std::invalid_argument);
    CHECK_THROWS_AS(build_irrep(W(Series::D, "3,2"), 10), std::length_error);
}

TEST_CASE("natural module helper agrees with the constructed V(eps_1) up to Casimir and commutant") {
    for (Series s : {Series::D, Series::B}) {
        auto nat = natural_module(s, 3);
        CHECK(validate_irrep(nat).all_pass());
    }
}

TEST_CASE("tensor with the natural module") {
    auto v = build_irrep(W(Series::D, "1,0"));
    auto t = tensor_with_natural(v);
    CHECK(t.dim() == 16);
    // Commutant dimension equals the number of summands when they are pairwise distinct.
    CHECK(commutant_dimension(t) == pieri_decompose(v.mu).size());
    auto triv = tensor_with_natural(build_irrep(WeightVec::zero(Series::D, 2)));
    CHECK(triv.dim() == 4);
    CHECK(commutant_dimension(triv) == 1);
    CHECK_THROWS_AS(tensor_with_natural(v, 8), std::length_error);
}

TEST_CASE("irrep JSON round trip is exact") {
    auto v = build_irrep(W(Series::B, "1/2,1/2"));
    auto j = irrep_to_json(v);
    auto back = irrep_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.mu == v.mu);
    CHECK(back.weights == v.weights);
    CHECK(back.rep == v.rep);
    CHECK(back.highest == v.highest);
    j["matrices"][0]["label"] = "bogus";
    CHECK_THROWS(irrep_from_json(j));
}
