#include "confrep/suite.hpp"

#include "doctest.h"

using namespace confrep;

TEST_CASE("injected fault is reported exactly once") {
    SuiteOptions clean;
    clean.only = {3};
    auto base = run_suite(clean);
    REQUIRE(base.size() == 1);
    CHECK(base[0].pass());

    SuiteOptions faulty = clean;
    faulty.inject_fault = true;
    auto bad = run_suite(faulty);
    REQUIRE(bad.size() == 1);
    auto failed = bad[0].report.failed();
    REQUIRE(failed.size() == 1);
    CHECK(failed[0].find("closed form of image of J_{1}") != std::string::npos);
}

TEST_CASE("suite JSON is deterministic") {
    SuiteOptions o;
    o.only = {1, 4};
    CHECK(suite_json(run_suite(o)).dump() == suite_json(run_suite(o)).dump());
    CHECK(suite_json(run_suite(o))["schema"] == 1);
}
