#include <doctest.h>

#include <stdexcept>
#include <string>

#include "hypspec/json_io.hpp"
#include "hypspec/verify.hpp"

using namespace hypspec;

TEST_SUITE("verify") {

TEST_CASE("every suite passes on a seeded sample set") {
    struct Plan {
        const char* name;
        long samples;
    };
    const Plan plans[] = {{"distortion", 200},
                          {"kernel-norms", 4},
                          {"exclusion-chain", 100},
                          {"transplant", 300},
                          {"duality", 40}};
    for (const Plan& plan : plans) {
        CAPTURE(plan.name);
        const SuiteReport rep = run_suite(plan.name, plan.samples, 20260814u);
        CHECK(rep.passed);
        CHECK(rep.suite == plan.name);
        CHECK(rep.samples == plan.samples);
        CHECK(rep.warnings.empty());
        REQUIRE(!rep.checks.empty());
        for (const CheckResult& check : rep.checks) {
            CAPTURE(check.name);
            CHECK(check.violations == 0);
            CHECK(check.samples > 0);
            CHECK(check.worst_margin >= -1e-9);
        }
    }
}

TEST_CASE("suite catalog") {
    const auto& names = suite_names();
    CHECK(names.size() == 5);
    for (const char* expect :
         {"distortion", "kernel-norms", "exclusion-chain", "transplant", "duality"}) {
        bool found = false;
        for (const auto& n : names) found = found || n == expect;
        CHECK(found);
    }
}

TEST_CASE("zero samples is a vacuous pass with a warning") {
    const SuiteReport rep = run_suite("distortion", 0, 7u);
    CHECK(rep.passed);
    REQUIRE(!rep.warnings.empty());
    for (const CheckResult& check : rep.checks) {
        CHECK(check.samples == 0);
        CHECK(check.violations == 0);
        CHECK(check.worst_margin == 0.0);
    }
}

TEST_CASE("invalid requests are rejected") {
    CHECK_THROWS_AS(run_suite("distortion", -1, 1u), std::invalid_argument);
    try {
        run_suite("no-such-suite", 10, 1u);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("distortion") != std::string::npos);
        CHECK(what.find("duality") != std::string::npos);
    }
}

TEST_CASE("reports are deterministic in the seed") {
    const SuiteReport a = run_suite("transplant", 50, 99u);
    const SuiteReport b = run_suite("transplant", 50, 99u);
    const std::string ja = json_io::dump_17(json_io::suite_to_json(a));
    const std::string jb = json_io::dump_17(json_io::suite_to_json(b));
    CHECK(ja == jb);
    const SuiteReport c = run_suite("transplant", 50, 100u);
    CHECK(ja != json_io::dump_17(json_io::suite_to_json(c)));
}

}  // TEST_SUITE
