#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cremona/explicit_group.hpp"
#include "cremona/verify.hpp"

using namespace cremona;

namespace {

AbelianGroup G(std::initializer_list<long long> factors) {
    return AbelianGroup::from_cyclic_factors(factors);
}

}  // namespace

TEST_CASE("explicit group element arithmetic") {
    const ExplicitGroup e({4, 2});
    CHECK(e.order() == 8);
    CHECK(e.element(0) == std::vector<long long>{0, 0});
    CHECK(e.element(5) == std::vector<long long>{1, 1});
    CHECK(e.index_of({1, 1}) == 5);
    CHECK(e.index_of({5, 3}) == e.index_of({1, 1}));
    CHECK(e.add(e.index_of({3, 1}), e.index_of({2, 1})) == e.index_of({1, 0}));
    CHECK_THROWS_AS(ExplicitGroup({1}), std::invalid_argument);
}

TEST_CASE("oracle subgroup types on pinned groups") {
    CHECK(oracle_subgroup_types(ExplicitGroup({4})) ==
          std::vector<AbelianGroup>{AbelianGroup{}, G({2}), G({4})});
    CHECK(oracle_subgroup_types(ExplicitGroup({2, 2})) ==
          std::vector<AbelianGroup>{AbelianGroup{}, G({2}), G({2, 2})});

    const auto records = oracle_all_subgroups(ExplicitGroup({4, 2}), 64);
    CHECK(records.size() == 8);  // 8 subgroups, 5 distinct types
    CHECK(oracle_subgroup_types(ExplicitGroup({4, 2})).size() == 5);
}

TEST_CASE("oracle quotient types via the stacked relation matrix") {
    CHECK(oracle_quotient_type(ExplicitGroup({4}), {{2}}) == G({2}));
    CHECK(oracle_quotient_type(ExplicitGroup({2, 2}), {{1, 1}}) == G({2}));
    CHECK(oracle_quotient_type(ExplicitGroup({4, 4}), {{2, 2}}) == G({4, 2}));
    CHECK(oracle_quotient_type(ExplicitGroup({4, 4}), {}) == G({4, 4}));
}

TEST_CASE("oracle extension sets on pinned pairs") {
    CHECK(oracle_extensions(G({2}), G({2})) == std::set<AbelianGroup>{G({4}), G({2, 2})});
    CHECK(oracle_extensions(G({2, 2}), G({2})) ==
          std::set<AbelianGroup>{G({2, 2, 2}), G({4, 2})});
    CHECK(oracle_extensions(G({3}), G({2})) == std::set<AbelianGroup>{G({6})});
}

TEST_CASE("oracle refuses orders beyond the bound") {
    CHECK_THROWS_AS(oracle_subgroup_types(ExplicitGroup({128}), 64), OracleBoundError);
    CHECK_THROWS_AS(oracle_extensions(G({64}), G({2}), 64), OracleBoundError);
    CHECK_THROWS_AS(oracle_subgroup_types(ExplicitGroup({4}), 100000), OracleBoundError);
    CHECK(oracle_hard_limit() <= 512);
}

TEST_CASE("subgroup and quotient type multisets coincide (duality)") {
    for (const AbelianGroup& g : all_abelian_groups_up_to(64)) {
        std::map<AbelianGroup, int> subs, quots;
        for (const SubgroupRecord& rec : cached_subgroup_records(g, 64)) {
            ++subs[rec.sub_type];
            ++quots[rec.quot_type];
            CHECK(rec.sub_type.order() * rec.quot_type.order() == g.order());
        }
        CHECK(subs == quots);
    }
}

TEST_CASE("every check passes at a reduced bound") {
    const std::map<std::string, long long> reduced = {
        {"cyclic-splitting", 64},   {"fulton-oracle", 16},
        {"lemma-r2-4", 128},        {"lr-paper-expansions", 3},
        {"prop-cr1-cr1", 64},       {"prop-cr1-cr2", 16},
        {"rank-sharpness", 64},     {"subgroup-criterion", 32},
        {"table1-closure", 128},
    };
    REQUIRE(check_names().size() == reduced.size());
    for (const std::string& name : check_names()) {
        CheckOptions options;
        options.bound = reduced.at(name);
        const VerificationReport report = run_check(name, options);
        INFO(name);
        CHECK(report.pass);
        CHECK(report.cases > 0);
        CHECK(report.counterexamples.empty());
    }
}

TEST_CASE("unknown check name is rejected") {
    CHECK_THROWS_AS(run_check("no-such-check"), std::invalid_argument);
    CHECK_THROWS_AS(run_check("fulton-oracle", {.bound = 0}), std::invalid_argument);
}

TEST_CASE("oracle-backed checks restrict monotonically") {
    for (const long long bound : {16LL, 32LL}) {
        CheckOptions options;
        options.bound = bound;
        CHECK(run_check("fulton-oracle", options).pass);
        CHECK(run_check("subgroup-criterion", options).pass);
    }
}

TEST_CASE("reports are deterministic given identical bounds") {
    CheckOptions options;
    options.bound = 16;
    const VerificationReport a = run_check("fulton-oracle", options);
    const VerificationReport b = run_check("fulton-oracle", options);
    CHECK(a.cases == b.cases);
    CHECK(a.pass == b.pass);
    CHECK(a.params == b.params);
    CHECK(a.counterexamples.size() == b.counterexamples.size());
    CHECK(a.notes == b.notes);
}

TEST_CASE("the expansion check documents exactly one discrepancy note") {
    CheckOptions options;
    options.bound = 4;
    const VerificationReport report = run_check("lr-paper-expansions", options);
    CHECK(report.pass);
    REQUIRE(report.notes.size() == 1);
    CHECK(report.notes[0].find("[k+2,2,1]") != std::string::npos);
}

TEST_CASE("report serialization shape") {
    CheckOptions options;
    options.bound = 16;
    const auto j = report_to_json(run_check("fulton-oracle", options));
    CHECK(j["check"] == "fulton-oracle");
    CHECK(j["status"] == "pass");
    CHECK(j["cases"].get<long long>() > 0);
    CHECK(j["counterexamples"].is_array());
    CHECK(j["notes"].is_array());
    CHECK(j["params"]["bound"] == 16);
    CHECK(j["seconds"].is_number());
}
