#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "cremona/classify.hpp"

using namespace cremona;

namespace {

AbelianGroup G(std::initializer_list<long long> factors) {
    return AbelianGroup::from_cyclic_factors(factors);
}

}  // namespace

TEST_CASE("line groups are cyclic or klein") {
    CHECK(is_cr1(G({12})));
    CHECK(is_cr1(G({2, 2})));
    CHECK(is_cr1(AbelianGroup{}));
    CHECK_FALSE(is_cr1(G({2, 4})));
    CHECK_FALSE(is_cr1(G({2, 2, 2})));
}

TEST_CASE("plane family matching") {
    const auto f1 = cr2_family(G({4, 2, 2}));
    REQUIRE(f1);
    CHECK(f1->family == 2);
    CHECK(f1->n == 2);

    const auto f2 = cr2_family(G({3, 3, 3}));
    REQUIRE(f2);
    CHECK(f2->family == 4);

    CHECK_FALSE(cr2_family(G({2, 2, 2, 2, 2})));

    const auto f3 = cr2_family(G({2, 2, 2, 2}));
    REQUIRE(f3);
    CHECK(f3->family == 5);

    const auto f4 = cr2_family(G({4, 4, 2}));
    REQUIRE(f4);
    CHECK(f4->family == 3);

    const auto f5 = cr2_family(G({6}));
    REQUIRE(f5);
    CHECK(f5->family == 1);
    CHECK(f5->n == 6);
    CHECK(f5->m == 1);

    // rank-3 shape with an odd leading factor: Z6 x (Z2)^2 = Z2n x (Z2)^2, n=3
    const auto f6 = cr2_family(G({6, 2, 2}));
    REQUIRE(f6);
    CHECK(f6->family == 2);
    CHECK(f6->n == 3);
}

TEST_CASE("product table witnesses") {
    const auto w1 = product_type_witness(G({4, 4, 2, 2, 2}));
    REQUIRE(w1);
    CHECK(w1->row == 6);
    CHECK(w1->g1 == G({2, 2}));
    CHECK(w1->g2 == G({4, 4, 2}));

    const auto w2 = product_type_witness(G({3, 3, 3, 3}));
    REQUIRE(w2);
    CHECK(w2->row == 3);
    CHECK(w2->parameters == std::vector<long long>{1});
    CHECK(w2->g1 == G({3}));
    CHECK(w2->g2 == G({3, 3, 3}));

    CHECK_FALSE(product_type_witness(G({3, 3, 3, 3, 3})));

    const auto w3 = product_type_witness(G({2, 2, 2, 2, 2, 2}));
    REQUIRE(w3);
    CHECK(w3->row == 7);
    CHECK(w3->g1 == G({2, 2}));
    CHECK(w3->g2 == G({2, 2, 2, 2}));

    const auto w4 = product_type_witness(G({2, 2, 4, 6}));
    REQUIRE(w4);
    CHECK(w4->row == 4);
    CHECK(w4->parameters == std::vector<long long>{2, 3});
}

TEST_CASE("terminal admissibility") {
    const TerminalVerdict t1 = terminal_admissible(G({2, 2, 4, 6}));
    CHECK(t1.admissible);
    CHECK(t1.clause == "klein*2n*2m");
    CHECK(t1.n == 2);
    CHECK(t1.m == 3);

    const TerminalVerdict t2 = terminal_admissible(G({5, 25, 5}));
    CHECK(t2.admissible);
    CHECK(t2.clause == "rank<=3");

    CHECK_FALSE(terminal_admissible(G({2, 2, 2, 2, 2})).admissible);
    CHECK(terminal_admissible(G({2, 2, 2, 2})).admissible);  // n = m = 1
}

TEST_CASE("genus-1 action rows") {
    const auto r1 = elliptic_action_rows(G({2, 2, 2}));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == EllipticActionRow{4, 4, true});

    const auto r2 = elliptic_action_rows(G({2, 4}));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == EllipticActionRow{1, 8, false});
    CHECK(r2[1] == EllipticActionRow{6, 2, true});

    CHECK(elliptic_action_rows(G({2, 2, 2, 2})).empty());
    CHECK(elliptic_action_rows(AbelianGroup{}) ==
          std::vector<EllipticActionRow>{{1, 1, false}});
    CHECK(elliptic_action_rows(G({3, 3})).size() == 2);  // translations + row 8
}

TEST_CASE("circle and sphere actions") {
    CHECK_FALSE(can_act_on_circle(G({6, 2})));
    CHECK(can_act_on_sphere2(G({6, 2})));
    CHECK_FALSE(can_act_on_circle(G({2, 2, 2})));
    CHECK(can_act_on_sphere2(G({2, 2, 2})));
    CHECK_FALSE(can_act_on_circle(G({3, 3})));
    CHECK_FALSE(can_act_on_sphere2(G({3, 3})));
    CHECK(can_act_on_circle(G({5})));
    CHECK(can_act_on_sphere2(G({5})));
    CHECK(can_act_on_circle(G({2, 2})));
    CHECK(can_act_on_sphere2(G({2, 2})));
    CHECK_FALSE(can_act_on_sphere2(G({4, 4})));
}

TEST_CASE("k3 type against a supplied list") {
    const std::vector<AbelianGroup> list = {G({4, 4, 4}), G({8, 4, 2}), G({4, 2, 2, 2})};

    const auto t1 = k3_type_check(G({4, 4, 4, 4}), list);
    REQUIRE(t1);
    CHECK(t1->m == 4);
    CHECK(t1->base == G({4, 4, 4}));

    const auto t2 = k3_type_check(G({8, 4, 2}), list);
    REQUIRE(t2);
    CHECK(t2->m == 1);
    CHECK(t2->base == G({8, 4, 2}));

    CHECK_FALSE(k3_type_check(G({7, 7, 7, 7, 7}), list));
    CHECK_THROWS_AS(k3_type_check(G({2}), {}), std::invalid_argument);
}

TEST_CASE("rank bounds per setting") {
    CHECK(rank_bound_check(G({2, 2, 2, 2, 3, 3, 3}), RankSetting::surface));
    CHECK_FALSE(rank_bound_check(G({5, 5, 5}), RankSetting::surface));
    CHECK(rank_bound_check(G({2, 2, 2, 2, 2, 2}), RankSetting::threefold));
    CHECK_FALSE(rank_bound_check(G({2, 2, 2, 2, 2, 2, 2}), RankSetting::threefold));
    // the dimension-n bound specializes to the same numbers at n = 2 and 3
    CHECK(rank_bound_check_general(G({2, 2, 2, 2}), 2));
    CHECK_FALSE(rank_bound_check_general(G({5, 5, 5}), 2));
    CHECK(rank_bound_check_general(G({3, 3, 3, 3}), 3));
    CHECK_FALSE(rank_bound_check_general(G({3, 3, 3, 3, 3}), 3));
    CHECK_THROWS_AS(rank_bound_check_general(G({2}), 0), std::invalid_argument);
}

TEST_CASE("classify assembles the verdict") {
    const ClassificationVerdict v1 = classify(G({2, 2, 2, 2, 2, 2}));
    REQUIRE(v1.product_type);
    CHECK(v1.product_type->row == 7);
    CHECK_FALSE(v1.terminal.admissible);
    CHECK_FALSE(v1.cr2);
    CHECK_FALSE(v1.k3_checked);

    const ClassificationVerdict v2 = classify(G({3}));
    CHECK(v2.cr1);
    REQUIRE(v2.cr2);
    CHECK(v2.cr2->family == 1);
    REQUIRE(v2.product_type);
    CHECK(v2.product_type->row == 1);
    CHECK(v2.circle_action);

    const ClassificationVerdict v3 = classify(G({2, 2, 2, 4, 6}));
    CHECK(v3.product_type);
    CHECK(v3.elliptic_rows.empty());
}

TEST_CASE("pattern match and splitting search agree at desk scale") {
    // the cross-check inside product_type_witness throws on any disagreement
    for (const AbelianGroup& g : all_abelian_groups_up_to(1024)) {
        if (g.primary().size() > 3) continue;
        (void)product_type_witness(g);
    }
}

TEST_CASE("closure and monotonicity at reduced bounds") {
    for (const AbelianGroup& g : table1_list(128))
        for (const AbelianGroup& s : subgroup_types(g)) CHECK(product_type_witness(s));
    for (const AbelianGroup& g : cr2_list(64))
        for (const AbelianGroup& s : subgroup_types(g)) CHECK(cr2_family(s));
    for (const AbelianGroup& g : all_abelian_groups_up_to(256)) {
        if (is_cr1(g)) CHECK(cr2_family(g));
        if (cr2_family(g)) CHECK(product_type_witness(g));
        if (terminal_admissible(g).admissible) CHECK(product_type_witness(g));
        for (const EllipticActionRow& row : elliptic_action_rows(g)) {
            (void)row;
            CHECK(cr2_family(g));
        }
    }
}

TEST_CASE("product table matches its literal row parameterization") {
    const long long bound = 512;
    std::set<AbelianGroup> literal;
    for (long long k = 1; k <= bound; ++k)
        for (long long l = 1; k * l <= bound; ++l)
            for (long long m = 1; k * l * m <= bound; ++m)
                literal.insert(AbelianGroup::from_cyclic_factors({k, l, m}));
    for (long long k = 1; 64 * k <= bound; ++k)
        literal.insert(AbelianGroup::from_cyclic_factors({2 * k, 4, 4, 2}));
    for (long long k = 1; 81 * k <= bound; ++k)
        literal.insert(AbelianGroup::from_cyclic_factors({3 * k, 3, 3, 3}));
    for (long long k = 1; 16 * k <= bound; ++k)
        for (long long l = 1; 16 * k * l <= bound; ++l)
            literal.insert(AbelianGroup::from_cyclic_factors({2 * k, 2 * l, 2, 2}));
    for (long long n = 1; 32 * n <= bound; ++n)
        literal.insert(AbelianGroup::from_cyclic_factors({2 * n, 2, 2, 2, 2}));
    literal.insert(AbelianGroup::from_cyclic_factors({4, 4, 2, 2, 2}));
    literal.insert(AbelianGroup::from_cyclic_factors({2, 2, 2, 2, 2, 2}));

    const auto matched = table1_list(bound);
    CHECK(std::set<AbelianGroup>(matched.begin(), matched.end()) == literal);
}

TEST_CASE("plane list matches its literal family parameterization") {
    const long long bound = 256;
    std::set<AbelianGroup> literal;
    for (long long n = 1; n <= bound; ++n)
        for (long long m = 1; n * m <= bound; ++m)
            literal.insert(AbelianGroup::from_cyclic_factors({n, m}));
    for (long long n = 1; 8 * n <= bound; ++n)
        literal.insert(AbelianGroup::from_cyclic_factors({2 * n, 2, 2}));
    literal.insert(AbelianGroup::from_cyclic_factors({4, 4, 2}));
    literal.insert(AbelianGroup::from_cyclic_factors({3, 3, 3}));
    literal.insert(AbelianGroup::from_cyclic_factors({2, 2, 2, 2}));

    const auto matched = cr2_list(bound);
    CHECK(std::set<AbelianGroup>(matched.begin(), matched.end()) == literal);
}

TEST_CASE("k3 list file parsing") {
    std::istringstream good("# header\n  Z4 x Z4 x Z4  # fermat\n\nZ2^5\n");
    const auto list = load_k3_list(good);
    REQUIRE(list.size() == 2);
    CHECK(list[0] == G({4, 4, 4}));
    CHECK(list[1] == G({2, 2, 2, 2, 2}));

    std::istringstream bad("Z4\nZ0 x Z2\n");
    CHECK_THROWS_WITH_AS(load_k3_list(bad), doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("the shipped k3 list parses and is self-consistent") {
    const auto list = load_k3_list_file(std::string(TEST_DATA_DIR) + "/k3_groups.txt");
    REQUIRE(list.size() >= 10);
    for (const AbelianGroup& h : list) {
        const auto self = k3_type_check(h, list);
        REQUIRE(self);
        CHECK(self->m == 1);
        CHECK(self->base == h);
    }
    // the quartic instance: a rank-4 group that is not of product type
    const auto t = k3_type_check(G({4, 4, 4, 4}), list);
    REQUIRE(t);
    CHECK(t->m == 4);
    CHECK(t->base == G({4, 4, 4}));
    CHECK_FALSE(product_type_witness(G({4, 4, 4, 4})));
}
