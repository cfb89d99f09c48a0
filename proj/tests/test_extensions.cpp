#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cremona/extensions.hpp"

using namespace cremona;

namespace {

AbelianGroup G(std::initializer_list<long long> factors) {
    return AbelianGroup::from_cyclic_factors(factors);
}

std::set<AbelianGroup> middles_of(const AbelianGroup& h, const AbelianGroup& k) {
    std::set<AbelianGroup> out;
    for (const ExtensionMiddle& m : enumerate_extensions(h, k).middles) out.insert(m.group);
    return out;
}

}  // namespace

TEST_CASE("extension_exists on pinned cases") {
    CHECK(extension_exists(G({2}), G({2}), G({4})));
    CHECK(extension_exists(G({2}), G({2}), G({2, 2})));
    CHECK_FALSE(extension_exists(G({2, 2}), G({2, 2}), G({8, 2})));
    CHECK_FALSE(extension_exists(G({2}), G({3}), G({4})));  // order mismatch

    // middles of (Z2)^2 by (Z2)^3: exactly the valid shapes of the generic
    // five-term expansion at k=1, degenerate terms dropped
    const AbelianGroup h = G({2, 2});
    const AbelianGroup k = G({2, 2, 2});
    for (const AbelianGroup& g : abelian_groups_of_order(32)) {
        const bool expected = g == G({4, 4, 2}) || g == G({4, 2, 2, 2}) ||
                              g == G({2, 2, 2, 2, 2});
        CHECK(extension_exists(h, k, g) == expected);
    }
}

TEST_CASE("enumerate_extensions on pinned cases") {
    const ExtensionResult r1 = enumerate_extensions(G({2}), G({2}));
    REQUIRE(r1.middles.size() == 2);
    CHECK(r1.middles[0].group == G({2, 2}));
    CHECK(r1.middles[0].split);
    CHECK(r1.middles[1].group == G({4}));
    CHECK_FALSE(r1.middles[1].split);

    // coprime orders force splitting
    const ExtensionResult r2 = enumerate_extensions(G({2, 2}), G({3, 3, 3}));
    REQUIRE(r2.middles.size() == 1);
    CHECK(r2.middles[0].group == direct_product(G({2, 2}), G({3, 3, 3})));
    CHECK(r2.middles[0].split);

    CHECK(middles_of(G({2, 2}), G({4, 4, 2})) ==
          std::set<AbelianGroup>{G({8, 8, 2}), G({8, 4, 4}), G({8, 4, 2, 2}),
                                 G({4, 4, 4, 2}), G({4, 4, 2, 2, 2})});
}

TEST_CASE("enumeration caps report truncation") {
    const ExtensionResult r = enumerate_extensions(G({2, 2}), G({4, 4, 2}), 2);
    CHECK(r.truncated);
    CHECK(r.middles.size() == 2);
    CHECK_FALSE(enumerate_extensions(G({2, 2}), G({4, 4, 2}), 100).truncated);
}

TEST_CASE("membership matches extension_exists exhaustively") {
    const auto groups = all_abelian_groups_up_to(256);
    for (const AbelianGroup& h : groups)
        for (const AbelianGroup& k : groups) {
            const long long order = h.order() * k.order();
            if (order > 256) continue;
            const auto middles = middles_of(h, k);
            for (const AbelianGroup& g : abelian_groups_of_order(order))
                CHECK(middles.count(g) == (extension_exists(h, k, g) ? 1u : 0u));
        }
}

TEST_CASE("existence is symmetric and the split middle is unique") {
    const auto groups = all_abelian_groups_up_to(128);
    for (const AbelianGroup& h : groups)
        for (const AbelianGroup& k : groups) {
            if (h.order() * k.order() > 256) continue;
            const ExtensionResult r = enumerate_extensions(h, k);
            CHECK(middles_of(k, h) == middles_of(h, k));
            int split_count = 0;
            for (const ExtensionMiddle& m : r.middles) {
                if (m.split) {
                    ++split_count;
                    CHECK(m.group == direct_product(h, k));
                }
                CHECK(m.group.order() == h.order() * k.order());
                CHECK(m.group.rank() >= std::max(h.rank(), k.rank()));
                CHECK(m.group.rank() <= h.rank() + k.rank());
            }
            CHECK(split_count == 1);
        }
}

TEST_CASE("cyclic extensions split as Z/m+ x K- (desk-scale dichotomy)") {
    for (long long m = 1; m <= 16; ++m) {
        const AbelianGroup h = AbelianGroup::cyclic(m);
        for (const AbelianGroup& k : all_abelian_groups_up_to(64 / m)) {
            const auto quotient_types = subgroup_types(k);
            for (const ExtensionMiddle& mid : enumerate_extensions(h, k).middles) {
                const AbelianGroup& g = mid.group;
                bool ok = g == direct_product(h, k);
                for (long long mp = 2 * m; !ok && mp <= g.order(); mp += m) {
                    if (g.order() % mp != 0) continue;
                    for (const AbelianGroup& km : quotient_types)
                        if (km.order() == g.order() / mp &&
                            direct_product(AbelianGroup::cyclic(mp), km) == g)
                            ok = true;
                }
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("max_cyclic_split peels off the exponent") {
    const CyclicSplit s1 = max_cyclic_split(G({4, 2}));
    CHECK(s1.cyclic_order == 4);
    CHECK(s1.complement == G({2}));

    const CyclicSplit s2 = max_cyclic_split(G({6}));
    CHECK(s2.cyclic_order == 6);
    CHECK(s2.complement.is_trivial());

    const CyclicSplit s3 = max_cyclic_split(G({2, 2, 4, 3}));
    CHECK(s3.cyclic_order == 12);
    CHECK(s3.complement == G({2, 2}));

    CHECK_THROWS_AS(max_cyclic_split(AbelianGroup{}), std::invalid_argument);

    for (const AbelianGroup& g : all_abelian_groups_up_to(256)) {
        if (g.is_trivial()) continue;
        const CyclicSplit s = max_cyclic_split(g);
        CHECK(direct_product(AbelianGroup::cyclic(s.cyclic_order), s.complement) == g);
        CHECK(s.complement.rank() == g.rank() - 1);
        CHECK(s.cyclic_order == g.invariant_factors().back());
    }
}
