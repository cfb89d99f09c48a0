#include "cremona/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "cremona/classify.hpp"
#include "cremona/explicit_group.hpp"
#include "cremona/extensions.hpp"

namespace cremona {

namespace {

std::string group_set_to_string(const std::set<AbelianGroup>& groups) {
    std::string s = "{";
    bool first = true;
    for (const AbelianGroup& g : groups) {
        if (!first) s += ", ";
        first = false;
        s += g.to_string();
    }
    return s + "}";
}

std::set<AbelianGroup> middle_set(const ExtensionResult& r) {
    std::set<AbelianGroup> out;
    for (const ExtensionMiddle& m : r.middles) out.insert(m.group);
    return out;
}

// A template term with symbolic entries already instantiated; kept only if it
// is a genuine partition (nonnegative, weakly decreasing; trailing zeros drop).
std::optional<Partition> instantiate_term(const std::vector<int>& raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) return std::nullopt;
        if (i > 0 && raw[i] > raw[i - 1]) return std::nullopt;
    }
    std::vector<int> parts(raw);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

using TermTemplate = std::vector<std::pair<std::vector<int>, long long>>;

PartitionMultiset instantiate_template(const TermTemplate& terms) {
    PartitionMultiset expected;
    for (const auto& [raw, coeff] : terms)
        if (auto p = instantiate_term(raw)) expected[*p] += coeff;
    return expected;
}

struct Check {
    VerificationReport report;

    explicit Check(std::string name, std::map<std::string, long long> params) {
        report.check = std::move(name);
        report.params = std::move(params);
    }

    void expect(bool ok, const std::string& input, const std::string& expected,
                const std::string& got) {
        ++report.cases;
        if (!ok) report.counterexamples.push_back({input, expected, got});
    }
};

VerificationReport check_fulton_oracle(long long bound) {
    Check chk("fulton-oracle", {{"bound", bound}});
    const auto groups = all_abelian_groups_up_to(bound);
    for (const AbelianGroup& h : groups)
        for (const AbelianGroup& k : groups) {
            if (h.order() * k.order() > bound) continue;
            const auto fast = middle_set(enumerate_extensions(h, k));
            const auto truth = oracle_extensions(h, k, bound);
            chk.expect(fast == truth, "H=" + h.to_string() + ", K=" + k.to_string(),
                       "oracle middles " + group_set_to_string(truth),
                       "enumerated middles " + group_set_to_string(fast));
        }
    return chk.report;
}

VerificationReport check_lr_paper_expansions(long long grid) {
    Check chk("lr-paper-expansions", {{"grid", grid}});

    auto compare = [&](const std::string& label, const PartitionMultiset& got,
                       const TermTemplate& templ) {
        const PartitionMultiset expected = instantiate_template(templ);
        chk.expect(expected == got, label, to_string(expected), to_string(got));
    };

    const Partition e2 = Partition({1, 1});
    for (int k = 1; k <= grid; ++k)
        for (int l = 1; l <= k; ++l)
            compare("case1 [k,l]*[1,1] k=" + std::to_string(k) + " l=" + std::to_string(l),
                    lr_product(Partition::normalize({k, l}), e2),
                    {{{k + 1, l + 1}, 1}, {{k + 1, l, 1}, 1}, {{k, l + 1, 1}, 1},
                     {{k, l, 1, 1}, 1}});

    for (int k = 1; k <= grid; ++k)
        compare("case2 [k,1,1]*[1,1] k=" + std::to_string(k),
                lr_product(Partition::normalize({k, 1, 1}), e2),
                {{{k + 1, 2, 1}, 1}, {{k + 1, 1, 1, 1}, 1}, {{k, 2, 2}, 1},
                 {{k, 2, 1, 1}, 1}, {{k, 1, 1, 1, 1}, 1}});

    compare("case3 [2,2,1]*[1,1]", lr_product(Partition({2, 2, 1}), e2),
            {{{3, 3, 1}, 1}, {{3, 2, 2}, 1}, {{3, 2, 1, 1}, 1}, {{2, 2, 2, 1}, 1},
             {{2, 2, 1, 1, 1}, 1}});

    for (int k = 1; k <= grid; ++k)
        compare("case4 [1,1,1]*[k] k=" + std::to_string(k),
                lr_product(Partition({1, 1, 1}), Partition({k})),
                {{{k + 1, 1, 1}, 1}, {{k, 1, 1, 1}, 1}});

    compare("case5 [1,1,1,1]*[1,1]", lr_product(Partition({1, 1, 1, 1}), e2),
            {{{2, 2, 1, 1}, 1}, {{2, 1, 1, 1, 1}, 1}, {{1, 1, 1, 1, 1, 1}, 1}});

    for (int k = 1; k <= grid; ++k) {
        const std::vector<Partition> factors = {Partition({k}), Partition({1, 1, 1}), e2};
        const PartitionMultiset got = lr_product_multi(factors);
        compare("triple [k]*[1,1,1]*[1,1] k=" + std::to_string(k), got,
                {{{k + 2, 1, 1, 1}, 1}, {{k + 1, 2, 1, 1}, 2}, {{k + 1, 1, 1, 1, 1}, 2},
                 {{k, 2, 2, 1}, 1}, {{k, 2, 1, 1, 1}, 1}, {{k, 1, 1, 1, 1, 1}, 1},
                 {{k + 2, 2, 1}, 1}, {{k + 1, 2, 2}, 1}});
        // the published term [k+1,2,1] must be absent: its size violates the grading
        if (auto bad = instantiate_term({k + 1, 2, 1}); bad && got.count(*bad))
            chk.expect(false, "triple [k]*[1,1,1]*[1,1] k=" + std::to_string(k),
                       "coefficient 0 at " + bad->to_string(),
                       "coefficient " + std::to_string(got.at(*bad)));
    }
    chk.report.notes.push_back(
        "triple product [k]*[1,1,1]*[1,1]: the published expansion lists a term "
        "[k+1,2,1] whose size k+4 violates the grading |lambda|=|mu|+|nu|=k+5; the "
        "computed expansion matches the corrected term [k+2,2,1] on the whole grid, "
        "with the remaining seven terms agreeing as printed");
    return chk.report;
}

VerificationReport check_prop_cr1_cr1(long long bound) {
    Check chk("prop-cr1-cr1", {{"bound", bound}});
    const auto line_groups = cr1_list(bound);
    for (const AbelianGroup& h : line_groups)
        for (const AbelianGroup& k : line_groups) {
            if (h.order() * k.order() > bound) continue;
            for (const ExtensionMiddle& m : enumerate_extensions(h, k).middles) {
                const auto fam = cr2_family(m.group);
                const bool ok = fam && (fam->family == 1 || fam->family == 2 || fam->family == 5);
                chk.expect(ok,
                           "H=" + h.to_string() + ", K=" + k.to_string() +
                               ", G=" + m.group.to_string(),
                           "plane family 1, 2 or 5",
                           fam ? "family " + std::to_string(fam->family) : "no family");
            }
        }
    return chk.report;
}

VerificationReport check_prop_cr1_cr2(long long bound) {
    const long long h_bound = bound / 2;
    Check chk("prop-cr1-cr2", {{"h_bound", h_bound}, {"k_bound", bound}});
    const auto line_groups = cr1_list(h_bound);
    const auto plane_groups = cr2_list(bound);
    for (const AbelianGroup& h : line_groups)
        for (const AbelianGroup& k : plane_groups)
            for (const auto* dir : {"H by K", "K by H"}) {
                const auto result = std::string(dir) == "H by K" ? enumerate_extensions(h, k)
                                                                 : enumerate_extensions(k, h);
                for (const ExtensionMiddle& m : result.middles)
                    chk.expect(product_type_witness(m.group).has_value(),
                               "H=" + h.to_string() + ", K=" + k.to_string() + " (" + dir +
                                   "), G=" + m.group.to_string(),
                               "product type", "no product decomposition");
            }
    return chk.report;
}

VerificationReport check_lemma_r2_4(long long bound) {
    Check chk("lemma-r2-4", {{"bound", bound}});
    long long rank4_middles = 0;
    for (const AbelianGroup& h : cr2_list(bound)) {
        const auto fam = cr2_family(h);
        if (fam->family != 1 && fam->family != 2 && fam->family != 5) continue;
        for (long long c = 1; c * h.order() <= bound; ++c)
            for (const ExtensionMiddle& m : enumerate_extensions(AbelianGroup::cyclic(c), h)
                                                .middles) {
                ++chk.report.cases;
                if (m.group.p_part(2).rank() != 4) continue;
                ++rank4_middles;
                bool odd_ok = true;
                for (const auto& [p, lam] : m.group.primary())
                    if (p > 2 && lam.length() > 2) odd_ok = false;
                const auto nm = klein_2n_2m_witness(m.group);
                if (!(odd_ok && nm))
                    chk.report.counterexamples.push_back(
                        {"H=" + h.to_string() + ", C=Z" + std::to_string(c) +
                             ", G=" + m.group.to_string(),
                         "G = (Z2)^2 x Z2n x Z2m with r(G_p) <= 2 for p > 2",
                         odd_ok ? "no (2n, 2m) decomposition" : "odd rank above 2"});
            }
    }
    chk.report.notes.push_back("middles with 2-rank exactly 4: " +
                               std::to_string(rank4_middles));
    return chk.report;
}

VerificationReport check_table1_closure(long long bound) {
    const long long cr2_bound = bound / 2;
    Check chk("table1-closure", {{"table1_bound", bound}, {"cr2_bound", cr2_bound}});
    for (const AbelianGroup& g : table1_list(bound))
        for (const AbelianGroup& s : subgroup_types(g))
            chk.expect(product_type_witness(s).has_value(),
                       "table1 member " + g.to_string() + ", subgroup type " + s.to_string(),
                       "product type", "escapes the product table");
    for (const AbelianGroup& g : cr2_list(cr2_bound))
        for (const AbelianGroup& s : subgroup_types(g))
            chk.expect(cr2_family(s).has_value(),
                       "plane member " + g.to_string() + ", subgroup type " + s.to_string(),
                       "a plane family", "escapes the plane list");
    chk.report.notes.push_back(
        "quotient types coincide with subgroup types for finite abelian groups; the "
        "duality is validated against the explicit oracle by the shipped unit tests");
    return chk.report;
}

VerificationReport check_subgroup_criterion(long long bound) {
    Check chk("subgroup-criterion", {{"bound", bound}});
    for (const AbelianGroup& g : all_abelian_groups_up_to(bound)) {
        const auto fast = subgroup_types(g);
        const auto truth = oracle_subgroup_types(ExplicitGroup::from_group(g), bound);
        chk.expect(fast == truth, "G=" + g.to_string(),
                   "oracle types " +
                       group_set_to_string({truth.begin(), truth.end()}),
                   "componentwise types " +
                       group_set_to_string({fast.begin(), fast.end()}));
    }
    return chk.report;
}

VerificationReport check_cyclic_splitting(long long bound) {
    Check chk("cyclic-splitting", {{"bound", bound}});
    for (long long m = 1; m <= bound; ++m) {
        const AbelianGroup h = AbelianGroup::cyclic(m);
        for (const AbelianGroup& k : all_abelian_groups_up_to(bound / m)) {
            const AbelianGroup split = direct_product(h, k);
            const auto quotient_types = subgroup_types(k);  // = quotient types of k
            for (const ExtensionMiddle& mid : enumerate_extensions(h, k).middles) {
                const AbelianGroup& g = mid.group;
                bool ok = g == split;
                for (long long mp = 2 * m; !ok && mp <= g.order(); mp += m) {
                    if (g.order() % mp != 0) continue;
                    const long long rest = g.order() / mp;
                    for (const AbelianGroup& km : quotient_types)
                        if (km.order() == rest &&
                            direct_product(AbelianGroup::cyclic(mp), km) == g) {
                            ok = true;
                            break;
                        }
                }
                chk.expect(ok, "H=Z" + std::to_string(m) + ", K=" + k.to_string() +
                                   ", G=" + g.to_string(),
                           "split, or Z/m+ x K- with m | m+, m+ > m",
                           "no compatible splitting");
            }
        }
    }
    return chk.report;
}

VerificationReport check_rank_sharpness(long long bound) {
    const long long table1_bound = 2 * bound;
    Check chk("rank-sharpness", {{"cr2_bound", bound}, {"table1_bound", table1_bound}});

    for (const AbelianGroup& g : cr2_list(bound))
        chk.expect(rank_bound_check(g, RankSetting::surface) && rank_bound_check_general(g, 2),
                   "plane group " + g.to_string(), "per-prime rank within (4, 3, 2)",
                   "rank bound violated");
    const struct {
        AbelianGroup g;
        int rank;
    } sharp[] = {
        {AbelianGroup::from_cyclic_factors({2, 2, 2, 2}), 4},
        {AbelianGroup::from_cyclic_factors({3, 3, 3}), 3},
        {AbelianGroup::from_cyclic_factors({5, 5}), 2},
    };
    for (const auto& w : sharp)
        chk.expect(cr2_family(w.g).has_value() && w.g.rank() == w.rank,
                   "sharp witness " + w.g.to_string(),
                   "in the plane list with rank " + std::to_string(w.rank),
                   "missing or not sharp");

    for (const AbelianGroup& g : table1_list(table1_bound))
        chk.expect(rank_bound_check(g, RankSetting::threefold) && rank_bound_check_general(g, 3),
                   "product-type group " + g.to_string(), "per-prime rank within (6, 4, 3)",
                   "rank bound violated");
    const AbelianGroup z2_6 = AbelianGroup::from_cyclic_factors({2, 2, 2, 2, 2, 2});
    chk.expect(product_type_witness(z2_6).has_value() && z2_6.rank() == 6,
               "sharp witness " + z2_6.to_string(), "in the product table with rank 6",
               "missing or not sharp");
    return chk.report;
}

struct CheckEntry {
    const char* name;
    long long default_bound;
    VerificationReport (*fn)(long long);
};

const CheckEntry kChecks[] = {
    {"cyclic-splitting", 512, check_cyclic_splitting},
    {"fulton-oracle", 64, check_fulton_oracle},
    {"lemma-r2-4", 512, check_lemma_r2_4},
    {"lr-paper-expansions", 6, check_lr_paper_expansions},
    {"prop-cr1-cr1", 256, check_prop_cr1_cr1},
    {"prop-cr1-cr2", 64, check_prop_cr1_cr2},
    {"rank-sharpness", 256, check_rank_sharpness},
    {"subgroup-criterion", 64, check_subgroup_criterion},
    {"table1-closure", 512, check_table1_closure},
};

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const CheckEntry& c : kChecks) names.emplace_back(c.name);
    return names;  // already sorted
}

VerificationReport run_check(const std::string& name, const CheckOptions& options) {
    for (const CheckEntry& c : kChecks)
        if (name == c.name) {
            const long long bound = options.bound.value_or(c.default_bound);
            if (bound < 1) throw std::invalid_argument("check bound must be positive");
            const auto start = std::chrono::steady_clock::now();
            VerificationReport report = c.fn(bound);
            const auto stop = std::chrono::steady_clock::now();
            report.pass = report.counterexamples.empty();
            report.seconds = std::chrono::duration<double>(stop - start).count();
            std::sort(report.counterexamples.begin(), report.counterexamples.end(),
                      [](const Counterexample& a, const Counterexample& b) {
                          return std::tie(a.input, a.expected, a.got) <
                                 std::tie(b.input, b.expected, b.got);
                      });
            return report;
        }
    throw std::invalid_argument("unknown check name: " + name);
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["check"] = report.check;
    j["params"] = report.params;
    j["status"] = report.pass ? "pass" : "fail";
    j["cases"] = report.cases;
    j["counterexamples"] = nlohmann::json::array();
    for (const Counterexample& c : report.counterexamples)
        j["counterexamples"].push_back(
            {{"input", c.input}, {"expected", c.expected}, {"got", c.got}});
    j["notes"] = report.notes;
    j["seconds"] = report.seconds;
    return j;
}

void print_report_table(std::ostream& out, const std::vector<VerificationReport>& reports) {
    out << std::left << std::setw(22) << "check" << std::setw(8) << "status" << std::right
        << std::setw(10) << "cases" << std::setw(6) << "cex" << std::setw(10) << "seconds"
        << "  params\n";
    for (const VerificationReport& r : reports) {
        std::ostringstream params;
        bool first = true;
        for (const auto& [k, v] : r.params) {
            if (!first) params << ", ";
            first = false;
            params << k << "=" << v;
        }
        out << std::left << std::setw(22) << r.check << std::setw(8)
            << (r.pass ? "pass" : "FAIL") << std::right << std::setw(10) << r.cases
            << std::setw(6) << r.counterexamples.size() << std::setw(10) << std::fixed
            << std::setprecision(2) << r.seconds << "  " << params.str() << "\n";
    }
}

}  // namespace cremona
