#include "cremona/classify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <stdexcept>

#include "cremona/extensions.hpp"
#include "cremona/group_expr.hpp"

namespace cremona {

namespace {

const AbelianGroup& klein4() {
    static const AbelianGroup k = AbelianGroup::from_cyclic_factors({2, 2});
    return k;
}

// Every p-part rank away from the prime q stays within the bound.
bool ranks_away_from(const AbelianGroup& g, long long q, int bound) {
    for (const auto& [p, lam] : g.primary())
        if (p != q && lam.length() > bound) return false;
    return true;
}

long long p_power(long long p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, p);
    return r;
}

// Largest-part product over odd primes, used for the Z/2n parameter of
// family 2 and table rows 2/3/5.
long long leading_coprime_factor(const AbelianGroup& g, long long q) {
    long long out = 1;
    for (const auto& [p, lam] : g.primary())
        if (p != q) out = checked_mul(out, p_power(p, lam.part(0)));
    return out;
}

}  // namespace

bool is_cr1(const AbelianGroup& g) { return g.is_cyclic() || g == klein4(); }

std::vector<int> cr2_matching_families(const AbelianGroup& g) {
    std::vector<int> out;
    const Partition t2 = g.primary().count(2) ? g.primary().at(2) : Partition{};
    if (g.rank() <= 2) out.push_back(1);
    if (t2.length() == 3 && t2.part(1) == 1 && ranks_away_from(g, 2, 1)) out.push_back(2);
    if (g == AbelianGroup::from_cyclic_factors({4, 4, 2})) out.push_back(3);
    if (g == AbelianGroup::from_cyclic_factors({3, 3, 3})) out.push_back(4);
    if (g == AbelianGroup::from_cyclic_factors({2, 2, 2, 2})) out.push_back(5);
    return out;
}

std::optional<Cr2Family> cr2_family(const AbelianGroup& g) {
    const auto families = cr2_matching_families(g);
    if (families.empty()) return std::nullopt;
    Cr2Family out;
    out.family = families.front();
    switch (out.family) {
        case 1: {
            const auto inv = g.invariant_factors();
            out.n = inv.empty() ? 1 : inv.back();
            out.m = inv.size() < 2 ? 1 : inv.front();
            break;
        }
        case 2:
            // 2n = 2^a * (odd part), a the largest 2-exponent
            out.n = checked_mul(p_power(2, g.p_type(2).part(0) - 1),
                                leading_coprime_factor(g, 2));
            break;
        default:
            break;
    }
    return out;
}

std::optional<std::pair<long long, long long>> klein_2n_2m_witness(const AbelianGroup& g) {
    if (g.order() % 4 != 0) return std::nullopt;
    const long long t = g.order() / 4;
    std::optional<std::pair<long long, long long>> best;
    for (long long x = 2; x * x <= t; x += 2) {
        if (t % x != 0) continue;
        const long long y = t / x;
        if (y % 2 != 0) continue;
        if (AbelianGroup::from_cyclic_factors({2, 2, x, y}) == g)
            best = {x, y};  // x ascending, so the last hit is the most balanced
    }
    if (!best) return std::nullopt;
    return std::make_pair(best->first / 2, best->second / 2);
}

namespace {

std::vector<int> table1_matching_rows(const AbelianGroup& g) {
    std::vector<int> rows;
    const Partition t2 = g.primary().count(2) ? g.primary().at(2) : Partition{};
    const Partition t3 = g.primary().count(3) ? g.primary().at(3) : Partition{};
    if (g.rank() <= 3) rows.push_back(1);
    if (t2.length() == 4 && ranks_away_from(g, 2, 1) &&
        ((t2.part(1) == 2 && t2.part(2) == 2 && t2.part(3) == 1) ||
         (t2.part(0) == 2 && t2.part(1) == 2 && t2.part(2) == 1 && t2.part(3) == 1)))
        rows.push_back(2);
    if (t3.length() == 4 && t3.part(1) == 1 && ranks_away_from(g, 3, 1)) rows.push_back(3);
    if (t2.length() == 4 && t2.part(2) == 1 && t2.part(3) == 1 && ranks_away_from(g, 2, 2))
        rows.push_back(4);
    if (t2.length() == 5 && t2.part(1) == 1 && ranks_away_from(g, 2, 1)) rows.push_back(5);
    if (g == AbelianGroup::from_cyclic_factors({4, 4, 2, 2, 2})) rows.push_back(6);
    if (g == AbelianGroup::from_cyclic_factors({2, 2, 2, 2, 2, 2})) rows.push_back(7);
    return rows;
}

std::vector<long long> table1_row_parameters(const AbelianGroup& g, int row) {
    switch (row) {
        case 1: {
            auto inv = g.invariant_factors();
            while (inv.size() < 3) inv.insert(inv.begin(), 1);
            return inv;
        }
        case 2: return {g.order() / 64};
        case 3: return {g.order() / 81};
        case 4: {
            const auto nm = klein_2n_2m_witness(g);
            if (!nm) throw std::logic_error("row 4 match without a (2k, 2l) witness");
            return {nm->first, nm->second};
        }
        case 5: return {g.order() / 32};
        default: return {};
    }
}

// Every splitting G = G1 x G2 with G1 cyclic (one part per prime, possibly
// none anywhere, so G1 = Z1 is included) or G1 the Klein four-group.
struct Splitting {
    AbelianGroup g1, g2;
};

std::vector<Splitting> cr1_splittings(const AbelianGroup& g) {
    std::vector<Splitting> out;
    std::vector<std::pair<long long, Partition>> primes(g.primary().begin(),
                                                        g.primary().end());
    std::map<long long, Partition> chosen;  // single chosen part per prime
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == primes.size()) {
            std::map<long long, Partition> rest;
            long long c = 1;
            for (const auto& [p, lam] : primes) {
                std::vector<int> parts = lam.parts();
                if (auto it = chosen.find(p); it != chosen.end()) {
                    parts.erase(std::find(parts.begin(), parts.end(), it->second.part(0)));
                    c = checked_mul(c, p_power(p, it->second.part(0)));
                }
                if (!parts.empty()) rest.emplace(p, Partition(std::move(parts)));
            }
            out.push_back({AbelianGroup::cyclic(c), AbelianGroup::from_primary(std::move(rest))});
            return;
        }
        rec(i + 1);  // skip this prime
        const auto& lam = primes[i].second;
        int prev = 0;
        for (int j = 0; j < lam.length(); ++j) {
            if (lam.part(j) == prev) continue;  // distinct part values only
            prev = lam.part(j);
            chosen.emplace(primes[i].first, Partition({prev}));
            rec(i + 1);
            chosen.erase(primes[i].first);
        }
    };
    rec(0);
    // Klein factor: remove two parts equal to 1 from the 2-type
    const Partition t2 = g.primary().count(2) ? g.primary().at(2) : Partition{};
    if (t2.length() >= 2 && t2.part(t2.length() - 1) == 1 && t2.part(t2.length() - 2) == 1) {
        std::map<long long, Partition> rest = g.primary();
        std::vector<int> parts = t2.parts();
        parts.pop_back();
        parts.pop_back();
        if (parts.empty())
            rest.erase(2);
        else
            rest[2] = Partition(std::move(parts));
        out.push_back({klein4(), AbelianGroup::from_primary(std::move(rest))});
    }
    return out;
}

}  // namespace

std::optional<ProductTypeWitness> product_type_witness(const AbelianGroup& g) {
    const std::vector<int> rows = table1_matching_rows(g);

    std::vector<Splitting> found;
    for (const Splitting& s : cr1_splittings(g))
        if (cr2_family(s.g2)) found.push_back(s);

    if (rows.empty() != found.empty())
        throw std::logic_error("product-type cross-check failed for " + g.to_string() +
                               ": table rows and splitting search disagree");
    if (rows.empty()) return std::nullopt;

    std::sort(found.begin(), found.end(), [](const Splitting& a, const Splitting& b) {
        if (a.g1.order() != b.g1.order()) return a.g1.order() < b.g1.order();
        if (a.g1.is_cyclic() != b.g1.is_cyclic()) return a.g1.is_cyclic();
        return a.g2 < b.g2;
    });

    ProductTypeWitness w;
    w.row = rows.front();
    w.all_rows = rows;
    w.parameters = table1_row_parameters(g, w.row);
    w.g1 = found.front().g1;
    w.g2 = found.front().g2;
    if (direct_product(w.g1, w.g2) != g || !is_cr1(w.g1) || !cr2_family(w.g2))
        throw std::logic_error("product-type witness is not a valid decomposition");
    return w;
}

TerminalVerdict terminal_admissible(const AbelianGroup& g) {
    if (g.rank() <= 3) return {true, "rank<=3", 0, 0};
    if (const auto nm = klein_2n_2m_witness(g))
        return {true, "klein*2n*2m", nm->first, nm->second};
    return {false, "", 0, 0};
}

std::vector<EllipticActionRow> elliptic_action_rows(const AbelianGroup& g) {
    std::vector<EllipticActionRow> out;
    if (g.rank() <= 2) out.push_back({1, g.order(), false});
    static const std::vector<std::pair<AbelianGroup, EllipticActionRow>> fixed = {
        {AbelianGroup::cyclic(2), {2, 1, true}},
        {AbelianGroup::from_cyclic_factors({2, 2}), {3, 2, true}},
        {AbelianGroup::from_cyclic_factors({2, 2, 2}), {4, 4, true}},
        {AbelianGroup::cyclic(4), {5, 1, true}},
        {AbelianGroup::from_cyclic_factors({2, 4}), {6, 2, true}},
        {AbelianGroup::cyclic(3), {7, 1, false}},
        {AbelianGroup::from_cyclic_factors({3, 3}), {8, 3, false}},
        {AbelianGroup::cyclic(6), {9, 1, true}},
    };
    for (const auto& [grp, row] : fixed)
        if (g == grp) out.push_back(row);
    return out;
}

bool can_act_on_circle(const AbelianGroup& g) { return g.is_cyclic() || g == klein4(); }

bool can_act_on_sphere2(const AbelianGroup& g) {
    if (g == AbelianGroup::from_cyclic_factors({2, 2, 2})) return true;
    const auto inv = g.invariant_factors();  // embeds in Z/n x Z/2 iff d_1 <= 2
    return inv.size() <= 1 || (inv.size() == 2 && inv.front() == 2);
}

std::optional<K3Type> k3_type_check(const AbelianGroup& g,
                                    const std::vector<AbelianGroup>& k3_groups) {
    if (k3_groups.empty())
        throw std::invalid_argument("k3_type_check requires a nonempty group list");
    std::optional<K3Type> best;
    for (const AbelianGroup& h : k3_groups) {
        if (g.order() % h.order() != 0) continue;
        const long long m = g.order() / h.order();
        if (best && (best->m < m || (best->m == m && !(h < best->base)))) continue;
        if (extension_exists(AbelianGroup::cyclic(m), h, g)) best = K3Type{m, h};
    }
    return best;
}

bool rank_bound_check(const AbelianGroup& g, RankSetting setting) {
    for (const auto& [p, lam] : g.primary()) {
        const int bound = setting == RankSetting::surface ? (p == 2 ? 4 : p == 3 ? 3 : 2)
                                                          : (p == 2 ? 6 : p == 3 ? 4 : 3);
        if (lam.length() > bound) return false;
    }
    return true;
}

bool rank_bound_check_general(const AbelianGroup& g, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    for (const auto& [p, lam] : g.primary())
        if (lam.length() > p * n / (p - 1)) return false;
    return true;
}

ClassificationVerdict classify(const AbelianGroup& g,
                               const std::vector<AbelianGroup>* k3_groups) {
    ClassificationVerdict v;
    v.group = g;
    v.cr1 = is_cr1(g);
    v.cr2 = cr2_family(g);
    v.cr2_all_families = cr2_matching_families(g);
    v.product_type = product_type_witness(g);
    v.terminal = terminal_admissible(g);
    v.elliptic_rows = elliptic_action_rows(g);
    v.circle_action = can_act_on_circle(g);
    v.sphere2_action = can_act_on_sphere2(g);
    if (k3_groups) {
        v.k3_checked = true;
        v.k3 = k3_type_check(g, *k3_groups);
    }
    return v;
}

std::vector<AbelianGroup> load_k3_list(std::istream& in) {
    std::vector<AbelianGroup> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r\n");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r\n");
        try {
            out.push_back(parse_group(line.substr(begin, end - begin + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error("k3 list line " + std::to_string(lineno) + ": " +
                                     e.what());
        }
    }
    return out;
}

std::vector<AbelianGroup> load_k3_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open k3 list file: " + path);
    return load_k3_list(in);
}

std::vector<AbelianGroup> cr1_list(long long max_order) {
    std::vector<AbelianGroup> out;
    for (long long n = 1; n <= max_order; ++n) out.push_back(AbelianGroup::cyclic(n));
    if (max_order >= 4) out.push_back(klein4());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AbelianGroup> cr2_list(long long max_order) {
    std::vector<AbelianGroup> out;
    for (const AbelianGroup& g : all_abelian_groups_up_to(max_order))
        if (cr2_family(g)) out.push_back(g);
    return out;
}

std::vector<AbelianGroup> table1_list(long long max_order) {
    std::vector<AbelianGroup> out;
    for (const AbelianGroup& g : all_abelian_groups_up_to(max_order))
        if (product_type_witness(g)) out.push_back(g);
    return out;
}

}  // namespace cremona
