#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cremona/abelian_group.hpp"

namespace cremona {

/// Match against the five plane-Cremona families:
///   1: Z/n x Z/m (any rank <= 2 group)     2: Z/2n x (Z/2)^2
///   3: (Z/4)^2 x Z/2                        4: (Z/3)^3
///   5: (Z/2)^4
struct Cr2Family {
    int family = 0;
    long long n = 0, m = 0;  // parameters where the family has any
    friend bool operator==(const Cr2Family&, const Cr2Family&) = default;
};

/// Witness that G = G1 x G2 with G1 on the line list and G2 on the plane
/// list, together with the matched row of the seven-family product table:
///   1: Z/k x Z/l x Z/m                      2: Z/2k x (Z/4)^2 x Z/2
///   3: Z/3k x (Z/3)^3                       4: Z/2k x Z/2l x (Z/2)^2
///   5: Z/2n x (Z/2)^4                       6: (Z/4)^2 x (Z/2)^3
///   7: (Z/2)^6
struct ProductTypeWitness {
    int row = 0;                      // smallest matching row
    std::vector<int> all_rows;        // every matching row
    std::vector<long long> parameters;// row-specific (k / k,l / k,l,m / n)
    AbelianGroup g1;                  // passes is_cr1
    AbelianGroup g2;                  // has a cr2 family
};

struct TerminalVerdict {
    bool admissible = false;
    std::string clause;       // "rank<=3" or "klein*2n*2m"
    long long n = 0, m = 0;   // witness for the klein clause
};

/// One row of the genus-1 action table. Row 1 (translations) coexists with
/// rows 2-9 for the same abstract group; min_orbit depends on the action.
struct EllipticActionRow {
    int row = 0;
    long long min_orbit = 0;
    bool contains_antipodal = false;
    friend bool operator==(const EllipticActionRow&, const EllipticActionRow&) = default;
};

struct K3Type {
    long long m = 1;      // order of the cyclic kernel
    AbelianGroup base;    // the K3-acting quotient
};

struct ClassificationVerdict {
    AbelianGroup group;
    bool cr1 = false;
    std::optional<Cr2Family> cr2;
    std::vector<int> cr2_all_families;
    std::optional<ProductTypeWitness> product_type;
    TerminalVerdict terminal;
    std::vector<EllipticActionRow> elliptic_rows;
    bool circle_action = false;
    bool sphere2_action = false;
    bool k3_checked = false;
    std::optional<K3Type> k3;
};

/// Line list: cyclic or the Klein four-group.
bool is_cr1(const AbelianGroup& g);

std::optional<Cr2Family> cr2_family(const AbelianGroup& g);
std::vector<int> cr2_matching_families(const AbelianGroup& g);

/// Two independent routes that must agree: pattern match against the seven
/// product-table rows, and search over per-prime splittings G = G1 x G2.
/// Disagreement is a hard std::logic_error, not a recoverable state.
std::optional<ProductTypeWitness> product_type_witness(const AbelianGroup& g);

/// Admissibility at a threefold terminal point: rank <= 3, or
/// G = (Z/2)^2 x Z/2n x Z/2m.
TerminalVerdict terminal_admissible(const AbelianGroup& g);

/// Decompose G = (Z/2)^2 x Z/2n x Z/2m if possible; the returned (n, m) is
/// the most balanced witness, n <= m up to the 2n <= 2m factor ordering.
std::optional<std::pair<long long, long long>> klein_2n_2m_witness(const AbelianGroup& g);

/// All genus-1 table rows matching G; empty if G cannot act faithfully on a
/// smooth curve of genus 1.
std::vector<EllipticActionRow> elliptic_action_rows(const AbelianGroup& g);

bool can_act_on_circle(const AbelianGroup& g);
bool can_act_on_sphere2(const AbelianGroup& g);

/// Smallest m >= 1 such that G is an extension of some listed K3 group by
/// Z/m. "None" only means none relative to the supplied (partial) list.
/// Throws std::invalid_argument on an empty list.
std::optional<K3Type> k3_type_check(const AbelianGroup& g,
                                    const std::vector<AbelianGroup>& k3_groups);

enum class RankSetting { surface, threefold };

/// Per-prime generator bounds: surface r <= (4,3,2), threefold r <= (6,4,3)
/// for p = 2, 3, >= 5 respectively.
bool rank_bound_check(const AbelianGroup& g, RankSetting setting);

/// General bound r(G_p) <= floor(p*n/(p-1)) in dimension n.
bool rank_bound_check_general(const AbelianGroup& g, int n);

ClassificationVerdict classify(const AbelianGroup& g,
                               const std::vector<AbelianGroup>* k3_groups = nullptr);

/// One canonical group string per line, "#" comments, UTF-8.
std::vector<AbelianGroup> load_k3_list(std::istream& in);
std::vector<AbelianGroup> load_k3_list_file(const std::string& path);

/// Enumeration helpers for the verification suite.
std::vector<AbelianGroup> cr1_list(long long max_order);
std::vector<AbelianGroup> cr2_list(long long max_order);
std::vector<AbelianGroup> table1_list(long long max_order);

}  // namespace cremona
