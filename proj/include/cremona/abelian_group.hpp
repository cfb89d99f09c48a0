#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/integer_matrix.hpp"
#include "cremona/partition.hpp"

namespace cremona {

/// Finite abelian group in canonical primary decomposition: a finite mapping
/// prime -> partition, where the p-part of the group is
/// Z/p^{lambda_1} x ... x Z/p^{lambda_k}. Trivial p-parts are absent, so two
/// values are isomorphic iff their mappings are equal. Immutable value type.
class AbelianGroup {
public:
    AbelianGroup() = default;  // the trivial group, order 1

    /// Validates that every key is prime and every partition nonempty.
    static AbelianGroup from_primary(std::map<long long, Partition> primary);

    /// Factor each order into prime powers and merge exponents per prime.
    /// Orders must be >= 1; throws std::invalid_argument otherwise.
    static AbelianGroup from_cyclic_factors(std::span<const long long> orders);
    static AbelianGroup from_cyclic_factors(std::initializer_list<long long> orders);
    static AbelianGroup cyclic(long long n);

    const std::map<long long, Partition>& primary() const { return primary_; }
    long long order() const { return order_; }
    bool is_trivial() const { return primary_.empty(); }
    bool is_cyclic() const;  // includes the trivial group
    int rank() const;        // minimal number of generators

    /// Type of the p-Sylow subgroup; the zero partition if p does not divide
    /// the order. Requires p prime.
    Partition p_type(long long p) const;
    AbelianGroup p_part(long long p) const;
    AbelianGroup coprime_part(long long p) const;

    /// Unique chain d_1 | d_2 | ... | d_r with product = order, r = rank.
    std::vector<long long> invariant_factors() const;

    /// Canonical form "Z2 x Z2 x Z12" (ascending divisibility chain); "Z1"
    /// for the trivial group.
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
    friend auto operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
        return a.primary_ <=> b.primary_;
    }

private:
    std::map<long long, Partition> primary_;
    long long order_ = 1;
};

AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b);

/// All isomorphism classes H admitting an embedding H -> G, computed per
/// prime by the componentwise subgroup-type criterion and combined across
/// primes. For abelian groups this set equals the set of quotient types.
/// The criterion is validated against the explicit-group oracle by the
/// verify module's shipped "subgroup-criterion" check.
std::vector<AbelianGroup> subgroup_types(
    const AbelianGroup& g, std::optional<std::size_t> max_count = std::nullopt);

/// Type of Z^c / rowspace(M) for M with c columns, read off the SNF diagonal.
/// Throws std::domain_error if the cokernel is infinite.
AbelianGroup group_from_relations(const IntegerMatrix& m);

bool is_prime(long long n);
std::map<long long, int> factorize(long long n);  // trial division

/// Every abelian group of order <= max_order, sorted by order then canonical
/// form. Enumeration backbone for the desk-scale verification runs.
std::vector<AbelianGroup> all_abelian_groups_up_to(long long max_order);
std::vector<AbelianGroup> abelian_groups_of_order(long long n);

}  // namespace cremona
