#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/abelian_group.hpp"

namespace cremona {

/// Thrown when an oracle request exceeds the configured bound; brute-force
/// enumeration is deliberately fenced off from large inputs.
class OracleBoundError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Absolute ceiling for oracle group orders. Defaults to 512; the environment
/// variable ABELIAN_CREMONA_ORACLE_LIMIT may lower it (values above 512 are
/// clamped).
long long oracle_hard_limit();

/// Default per-call oracle bound when none is configured.
inline constexpr long long kOracleDefaultBound = 64;

/// Concrete product of cyclic groups: elements are residue tuples under
/// componentwise addition, indexed 0..order-1 in mixed radix.
class ExplicitGroup {
public:
    explicit ExplicitGroup(std::vector<long long> moduli);  // each >= 2
    static ExplicitGroup from_group(const AbelianGroup& g);

    const std::vector<long long>& moduli() const { return moduli_; }
    long long order() const { return order_; }

    std::vector<long long> element(long long index) const;
    long long index_of(const std::vector<long long>& tuple) const;
    long long add(long long a, long long b) const;

private:
    std::vector<long long> moduli_;
    long long order_ = 1;
};

/// One subgroup of an explicit group: its abstract type (computed by counting
/// p^k-torsion elements) and the type of the quotient (computed via the Smith
/// normal form of the stacked relation matrix).
struct SubgroupRecord {
    long long order = 1;
    AbelianGroup sub_type;
    AbelianGroup quot_type;
};

/// Every subgroup, enumerated by closing generator subsets starting from the
/// trivial subgroup and deduplicated by element-set. Exponential on purpose;
/// the bound refusal keeps it honest.
std::vector<SubgroupRecord> oracle_all_subgroups(const ExplicitGroup& e, long long bound);

std::vector<AbelianGroup> oracle_subgroup_types(const ExplicitGroup& e,
                                                long long bound = kOracleDefaultBound);

/// Type of E / <generators>; generators are residue tuples in E.
AbelianGroup oracle_quotient_type(const ExplicitGroup& e,
                                  const std::vector<std::vector<long long>>& generators);

/// Ground-truth extension enumeration: all abelian types G of order
/// |H| * |K| such that some subgroup of the explicit realization of G is
/// isomorphic to H with quotient isomorphic to K.
std::set<AbelianGroup> oracle_extensions(const AbelianGroup& h, const AbelianGroup& k,
                                         long long bound = kOracleDefaultBound);

/// Subgroup records for the canonical realization of G, memoized internally
/// (synchronized; results are deterministic).
const std::vector<SubgroupRecord>& cached_subgroup_records(const AbelianGroup& g,
                                                           long long bound);

}  // namespace cremona
