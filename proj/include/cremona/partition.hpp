#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cremona {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is the unit for Littlewood-Richardson products.
/// Value type with structural equality; parts are never interned.
class Partition {
public:
    Partition() = default;

    /// Requires parts weakly decreasing and positive; throws std::invalid_argument.
    explicit Partition(std::vector<int> parts);

    /// Drops zeros and sorts weakly decreasing. Negative entries throw.
    static Partition normalize(std::vector<int> raw);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }  // total number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based; parts beyond the end read as 0.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// Componentwise comparison: mu fits inside this diagram.
    bool contains(const Partition& mu) const;

    /// Transpose of the Young diagram.
    Partition conjugate() const;

    /// "[a,b,c]" with no spaces; "[]" for the zero partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Formal nonnegative combination of partitions, e.g. an LR expansion.
using PartitionMultiset = std::map<Partition, long long>;

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}: the number of
/// column-strict fillings of the skew shape lambda/mu with content nu whose
/// reverse reading word is a lattice word. Zero whenever the grading
/// |lambda| = |mu| + |nu| fails or mu is not contained in lambda.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Full expansion {(lambda, c^lambda_{mu,nu}) : c > 0}. Every key has size
/// |mu| + |nu| (checked). Commutative in its arguments.
PartitionMultiset lr_product(const Partition& mu, const Partition& nu);

/// Left fold of lr_product with multiplicity bookkeeping.
/// Throws std::invalid_argument on an empty factor sequence.
PartitionMultiset lr_product_multi(std::span<const Partition> factors);

/// All partitions of n, ascending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All mu with mu_i <= lambda_i componentwise (the subdiagrams of lambda).
std::vector<Partition> subpartitions(const Partition& lambda);

/// "{[a,b]:c, ...}" with terms listed largest key first.
std::string to_string(const PartitionMultiset& terms);

}  // namespace cremona
