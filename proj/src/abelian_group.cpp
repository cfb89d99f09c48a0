#include "cremona/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cremona {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<long long, int> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize requires a positive integer");
    std::map<long long, int> out;
    for (long long d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    if (n > 1) ++out[n];
    return out;
}

AbelianGroup AbelianGroup::from_primary(std::map<long long, Partition> primary) {
    AbelianGroup g;
    for (const auto& [p, lam] : primary) {
        if (!is_prime(p))
            throw std::invalid_argument("primary key is not prime: " + std::to_string(p));
        if (lam.empty())
            throw std::invalid_argument("trivial p-part must be absent from primary map");
        long long pk = 1;
        for (int i = 0; i < lam.length(); ++i)
            for (int j = 0; j < lam.part(i); ++j) pk = checked_mul(pk, p);
        g.order_ = checked_mul(g.order_, pk);
    }
    g.primary_ = std::move(primary);
    return g;
}

AbelianGroup AbelianGroup::from_cyclic_factors(std::span<const long long> orders) {
    std::map<long long, std::vector<int>> exps;
    for (long long n : orders) {
        if (n < 1)
            throw std::invalid_argument("cyclic factor order must be >= 1: " +
                                        std::to_string(n));
        for (const auto& [p, e] : factorize(n)) exps[p].push_back(e);
    }
    std::map<long long, Partition> primary;
    for (auto& [p, v] : exps) primary.emplace(p, Partition::normalize(std::move(v)));
    return from_primary(std::move(primary));
}

AbelianGroup AbelianGroup::from_cyclic_factors(std::initializer_list<long long> orders) {
    return from_cyclic_factors(std::span<const long long>(orders.begin(), orders.size()));
}

AbelianGroup AbelianGroup::cyclic(long long n) { return from_cyclic_factors({n}); }

bool AbelianGroup::is_cyclic() const { return rank() <= 1; }

int AbelianGroup::rank() const {
    int r = 0;
    for (const auto& [p, lam] : primary_) r = std::max(r, lam.length());
    return r;
}

Partition AbelianGroup::p_type(long long p) const {
    if (!is_prime(p)) throw std::invalid_argument("p_type requires a prime");
    auto it = primary_.find(p);
    return it == primary_.end() ? Partition{} : it->second;
}

AbelianGroup AbelianGroup::p_part(long long p) const {
    if (!is_prime(p)) throw std::invalid_argument("p_part requires a prime");
    std::map<long long, Partition> primary;
    if (auto it = primary_.find(p); it != primary_.end()) primary.insert(*it);
    return from_primary(std::move(primary));
}

AbelianGroup AbelianGroup::coprime_part(long long p) const {
    if (!is_prime(p)) throw std::invalid_argument("coprime_part requires a prime");
    std::map<long long, Partition> primary = primary_;
    primary.erase(p);
    return from_primary(std::move(primary));
}

std::vector<long long> AbelianGroup::invariant_factors() const {
    const int r = rank();
    std::vector<long long> out(static_cast<std::size_t>(r), 1);
    // out[r-1] is the largest factor: it collects each prime's largest part
    for (const auto& [p, lam] : primary_)
        for (int i = 0; i < lam.length(); ++i) {
            long long pk = 1;
            for (int j = 0; j < lam.part(i); ++j) pk = checked_mul(pk, p);
            auto& slot = out[static_cast<std::size_t>(r - 1 - i)];
            slot = checked_mul(slot, pk);
        }
    return out;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "Z1";
    std::string s;
    for (long long d : invariant_factors()) {
        if (!s.empty()) s += " x ";
        s += "Z" + std::to_string(d);
    }
    return s;
}

AbelianGroup direct_product(const AbelianGroup& a, const AbelianGroup& b) {
    std::map<long long, Partition> primary = a.primary();
    for (const auto& [p, lam] : b.primary()) {
        std::vector<int> parts = primary[p].parts();
        parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
        primary[p] = Partition::normalize(std::move(parts));
    }
    return AbelianGroup::from_primary(std::move(primary));
}

std::vector<AbelianGroup> subgroup_types(const AbelianGroup& g,
                                         std::optional<std::size_t> max_count) {
    std::vector<AbelianGroup> acc{AbelianGroup{}};
    for (const auto& [p, lam] : g.primary()) {
        std::vector<AbelianGroup> next;
        for (const Partition& mu : subpartitions(lam))
            for (const AbelianGroup& base : acc) {
                std::map<long long, Partition> primary = base.primary();
                if (!mu.empty()) primary.emplace(p, mu);
                next.push_back(AbelianGroup::from_primary(std::move(primary)));
            }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    if (max_count && acc.size() > *max_count)
        acc.resize(*max_count);
    return acc;
}

AbelianGroup group_from_relations(const IntegerMatrix& m) {
    const auto diag = smith_normal_form(m);
    if (static_cast<int>(diag.size()) < m.cols())
        throw std::domain_error("infinite group: fewer relations than generators");
    std::vector<long long> factors;
    for (long long d : diag) {
        if (d == 0) throw std::domain_error("infinite group: free rank in cokernel");
        if (d > 1) factors.push_back(d);
    }
    return AbelianGroup::from_cyclic_factors(factors);
}

std::vector<AbelianGroup> abelian_groups_of_order(long long n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::vector<AbelianGroup> acc{AbelianGroup{}};
    for (const auto& [p, e] : factorize(n)) {
        std::vector<AbelianGroup> next;
        for (const Partition& lam : partitions_of(e))
            for (const AbelianGroup& base : acc) {
                std::map<long long, Partition> primary = base.primary();
                primary.emplace(p, lam);
                next.push_back(AbelianGroup::from_primary(std::move(primary)));
            }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

std::vector<AbelianGroup> all_abelian_groups_up_to(long long max_order) {
    std::vector<AbelianGroup> out;
    for (long long n = 1; n <= max_order; ++n) {
        auto batch = abelian_groups_of_order(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace cremona
