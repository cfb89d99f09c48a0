#include "cremona/extensions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cremona {

namespace {

std::set<long long> prime_support(const AbelianGroup& a, const AbelianGroup& b) {
    std::set<long long> primes;
    for (const auto& [p, lam] : a.primary()) primes.insert(p);
    for (const auto& [p, lam] : b.primary()) primes.insert(p);
    return primes;
}

}  // namespace

bool extension_exists(const AbelianGroup& h, const AbelianGroup& k, const AbelianGroup& g) {
    if (checked_mul(h.order(), k.order()) != g.order()) return false;
    for (long long p : prime_support(g, direct_product(h, k)))
        if (lr_coefficient(g.p_type(p), h.p_type(p), k.p_type(p)) == 0) return false;
    return true;
}

ExtensionResult enumerate_extensions(const AbelianGroup& h, const AbelianGroup& k,
                                     std::optional<std::size_t> cap) {
    ExtensionResult result{h, k, {}, false};
    const AbelianGroup split = direct_product(h, k);

    std::vector<std::pair<long long, std::vector<Partition>>> per_prime;
    for (long long p : prime_support(h, k)) {
        std::vector<Partition> shapes;
        for (const auto& [lam, c] : lr_product(h.p_type(p), k.p_type(p)))
            shapes.push_back(lam);
        per_prime.emplace_back(p, std::move(shapes));
    }

    // Cartesian combination across primes, lexicographic in (prime, shape) order
    std::vector<std::size_t> idx(per_prime.size(), 0);
    for (;;) {
        if (cap && result.middles.size() >= *cap) {
            result.truncated = true;
            break;
        }
        std::map<long long, Partition> primary;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const Partition& lam = per_prime[i].second[idx[i]];
            if (!lam.empty()) primary.emplace(per_prime[i].first, lam);
        }
        AbelianGroup g = AbelianGroup::from_primary(std::move(primary));
        result.middles.push_back({g, g == split});

        std::size_t i = per_prime.size();
        while (i > 0 && ++idx[i - 1] == per_prime[i - 1].second.size()) idx[--i] = 0;
        if (i == 0) break;
    }

    std::sort(result.middles.begin(), result.middles.end(),
              [](const ExtensionMiddle& a, const ExtensionMiddle& b) {
                  return a.group.invariant_factors() < b.group.invariant_factors();
              });

    if (!result.truncated) {
        std::size_t split_count = 0;
        for (const auto& m : result.middles) {
            if (m.split) ++split_count;
            if (m.group.order() != checked_mul(h.order(), k.order()))
                throw std::logic_error("extension middle has wrong order");
        }
        if (split_count != 1)
            throw std::logic_error("extension enumeration must contain the split middle once");
    }
    return result;
}

CyclicSplit max_cyclic_split(const AbelianGroup& g) {
    if (g.is_trivial())
        throw std::invalid_argument("max_cyclic_split requires a nontrivial group");
    CyclicSplit out;
    std::map<long long, Partition> rest;
    for (const auto& [p, lam] : g.primary()) {
        long long pk = 1;
        for (int j = 0; j < lam.part(0); ++j) pk = checked_mul(pk, p);
        out.cyclic_order = checked_mul(out.cyclic_order, pk);
        std::vector<int> tail(lam.parts().begin() + 1, lam.parts().end());
        if (!tail.empty()) rest.emplace(p, Partition(std::move(tail)));
    }
    out.complement = AbelianGroup::from_primary(std::move(rest));
    return out;
}

}  // namespace cremona
