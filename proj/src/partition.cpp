#include "cremona/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cremona {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition part must be positive: " +
                                        std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::normalize(std::vector<int> raw) {
    for (int v : raw)
        if (v < 0)
            throw std::invalid_argument("partition entry must be nonnegative: " +
                                        std::to_string(v));
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    while (!raw.empty() && raw.back() == 0) raw.pop_back();
    return Partition(std::move(raw));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (!parts_.empty()) {
        out.resize(static_cast<std::size_t>(parts_[0]));
        for (int c = 0; c < parts_[0]; ++c)
            out[static_cast<std::size_t>(c)] = static_cast<int>(
                std::count_if(parts_.begin(), parts_.end(), [c](int p) { return p > c; }));
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

namespace {

// Backtracking count of LR skew tableaux: cells are visited in reverse
// reading order (each row right to left, rows top to bottom), so the lattice
// condition can be maintained as a running prefix count.
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lam_(lambda), mu_(mu), nu_(nu) {
        fill_.assign(static_cast<std::size_t>(lam_.length()), {});
        for (int r = 0; r < lam_.length(); ++r)
            fill_[static_cast<std::size_t>(r)].assign(
                static_cast<std::size_t>(lam_.part(r)), 0);
        counts_.assign(static_cast<std::size_t>(nu_.length()) + 1, 0);
    }

    long long count() {
        visit(-1, -1);  // sentinel: the advance step lands on the first row with cells
        return total_;
    }

private:
    void visit(int r, int c) {
        if (c < mu_.part(r)) {  // row done (or empty), advance to next row with cells
            ++r;
            while (r < lam_.length() && lam_.part(r) == mu_.part(r)) ++r;
            if (r == lam_.length()) {
                ++total_;
                return;
            }
            c = lam_.part(r) - 1;
        }
        const int above = (r > 0 && c >= mu_.part(r - 1))
                              ? fill_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]
                              : 0;
        const int right = (c + 1 < lam_.part(r))
                              ? fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]
                              : nu_.length();
        for (int v = above + 1; v <= right; ++v) {
            if (counts_[static_cast<std::size_t>(v)] >= nu_.part(v - 1)) continue;
            if (v > 1 && counts_[static_cast<std::size_t>(v - 1)] <=
                             counts_[static_cast<std::size_t>(v)])
                continue;  // lattice word would break
            ++counts_[static_cast<std::size_t>(v)];
            fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            visit(r, c - 1);
            --counts_[static_cast<std::size_t>(v)];
        }
    }

    const Partition& lam_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<std::vector<int>> fill_;
    std::vector<int> counts_;
    long long total_ = 0;
};

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!lambda.contains(mu)) return 0;
    if (nu.empty()) return 1;  // grading + containment force lambda == mu
    return LrCounter(lambda, mu, nu).count();
}

PartitionMultiset lr_product(const Partition& mu, const Partition& nu) {
    PartitionMultiset result;
    const int n = mu.size() + nu.size();
    const int max_first = mu.part(0) + nu.part(0);
    const int max_len = mu.length() + nu.length();
    std::vector<int> acc;
    std::vector<Partition> candidates;
    gen_partitions(n, std::max(1, std::min(n, max_first)), acc, candidates);
    for (const Partition& lam : candidates) {
        if (lam.part(0) > max_first || lam.length() > max_len) continue;
        if (!lam.contains(mu)) continue;
        if (long long c = lr_coefficient(lam, mu, nu); c > 0) result[lam] = c;
    }
    // size grading holds for every emitted term
    for (const auto& [lam, c] : result)
        if (lam.size() != n || c < 1)
            throw std::logic_error("LR product violated size grading");
    return result;
}

PartitionMultiset lr_product_multi(std::span<const Partition> factors) {
    if (factors.empty())
        throw std::invalid_argument("lr_product_multi requires at least one factor");
    PartitionMultiset acc{{factors[0], 1}};
    for (std::size_t i = 1; i < factors.size(); ++i) {
        PartitionMultiset next;
        for (const auto& [lam, c] : acc)
            for (const auto& [kappa, d] : lr_product(lam, factors[i]))
                next[kappa] += c * d;
        acc = std::move(next);
    }
    return acc;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int i, int prev) {
        out.push_back(Partition::normalize(acc));
        if (i >= lambda.length()) return;
        for (int v = 1; v <= std::min(prev, lambda.part(i)); ++v) {
            acc.push_back(v);
            rec(i + 1, v);
            acc.pop_back();
        }
    };
    rec(0, lambda.part(0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const PartitionMultiset& terms) {
    std::string s = "{";
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) s += ", ";
        first = false;
        s += it->first.to_string() + ":" + std::to_string(it->second);
    }
    return s + "}";
}

}  // namespace cremona
