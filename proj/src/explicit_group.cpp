#include "cremona/explicit_group.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "cremona/integer_matrix.hpp"

namespace cremona {

long long oracle_hard_limit() {
    static const long long limit = [] {
        long long v = 512;
        if (const char* env = std::getenv("ABELIAN_CREMONA_ORACLE_LIMIT")) {
            char* end = nullptr;
            const long long parsed = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && parsed >= 1) v = std::min(parsed, 512LL);
        }
        return v;
    }();
    return limit;
}

namespace {

void check_bound(long long order, long long bound, const char* what) {
    const long long hard = oracle_hard_limit();
    if (bound > hard)
        throw OracleBoundError(std::string(what) + ": requested bound " +
                               std::to_string(bound) + " exceeds the hard limit " +
                               std::to_string(hard));
    if (order > bound)
        throw OracleBoundError(std::string(what) + ": group order " + std::to_string(order) +
                               " exceeds the oracle bound " + std::to_string(bound));
}

// Element-set bitmask over up to 512 elements.
struct ElementSet {
    std::vector<std::uint64_t> words;
    explicit ElementSet(long long order)
        : words(static_cast<std::size_t>((order + 63) / 64), 0) {}
    bool test(long long i) const {
        return words[static_cast<std::size_t>(i >> 6)] >> (i & 63) & 1;
    }
    void set(long long i) { words[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }
    friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const {
        std::size_t h = s.words.size();
        for (std::uint64_t w : s.words) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Elements of the annihilator S^perp = {y : <x, y> integral for all x in S}
// under the standard pairing <x, y> = sum_i x_i y_i / m_i. Generators of S
// suffice since the pairing is bilinear.
std::vector<std::vector<long long>> annihilator_elements(const ExplicitGroup& e,
                                                         const std::vector<long long>& gens) {
    const auto& mods = e.moduli();
    long long l = 1;
    for (long long m : mods) l = std::lcm(l, m);
    std::vector<std::vector<long long>> gen_tuples;
    for (long long g : gens) gen_tuples.push_back(e.element(g));
    std::vector<std::vector<long long>> out;
    for (long long y = 0; y < e.order(); ++y) {
        const auto yt = e.element(y);
        bool orthogonal = true;
        for (const auto& xt : gen_tuples) {
            long long s = 0;
            for (std::size_t i = 0; i < mods.size(); ++i)
                s = (s + (xt[i] * yt[i]) % mods[i] * (l / mods[i])) % l;
            if (s != 0) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) out.push_back(yt);
    }
    return out;
}

// Subgroup type from the element set: counting p^k-torsion determines the
// conjugate of the type partition, since #[p^k] = p^{sum_i min(lambda_i, k)}.
AbelianGroup type_from_elements(const ExplicitGroup& e, const std::vector<long long>& elems) {
    const long long n = static_cast<long long>(elems.size());
    std::map<long long, Partition> primary;
    for (const auto& [p, total_exp] : factorize(n)) {
        std::vector<int> conj;
        long long prev_count = 1;
        long long pk = 1;
        for (int k = 1; static_cast<int>(conj.size()) < total_exp + 1; ++k) {
            pk = checked_mul(pk, p);
            long long count = 0;
            for (long long idx : elems) {
                const auto tuple = e.element(idx);
                bool killed = true;
                for (std::size_t i = 0; i < tuple.size() && killed; ++i)
                    killed = (pk % e.moduli()[i] == 0) ||
                             (tuple[i] * (pk % e.moduli()[i])) % e.moduli()[i] == 0;
                if (killed) ++count;
            }
            int rows = 0;
            for (long long c = prev_count; c < count; c = checked_mul(c, p)) ++rows;
            if (rows == 0) break;
            conj.push_back(rows);
            prev_count = count;
        }
        if (!conj.empty()) primary.emplace(p, Partition(conj).conjugate());
    }
    return AbelianGroup::from_primary(std::move(primary));
}

}  // namespace

ExplicitGroup::ExplicitGroup(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
    for (long long m : moduli_) {
        if (m < 2) throw std::invalid_argument("explicit group modulus must be >= 2");
        order_ = checked_mul(order_, m);
    }
}

ExplicitGroup ExplicitGroup::from_group(const AbelianGroup& g) {
    std::vector<long long> moduli;
    for (const auto& [p, lam] : g.primary())
        for (int i = 0; i < lam.length(); ++i) {
            long long pk = 1;
            for (int j = 0; j < lam.part(i); ++j) pk = checked_mul(pk, p);
            moduli.push_back(pk);
        }
    return ExplicitGroup(std::move(moduli));
}

std::vector<long long> ExplicitGroup::element(long long index) const {
    std::vector<long long> tuple(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        tuple[i] = index % moduli_[i];
        index /= moduli_[i];
    }
    return tuple;
}

long long ExplicitGroup::index_of(const std::vector<long long>& tuple) const {
    if (tuple.size() != moduli_.size())
        throw std::invalid_argument("element tuple has wrong length");
    long long index = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        const long long r = ((tuple[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
        index = index * moduli_[i] + r;
    }
    return index;
}

long long ExplicitGroup::add(long long a, long long b) const {
    long long index = 0;
    long long scale = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const long long m = moduli_[i];
        index += ((a % m + b % m) % m) * scale;
        scale *= m;
        a /= m;
        b /= m;
    }
    return index;
}

std::vector<SubgroupRecord> oracle_all_subgroups(const ExplicitGroup& e, long long bound) {
    check_bound(e.order(), bound, "oracle_all_subgroups");
    const long long n = e.order();

    struct Node {
        ElementSet set;
        std::vector<long long> elems;  // sorted indices
        std::vector<long long> gens;
    };

    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::deque<Node> queue;
    std::vector<Node> done;

    Node trivial{ElementSet(n), {0}, {}};
    trivial.set.set(0);
    seen.insert(trivial.set);
    queue.push_back(std::move(trivial));

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        for (long long g = 1; g < n; ++g) {
            if (node.set.test(g)) continue;
            // <S, g> = union over k of (S + k*g); S is already a subgroup
            ElementSet closed(n);
            std::vector<long long> elems;
            long long shift = 0;
            do {
                for (long long s : node.elems) {
                    const long long x = e.add(s, shift);
                    if (!closed.test(x)) {
                        closed.set(x);
                        elems.push_back(x);
                    }
                }
                shift = e.add(shift, g);
            } while (shift != 0);
            if (seen.insert(closed).second) {
                std::sort(elems.begin(), elems.end());
                Node next{std::move(closed), std::move(elems), node.gens};
                next.gens.push_back(g);
                queue.push_back(std::move(next));
            }
        }
        done.push_back(std::move(node));
    }

    std::vector<SubgroupRecord> records;
    records.reserve(done.size());
    for (const Node& node : done) {
        SubgroupRecord rec;
        rec.order = static_cast<long long>(node.elems.size());
        // S = E/S^perp under the standard pairing; typed through the SNF of
        // its relation matrix, cross-checked against torsion counting
        rec.sub_type = oracle_quotient_type(e, annihilator_elements(e, node.gens));
        if (rec.sub_type != type_from_elements(e, node.elems))
            throw std::logic_error("oracle subgroup typing routes disagree");
        std::vector<std::vector<long long>> gens;
        gens.reserve(node.gens.size());
        for (long long g : node.gens) gens.push_back(e.element(g));
        rec.quot_type = oracle_quotient_type(e, gens);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<AbelianGroup> oracle_subgroup_types(const ExplicitGroup& e, long long bound) {
    std::vector<AbelianGroup> types;
    for (const SubgroupRecord& rec : oracle_all_subgroups(e, bound))
        types.push_back(rec.sub_type);
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    return types;
}

AbelianGroup oracle_quotient_type(const ExplicitGroup& e,
                                  const std::vector<std::vector<long long>>& generators) {
    const int c = static_cast<int>(e.moduli().size());
    IntegerMatrix m(c + static_cast<int>(generators.size()), c);
    for (int i = 0; i < c; ++i) m.at(i, i) = e.moduli()[static_cast<std::size_t>(i)];
    for (std::size_t r = 0; r < generators.size(); ++r) {
        if (static_cast<int>(generators[r].size()) != c)
            throw std::invalid_argument("generator tuple has wrong length");
        for (int i = 0; i < c; ++i)
            m.at(c + static_cast<int>(r), i) = generators[r][static_cast<std::size_t>(i)];
    }
    return group_from_relations(m);
}

std::set<AbelianGroup> oracle_extensions(const AbelianGroup& h, const AbelianGroup& k,
                                         long long bound) {
    const long long order = checked_mul(h.order(), k.order());
    check_bound(order, bound, "oracle_extensions");
    std::set<AbelianGroup> out;
    for (const AbelianGroup& g : abelian_groups_of_order(order)) {
        for (const SubgroupRecord& rec : cached_subgroup_records(g, bound))
            if (rec.sub_type == h && rec.quot_type == k) {
                out.insert(g);
                break;
            }
    }
    return out;
}

const std::vector<SubgroupRecord>& cached_subgroup_records(const AbelianGroup& g,
                                                           long long bound) {
    check_bound(g.order(), bound, "cached_subgroup_records");
    static std::mutex mutex;
    static std::map<AbelianGroup, std::vector<SubgroupRecord>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(g);
    if (it == cache.end())
        it = cache.emplace(g, oracle_all_subgroups(ExplicitGroup::from_group(g), bound)).first;
    return it->second;
}

}  // namespace cremona
