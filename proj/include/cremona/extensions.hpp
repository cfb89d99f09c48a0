#pragma once

#include <optional>
#include <vector>

#include "cremona/abelian_group.hpp"

namespace cremona {

struct ExtensionMiddle {
    AbelianGroup group;
    bool split = false;
    friend bool operator==(const ExtensionMiddle&, const ExtensionMiddle&) = default;
};

/// Isomorphism classes G admitting an exact sequence 0 -> sub -> G -> quot -> 0.
/// Exactly one middle is split (the direct product) unless the enumeration was
/// truncated by a cap.
struct ExtensionResult {
    AbelianGroup sub;
    AbelianGroup quot;
    std::vector<ExtensionMiddle> middles;  // sorted by invariant factors
    bool truncated = false;
};

/// Fulton's criterion: an extension 0 -> H -> G -> K -> 0 exists iff for every
/// prime the LR coefficient of the p-types is positive. False whenever orders
/// mismatch. Symmetric in H and K.
bool extension_exists(const AbelianGroup& h, const AbelianGroup& k, const AbelianGroup& g);

/// All middles: the Cartesian combination over primes of the supports of the
/// per-prime LR products. An optional cap bounds the number of middles
/// returned; hitting it sets `truncated` instead of sampling silently.
ExtensionResult enumerate_extensions(const AbelianGroup& h, const AbelianGroup& k,
                                     std::optional<std::size_t> cap = std::nullopt);

struct CyclicSplit {
    long long cyclic_order = 1;
    AbelianGroup complement;
};

/// Splits off a maximal cyclic factor: G = Z/d x complement where d is the
/// exponent of G (largest invariant factor) and rank(complement) = rank(G)-1.
/// Throws std::invalid_argument on the trivial group.
CyclicSplit max_cyclic_split(const AbelianGroup& g);

}  // namespace cremona
