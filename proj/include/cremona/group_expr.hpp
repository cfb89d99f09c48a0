#pragma once

#include <stdexcept>
#include <string>

#include "cremona/abelian_group.hpp"
#include "cremona/partition.hpp"

namespace cremona {

/// Parse failure with the 1-based character position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar (whitespace and case insensitive):
///   expr := term (("x" | "*") term)*
///   term := atom ("^" INT)?
///   atom := ("Z" | "C") "/"? INT          with INT >= 1
/// "Z1" is the trivial group. Parsing the canonical rendering of a group
/// gives the group back.
AbelianGroup parse_group(const std::string& text);

/// "[a,b,c]" with nonnegative entries; normalized (zeros dropped, sorted).
Partition parse_partition(const std::string& text);

}  // namespace cremona
