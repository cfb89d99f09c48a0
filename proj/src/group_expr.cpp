#include "cremona/group_expr.hpp"

#include <cctype>
#include <vector>

namespace cremona {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    std::size_t here() const { return pos_ + 1; }  // 1-based for messages

    long long integer(const char* what) {
        skip_ws();
        const std::size_t start = here();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(std::string("expected ") + what, start);
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000'000LL) throw ParseError("integer too large", start);
            ++pos_;
        }
        return v;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

AbelianGroup parse_group(const std::string& text) {
    Scanner s(text);
    if (s.done()) throw ParseError("empty group expression", 1);
    std::vector<long long> factors;
    for (;;) {
        s.skip_ws();
        const std::size_t atom_at = s.here();
        const char c = s.done() ? '\0' : s.take();
        if (c != 'Z' && c != 'z' && c != 'C' && c != 'c')
            throw ParseError("expected 'Z' or 'C'", atom_at);
        if (!s.done() && s.peek() == '/') s.take();
        const long long n = s.integer("cyclic order");
        if (n < 1) throw ParseError("cyclic order must be >= 1", atom_at);
        long long count = 1;
        if (!s.done() && s.peek() == '^') {
            s.take();
            const std::size_t exp_at = s.here();
            count = s.integer("exponent");
            if (count < 1) throw ParseError("exponent must be >= 1", exp_at);
            if (count > 64) throw ParseError("exponent too large", exp_at);
        }
        for (long long i = 0; i < count; ++i) factors.push_back(n);
        if (s.done()) break;
        const std::size_t sep_at = s.here();
        const char sep = s.take();
        if (sep != 'x' && sep != 'X' && sep != '*')
            throw ParseError("expected 'x' or '*' between factors", sep_at);
        if (s.done()) throw ParseError("trailing separator", sep_at);
    }
    return AbelianGroup::from_cyclic_factors(factors);
}

Partition parse_partition(const std::string& text) {
    Scanner s(text);
    if (s.done() || s.take() != '[')
        throw ParseError("expected '[' opening a partition", 1);
    std::vector<int> parts;
    if (!s.done() && s.peek() == ']') {
        s.take();
    } else {
        for (;;) {
            const long long v = s.integer("partition part");
            if (v > 1'000'000) throw ParseError("partition part too large", s.here());
            parts.push_back(static_cast<int>(v));
            if (s.done()) throw ParseError("unterminated partition", s.here());
            const char c = s.take();
            if (c == ']') break;
            if (c != ',') throw ParseError("expected ',' or ']'", s.here() - 1);
        }
    }
    if (!s.done()) throw ParseError("trailing input after partition", s.here());
    return Partition::normalize(std::move(parts));
}

}  // namespace cremona
