// braid_word.hpp: braid words on three strands, their text form, and the
// weave normal form.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace braidc {

// One run of a generator, sigma_generator^exponent.
struct BraidFactor {
    int generator = 1;  // 1 or 2
    int exponent = 0;
    bool operator==(const BraidFactor&) const = default;
};

// Factors are stored in temporal order: factors[0] is the first exchange
// physically performed. Normalized words have alternating generators and
// nonzero exponents; raw words (parser output, test fixtures) may not.
struct BraidWord {
    std::vector<BraidFactor> factors;

    int length() const;  // sum |exponent|, the elementary crossing count
    int slot_count() const { return static_cast<int>(factors.size()); }
    bool empty() const { return factors.empty(); }
    bool operator==(const BraidWord&) const = default;
};

// Temporal concatenation: w1 followed by w2.
BraidWord concat(const BraidWord& w1, const BraidWord& w2);

// Merges adjacent same-generator factors, reduces exponents modulo 10 into
// {-4,...,+5} (sigma^10 is the identity on the qubit), drops zeros, and
// cascades until stable. Preserves the evaluated operator.
BraidWord normalize(const BraidWord& w);

// True iff every exponent lies in {-4,-2,+2,+4} and generators strictly
// alternate. The empty word is a weave.
bool is_weave(const BraidWord& w);

struct WordParseError : std::runtime_error {
    WordParseError(const std::string& msg, int token) :
        std::runtime_error(msg),
        token_index(token)
    {}
    int token_index;
};

// Text form: whitespace-separated tokens "s<g>^<e>", temporal order left to
// right, e.g. "s1^4 s2^-2". The parser accepts zero exponents so that raw
// words round-trip; normalize() removes them.
std::string word_to_text(const BraidWord& w);
BraidWord text_to_word(const std::string& text);  // throws WordParseError

}  // namespace braidc
