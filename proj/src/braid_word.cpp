#include "braidc/braid_word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace braidc {

int BraidWord::length() const {
    int n = 0;
    for (const BraidFactor& f : factors) n += std::abs(f.exponent);
    return n;
}

BraidWord concat(const BraidWord& w1, const BraidWord& w2) {
    BraidWord out = w1;
    out.factors.insert(out.factors.end(), w2.factors.begin(),
                       w2.factors.end());
    return out;
}

namespace {

// Smallest-magnitude representative of e mod 10, landing in {-4,...,+5}.
int reduce_exponent(int e) {
    int r = e % 10;
    if (r < 0) r += 10;
    return r > 5 ? r - 10 : r;
}

}  // namespace

BraidWord normalize(const BraidWord& w) {
    std::vector<BraidFactor> cur = w.factors;
    for (;;) {
        std::vector<BraidFactor> next;
        for (const BraidFactor& f : cur) {
            if (!next.empty() && next.back().generator == f.generator) {
                next.back().exponent += f.exponent;
            } else {
                next.push_back(f);
            }
        }
        for (BraidFactor& f : next) f.exponent = reduce_exponent(f.exponent);
        std::erase_if(next, [](const BraidFactor& f) { return f.exponent == 0; });
        if (next == cur) return BraidWord{std::move(next)};
        cur = std::move(next);
    }
}

bool is_weave(const BraidWord& w) {
    int prev_gen = 0;
    for (const BraidFactor& f : w.factors) {
        if (f.generator != 1 && f.generator != 2) return false;
        if (f.generator == prev_gen) return false;
        const int a = std::abs(f.exponent);
        if (a != 2 && a != 4) return false;
        prev_gen = f.generator;
    }
    return true;
}

std::string word_to_text(const BraidWord& w) {
    std::ostringstream out;
    bool first = true;
    for (const BraidFactor& f : w.factors) {
        if (!first) out << ' ';
        out << 's' << f.generator << '^' << f.exponent;
        first = false;
    }
    return out.str();
}

BraidWord text_to_word(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string token;
    int index = 0;
    for (; in >> token; ++index) {
        const auto fail = [&](const std::string& why) {
            throw WordParseError("bad token '" + token + "': " + why, index);
        };
        if (token.size() < 4 || token[0] != 's') fail("expected s<g>^<e>");
        if (token[1] != '1' && token[1] != '2') fail("generator must be 1 or 2");
        if (token[2] != '^') fail("expected '^' after generator");
        const std::string exp = token.substr(3);
        std::size_t pos = 0;
        int e = 0;
        try {
            e = std::stoi(exp, &pos);
        } catch (const std::exception&) {
            fail("exponent is not an integer");
        }
        if (pos != exp.size()) fail("trailing characters after exponent");
        w.factors.push_back(BraidFactor{token[1] - '0', e});
    }
    return w;
}

}  // namespace braidc
