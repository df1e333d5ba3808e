// diagram.hpp: braid diagrams and their ASCII / SVG renderings.
#pragma once

#include <string>
#include <vector>

#include "braidc/braid_word.hpp"

namespace braidc {

// One elementary crossing. pair is 1 (strands 0,1) or 2 (strands 1,2);
// sign +1 when the left strand passes over, -1 when it passes under.
struct Crossing {
    int pair = 1;
    int sign = 1;

    bool operator==(const Crossing&) const = default;
};

struct Diagram {
    int strands = 3;
    std::vector<Crossing> crossings;
    // Where each strand ends up: final_position[i] is the terminal slot of
    // the strand that entered at slot i.
    std::vector<int> final_position;
};

// Expands a braid word into its crossing sequence in temporal order. A
// factor with exponent e contributes |e| identical crossings. The word is
// laid out as written; callers wanting a reduced picture normalize first.
Diagram layout(const BraidWord& w);

// Rebuilds a braid word from a crossing sequence, merging runs of identical
// crossings. word_from_crossings(layout(w)) == normalize(w) for words whose
// normal form has no exponent beyond +-4; larger exponents wrap mod 10 the
// same way normalize does.
BraidWord word_from_crossings(const Diagram& d);

// Fixed-width ASCII art. Three strand rows, crossings drawn left to right,
// over-strand drawn through the 'x', under-strand interrupted.
std::string render_ascii(const Diagram& d);

// Standalone SVG 1.1 document. One polyline path per anyon world line,
// under-strand broken at each crossing.
std::string render_svg(const Diagram& d);

}  // namespace braidc
