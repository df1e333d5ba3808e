#include "braidc/diagram.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidc {

Diagram layout(const BraidWord& w) {
    Diagram d;
    d.strands = 3;
    for (const BraidFactor& f : w.factors) {
        if (f.generator != 1 && f.generator != 2)
            throw std::invalid_argument("layout: generator index must be 1 or 2");
        const int sign = f.exponent >= 0 ? 1 : -1;
        for (int k = std::abs(f.exponent); k > 0; --k)
            d.crossings.push_back(Crossing{f.generator, sign});
    }
    std::array<int, 3> occupant{0, 1, 2};  // slot -> strand
    for (const Crossing& c : d.crossings)
        std::swap(occupant[c.pair - 1], occupant[c.pair]);
    d.final_position.assign(3, 0);
    for (int slot = 0; slot < 3; ++slot) d.final_position[occupant[slot]] = slot;
    return d;
}

BraidWord word_from_crossings(const Diagram& d) {
    BraidWord raw;
    for (const Crossing& c : d.crossings) {
        if (!raw.factors.empty() && raw.factors.back().generator == c.pair &&
            (raw.factors.back().exponent > 0) == (c.sign > 0)) {
            raw.factors.back().exponent += c.sign;
        } else {
            raw.factors.push_back(BraidFactor{c.pair, c.sign});
        }
    }
    return normalize(raw);
}

namespace {

// ASCII geometry: 9 rows, strand rows at 0/4/8, one 7-column block per
// crossing with a 2-column margin on each side.
constexpr int kRows = 9;
constexpr int kBlock = 7;
constexpr int kMargin = 2;

}  // namespace

std::string render_ascii(const Diagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    const int width = kBlock * n + 2 * kMargin;
    std::vector<std::string> grid(kRows, std::string(width, ' '));
    for (int row : {0, 4, 8}) grid[row].assign(width, '-');

    for (int k = 0; k < n; ++k) {
        const Crossing& cr = d.crossings[k];
        const int c = kMargin + kBlock * k;
        const int r = cr.pair == 1 ? 0 : 4;
        // Both strands leave their rows inside the block.
        grid[r][c + 1] = '\\';
        for (int t = 2; t <= 4; ++t) grid[r][c + t] = ' ';
        grid[r][c + 5] = '/';
        grid[r + 4][c + 1] = '/';
        for (int t = 2; t <= 4; ++t) grid[r + 4][c + t] = ' ';
        grid[r + 4][c + 5] = '\\';
        // The over strand continues through the intersection; the under
        // strand keeps only the outer arms above.
        grid[r + 2][c + 3] = 'x';
        if (cr.sign > 0) {
            grid[r + 1][c + 2] = '\\';
            grid[r + 3][c + 4] = '\\';
        } else {
            grid[r + 3][c + 2] = '/';
            grid[r + 1][c + 4] = '/';
        }
    }

    std::string out;
    out.reserve(static_cast<std::size_t>(kRows) * (width + 1));
    for (const std::string& row : grid) {
        out += row;
        out += '\n';
    }
    return out;
}

namespace {

// SVG geometry: 100-unit pitch per crossing and per strand row, strand rows
// at y = 50/150/250, a 50-unit straight lead on both ends.
constexpr int kPitch = 100;
constexpr int kLead = 50;

constexpr const char* kStrokes[3] = {"#1f77b4", "#d62728", "#2ca02c"};

struct PathTracer {
    std::ostringstream d;
    int x = 0;
    int y = 0;

    void start(int x0, int y0) {
        x = x0;
        y = y0;
        d << "M " << x << ' ' << y;
    }
    void line_to(int nx, int ny) {
        if (nx == x && ny == y) return;
        d << " L " << nx << ' ' << ny;
        x = nx;
        y = ny;
    }
    void jump_to(int nx, int ny) {
        d << " M " << nx << ' ' << ny;
        x = nx;
        y = ny;
    }
};

int slot_y(int slot) { return kLead + kPitch * slot; }

}  // namespace

std::string render_svg(const Diagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    const int width = kPitch * n + 2 * kLead;
    const int height = kPitch * 3;

    std::array<PathTracer, 3> paths;
    std::array<int, 3> occupant{0, 1, 2};  // slot -> strand
    std::array<int, 3> slot_of{0, 1, 2};   // strand -> slot
    for (int s = 0; s < 3; ++s) paths[s].start(0, slot_y(s));

    for (int k = 0; k < n; ++k) {
        const Crossing& cr = d.crossings[k];
        const int x0 = kLead + kPitch * k;
        const int hi = cr.pair - 1;           // upper slot of the pair
        const int lo = cr.pair;               // lower slot of the pair
        const int down = occupant[hi];        // strand moving downward
        const int up = occupant[lo];          // strand moving upward
        const int y_hi = slot_y(hi);
        const int y_lo = slot_y(lo);
        // sign > 0: the descending strand passes over.
        const int over = cr.sign > 0 ? down : up;

        for (int strand : {down, up}) {
            PathTracer& p = paths[strand];
            const int y_from = strand == down ? y_hi : y_lo;
            const int y_to = strand == down ? y_lo : y_hi;
            p.line_to(x0, y_from);
            if (strand == over) {
                p.line_to(x0 + kPitch, y_to);
            } else {
                const int dy = y_to - y_from;
                p.line_to(x0 + 2 * kPitch / 5, y_from + 2 * dy / 5);
                p.jump_to(x0 + 3 * kPitch / 5, y_from + 3 * dy / 5);
                p.line_to(x0 + kPitch, y_to);
            }
        }
        std::swap(occupant[hi], occupant[lo]);
        slot_of[down] = lo;
        slot_of[up] = hi;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
        << width << ' ' << height << "\">\n";
    for (int strand = 0; strand < 3; ++strand) {
        PathTracer& p = paths[strand];
        p.line_to(width, slot_y(slot_of[strand]));
        out << "  <path d=\"" << p.d.str() << "\" fill=\"none\" stroke=\""
            << kStrokes[strand] << "\" stroke-width=\"6\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace braidc
