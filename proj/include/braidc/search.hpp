// search.hpp: enumeration of weave words and the two search backends.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidc/braid_word.hpp"
#include "braidc/unitary2.hpp"

namespace braidc {

enum class SearchMethod { Brute, Bidirectional };

std::string method_name(SearchMethod m);

// Raised when a search would exceed its configured memory ceiling;
// index_size reports the half-weave count the index would need.
struct SearchResourceError : std::runtime_error {
    explicit SearchResourceError(const std::string& what, std::size_t index_size)
        : std::runtime_error(what), index_size(index_size) {}
    std::size_t index_size;
};

struct SearchBudget {
    // Bound on the total exchange count of a candidate word (sum of |e|).
    int max_exchanges = 30;
    // Bound on the number of generator slots. Zero means "derive from
    // max_exchanges": every slot costs at least two exchanges, so the
    // default is max_exchanges / 2.
    int max_slots = 0;
    SearchMethod method = SearchMethod::Brute;
    int threads = 1;
    // Bidirectional only: ceiling on the number of indexed half-weaves.
    std::size_t max_index_entries = 64'000'000;

    int resolved_max_slots() const {
        return max_slots > 0 ? max_slots : max_exchanges / 2;
    }
    // Throws std::invalid_argument when max_exchanges < 2, max_slots < 0,
    // or threads < 1 (max_slots == 0 selects the default).
    void validate() const;
};

struct SearchResult {
    BraidWord word;
    Unitary2 matrix;
    double error = 0.0;
    std::uint64_t nodes_visited = 0;
    std::size_t index_size = 0;  // half-weaves indexed; 0 for brute
    double wall_time_ms = 0.0;
    SearchMethod method = SearchMethod::Brute;
};

// Streams every weave word with total exchange count <= max_exchanges and
// slot count <= max_slots, in a fixed canonical order: by slot count, then
// starting generator (1 before 2), then exponent sequence with exponents
// ordered -4 < -2 < +2 < +4. The empty word is yielded first.
class WeaveEnumerator {
  public:
    WeaveEnumerator(int max_exchanges, int max_slots);
    // Returns the next word, or nullopt once the space is exhausted.
    std::optional<BraidWord> next();

  private:
    bool advance();

    int max_exchanges_;
    int max_slots_;
    bool emitted_empty_ = false;
    bool done_ = false;
    int start_gen_ = 1;
    std::vector<int> exponents_;
};

// Number of weave words the enumerator yields for these bounds, counting
// the empty word. Computed combinatorially, not by enumeration.
std::uint64_t count_weaves(int max_exchanges, int max_slots);

// Materializes the full weave list for the budget, in enumerator order.
// Intended for small budgets; the searches stream instead.
std::vector<BraidWord> enumerate_weaves(const SearchBudget& budget);

// Exhaustive scan of the weave space. Visits every word within the budget
// exactly once, reusing prefix products so each node costs one 2x2 multiply.
// Results are deterministic for any thread count: ties on error break by
// fewer exchanges, then starting generator, then exponent sequence.
SearchResult brute_force(const Unitary2& target, const SearchBudget& budget);

// Meet-in-the-middle search: indexes all half-length weaves, then probes the
// index with target-completions of forward halves. Candidate words are
// normalized and re-verified before ranking, so every reported error is the
// true error of the reported word. Finds a word at least as good as the best
// half-length weave; may match the full exhaustive optimum.
SearchResult bidirectional(const Unitary2& target, const SearchBudget& budget);

// Dispatches on budget.method.
SearchResult search(const Unitary2& target, const SearchBudget& budget);

}  // namespace braidc
