// fusion_space.hpp: fusion trees over n tau anyons and dimension counting.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidc/charge.hpp"

namespace braidc {

// A left-to-right fusion sequence over identical tau leaves.
// intermediates[k] is the outcome after absorbing leaf k+2, so for n >= 2
// the last intermediate is the total charge of the tree.
struct FusionTree {
    int leaves = 0;
    std::vector<Charge> intermediates;  // size max(leaves - 1, 0)

    Charge total() const;
    bool operator==(const FusionTree&) const = default;
};

// True when every fusion step in the tree is allowed by the fusion rules.
bool is_admissible(const FusionTree& t);

// Number of distinct fusion trees over n tau leaves with the given total.
// With total unspecified the outcome of the final fusion is left open and
// does not label distinct trees, which reproduces the Fibonacci sequence
// 1, 1, 2, 3, 5, ... for n = 1, 2, 3, ...
std::uint64_t fusion_space_dim(int n, std::optional<Charge> total);

// All admissible trees with the given total, ordered lexicographically by
// intermediates with Vacuum < Tau. For n = 3, total = Tau, index 0 is the
// qubit state |0> (first pair fuses to the vacuum) and index 1 is |1>.
std::vector<FusionTree> enumerate_basis(int n, Charge total);

}  // namespace braidc
