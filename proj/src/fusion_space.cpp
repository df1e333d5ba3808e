#include "braidc/fusion_space.hpp"

#include <stdexcept>

namespace braidc {

Charge FusionTree::total() const {
    if (leaves == 0) return Charge::Vacuum;
    if (leaves == 1) return Charge::Tau;
    return intermediates.back();
}

bool is_admissible(const FusionTree& t) {
    if (t.leaves < 0) return false;
    const int want = t.leaves >= 2 ? t.leaves - 1 : 0;
    if (static_cast<int>(t.intermediates.size()) != want) return false;
    Charge acc = t.leaves >= 1 ? Charge::Tau : Charge::Vacuum;
    for (Charge next : t.intermediates) {
        if (!admissible(acc, Charge::Tau, next)) return false;
        acc = next;
    }
    return true;
}

std::uint64_t fusion_space_dim(int n, std::optional<Charge> total) {
    if (n < 0) throw std::invalid_argument("fusion_space_dim: negative count");
    if (n == 0) {
        const bool match = !total || *total == Charge::Vacuum;
        return match ? 1 : 0;
    }
    // paths[c] = number of admissible intermediate labelings ending in c
    // after absorbing the first k leaves.
    std::uint64_t paths[2] = {0, 0};
    paths[charge_index(Charge::Tau)] = 1;
    const int steps = total ? n - 1 : n - 2;
    for (int s = 0; s < steps; ++s) {
        // vacuum is reachable only from tau; tau from either charge
        const std::uint64_t from_vac = paths[0];
        const std::uint64_t from_tau = paths[1];
        paths[0] = from_tau;
        paths[1] = from_vac + from_tau;
    }
    if (total) return paths[charge_index(*total)];
    // Final fusion outcome left open: any labeling of the earlier
    // intermediates extends, so count them all.
    if (n == 1) return 1;
    return paths[0] + paths[1];
}

namespace {

void extend(FusionTree& t, Charge acc, int remaining, Charge total,
            std::vector<FusionTree>& out) {
    if (remaining == 0) {
        if (acc == total) out.push_back(t);
        return;
    }
    for (Charge next : kAllCharges) {
        if (!admissible(acc, Charge::Tau, next)) continue;
        t.intermediates.push_back(next);
        extend(t, next, remaining - 1, total, out);
        t.intermediates.pop_back();
    }
}

}  // namespace

std::vector<FusionTree> enumerate_basis(int n, Charge total) {
    if (n < 0) throw std::invalid_argument("enumerate_basis: negative count");
    std::vector<FusionTree> out;
    if (n == 0) {
        if (total == Charge::Vacuum) out.push_back(FusionTree{0, {}});
        return out;
    }
    FusionTree t{n, {}};
    extend(t, Charge::Tau, n - 1, total, out);
    return out;
}

}  // namespace braidc
