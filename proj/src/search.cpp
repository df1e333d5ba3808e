#include "braidc/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "braidc/generators.hpp"
#include "braidc/metric.hpp"

namespace braidc {

namespace {

constexpr int kAlpha[4] = {-4, -2, 2, 4};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

// Same arithmetic as distance(u, target) with the unitarity guard hoisted
// out of the hot loop: the caller passes target.adjoint() once and every
// u is a product of unitary generators.
double weave_error(const Unitary2& u, const Unitary2& target_adjoint) {
    const cplx tr = (u.m[0] * target_adjoint.m[0] + u.m[1] * target_adjoint.m[2]) +
                    (u.m[2] * target_adjoint.m[1] + u.m[3] * target_adjoint.m[3]);
    double radicand = 2.0 - std::abs(tr);
    if (std::abs(radicand) < 1e-12) radicand = 0.0;
    if (radicand < 0.0) radicand = 0.0;
    return std::sqrt(radicand);
}

// Running best candidate under the published tie-break: smaller error, then
// fewer exchanges, then starting generator 1 before 2, then lexicographic
// exponent sequence (-4 < -2 < +2 < +4). The key determines the word, so
// the minimum is unique and merges are order-independent.
struct Best {
    bool set = false;
    double error = 0.0;
    int exchanges = 0;
    int start_gen = 0;
    std::vector<int> exponents;

    void offer(double err, int exch, int sg, const std::vector<int>& exps) {
        if (set && std::tie(error, exchanges, start_gen, exponents) <=
                       std::tie(err, exch, sg, exps))
            return;
        set = true;
        error = err;
        exchanges = exch;
        start_gen = sg;
        exponents = exps;
    }

    void merge(const Best& o) {
        if (o.set) offer(o.error, o.exchanges, o.start_gen, o.exponents);
    }

    BraidWord word() const {
        BraidWord w;
        int gen = start_gen;
        for (int e : exponents) {
            w.factors.push_back(BraidFactor{gen, e});
            gen = 3 - gen;
        }
        return w;
    }
};

int word_start_gen(const BraidWord& w) {
    return w.empty() ? 0 : w.factors.front().generator;
}

std::vector<int> word_exponents(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.factors.size());
    for (const BraidFactor& f : w.factors) out.push_back(f.exponent);
    return out;
}

struct PowerTable {
    Unitary2 p[2][4];

    PowerTable() {
        for (int g = 1; g <= 2; ++g)
            for (int t = 0; t < 4; ++t) p[g - 1][t] = sigma_power(g, kAlpha[t]);
    }
};

// Depth-first extension below a fixed prefix. Considers the word at every
// node (one generator product per node), then extends while the budget
// allows. exps carries the full exponent stack including the prefix.
void explore(const Unitary2& target_adjoint, int max_exchanges, int max_slots,
             const PowerTable& pow, int start_gen, std::vector<int>& exps,
             int next_gen, const Unitary2& u, int used, Best& best,
             std::uint64_t& nodes) {
    ++nodes;
    best.offer(weave_error(u, target_adjoint), used, start_gen, exps);
    if (static_cast<int>(exps.size()) >= max_slots) return;
    for (int t = 0; t < 4; ++t) {
        const int e = kAlpha[t];
        if (used + std::abs(e) > max_exchanges) continue;
        exps.push_back(e);
        explore(target_adjoint, max_exchanges, max_slots, pow, start_gen, exps,
                3 - next_gen, pow.p[next_gen - 1][t] * u, used + std::abs(e),
                best, nodes);
        exps.pop_back();
    }
}

SearchResult finish(Best best, SearchMethod method, const Unitary2& target,
                    std::uint64_t nodes, std::size_t index_size,
                    Clock::time_point start) {
    SearchResult r;
    r.word = best.word();
    r.matrix = evaluate(r.word);
    r.error = distance(r.matrix, target);
    r.nodes_visited = nodes;
    r.index_size = index_size;
    r.method = method;
    r.wall_time_ms = elapsed_ms(start);
    return r;
}

}  // namespace

std::string method_name(SearchMethod m) {
    return m == SearchMethod::Brute ? "brute" : "bidir";
}

void SearchBudget::validate() const {
    if (max_exchanges < 2)
        throw std::invalid_argument("search budget: max_exchanges must be at least 2");
    if (max_slots < 0)
        throw std::invalid_argument("search budget: max_slots must not be negative");
    if (threads < 1)
        throw std::invalid_argument("search budget: threads must be positive");
}

WeaveEnumerator::WeaveEnumerator(int max_exchanges, int max_slots)
    : max_exchanges_(max_exchanges), max_slots_(max_slots) {}

std::optional<BraidWord> WeaveEnumerator::next() {
    if (done_) return std::nullopt;
    if (!emitted_empty_) {
        emitted_empty_ = true;
        return BraidWord{};
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    BraidWord w;
    int gen = start_gen_;
    for (int e : exponents_) {
        w.factors.push_back(BraidFactor{gen, e});
        gen = 3 - gen;
    }
    return w;
}

bool WeaveEnumerator::advance() {
    const int max = max_exchanges_;
    // Rewrites positions from..end with the lexicographically first feasible
    // exponents; every remaining slot needs at least two exchanges.
    const auto fill_first = [&](int from) {
        int cost = 0;
        for (int q = 0; q < from; ++q) cost += std::abs(exponents_[q]);
        const int size = static_cast<int>(exponents_.size());
        for (int q = from; q < size; ++q) {
            const int rest = size - 1 - q;
            if (cost + 4 + 2 * rest <= max) exponents_[q] = -4;
            else if (cost + 2 + 2 * rest <= max) exponents_[q] = -2;
            else return false;
            cost += std::abs(exponents_[q]);
        }
        return true;
    };
    if (exponents_.empty()) {
        if (max_slots_ < 1 || max < 2) return false;
        start_gen_ = 1;
        exponents_.assign(1, 0);
        return fill_first(0);
    }
    const int size = static_cast<int>(exponents_.size());
    std::vector<int> prefix_cost(size + 1, 0);
    for (int q = 0; q < size; ++q)
        prefix_cost[q + 1] = prefix_cost[q] + std::abs(exponents_[q]);
    for (int p = size - 1; p >= 0; --p) {
        int idx = 0;
        while (kAlpha[idx] != exponents_[p]) ++idx;
        for (int t = idx + 1; t < 4; ++t) {
            const int rest = size - 1 - p;
            if (prefix_cost[p] + std::abs(kAlpha[t]) + 2 * rest > max) continue;
            exponents_[p] = kAlpha[t];
            if (fill_first(p + 1)) return true;
        }
    }
    if (start_gen_ == 1) {
        start_gen_ = 2;
        return fill_first(0);
    }
    if (size + 1 > max_slots_ || 2 * (size + 1) > max) return false;
    start_gen_ = 1;
    exponents_.assign(size + 1, 0);
    return fill_first(0);
}

std::uint64_t count_weaves(int max_exchanges, int max_slots) {
    if (max_exchanges < 0 || max_slots < 0) return 0;
    std::uint64_t total = 1;  // the empty weave
    for (int s = 1; s <= max_slots && 2 * s <= max_exchanges; ++s) {
        // k slots carry |e| = 4, the rest |e| = 2: cost 2s + 2k.
        std::uint64_t combos = 0;
        std::uint64_t binom = 1;
        for (int k = 0; k <= s; ++k) {
            if (2 * s + 2 * k <= max_exchanges) combos += binom;
            binom = binom * static_cast<std::uint64_t>(s - k) /
                    static_cast<std::uint64_t>(k + 1);
        }
        total += 2ull * (1ull << s) * combos;  // 2 starts, 2^s sign choices
    }
    return total;
}

std::vector<BraidWord> enumerate_weaves(const SearchBudget& budget) {
    budget.validate();
    WeaveEnumerator en(budget.max_exchanges, budget.resolved_max_slots());
    std::vector<BraidWord> out;
    while (auto w = en.next()) out.push_back(std::move(*w));
    return out;
}

SearchResult brute_force(const Unitary2& target, const SearchBudget& budget) {
    budget.validate();
    const auto start = Clock::now();
    const int max = budget.max_exchanges;
    const int cap = budget.resolved_max_slots();
    const Unitary2 tadj = target.adjoint();
    const PowerTable pow;
    const Unitary2 id = Unitary2::identity();

    Best best;
    std::uint64_t nodes = 1;
    std::vector<int> no_exps;
    best.offer(weave_error(id, tadj), 0, 0, no_exps);

    // Words with one slot, evaluated inline.
    if (cap >= 1) {
        for (int sg = 1; sg <= 2; ++sg)
            for (int t = 0; t < 4; ++t) {
                if (std::abs(kAlpha[t]) > max) continue;
                ++nodes;
                std::vector<int> exps{kAlpha[t]};
                best.offer(weave_error(pow.p[sg - 1][t] * id, tadj),
                           std::abs(kAlpha[t]), sg, exps);
            }
    }

    // Everything else hangs below a two-slot prefix; these are the parallel
    // work units.
    struct Branch {
        int start_gen;
        int t1, t2;
    };
    std::vector<Branch> branches;
    if (cap >= 2) {
        for (int sg = 1; sg <= 2; ++sg)
            for (int t1 = 0; t1 < 4; ++t1)
                for (int t2 = 0; t2 < 4; ++t2)
                    if (std::abs(kAlpha[t1]) + std::abs(kAlpha[t2]) <= max)
                        branches.push_back(Branch{sg, t1, t2});
    }

    std::vector<Best> branch_best(branches.size());
    std::vector<std::uint64_t> branch_nodes(branches.size(), 0);
    std::atomic<std::size_t> cursor{0};
    const auto run_branch = [&](std::size_t b) {
        const Branch& br = branches[b];
        const int g1 = br.start_gen;
        const int g2 = 3 - g1;
        std::vector<int> exps;
        exps.reserve(static_cast<std::size_t>(cap));
        exps.push_back(kAlpha[br.t1]);
        const Unitary2 u1 = pow.p[g1 - 1][br.t1] * id;
        exps.push_back(kAlpha[br.t2]);
        const Unitary2 u2 = pow.p[g2 - 1][br.t2] * u1;
        const int used = std::abs(kAlpha[br.t1]) + std::abs(kAlpha[br.t2]);
        explore(tadj, max, cap, pow, g1, exps, g1, u2, used, branch_best[b],
                branch_nodes[b]);
    };
    const auto worker = [&] {
        for (;;) {
            const std::size_t b = cursor.fetch_add(1);
            if (b >= branches.size()) return;
            run_branch(b);
        }
    };
    const int nthreads = std::max(
        1, std::min<int>(budget.threads, static_cast<int>(branches.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    for (std::size_t b = 0; b < branches.size(); ++b) {
        best.merge(branch_best[b]);
        nodes += branch_nodes[b];
    }
    return finish(best, SearchMethod::Brute, target, nodes, 0, start);
}

namespace {

// Half-weave index cell: the four canonical first-row coordinates quantized
// to a fixed grid. Probing the 3^4 neighborhood of a query cell tolerates
// matches that straddle a cell boundary.
constexpr double kCellSize = 0.02;

struct CellKey {
    std::array<int, 4> q;
    bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int v : k.q) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

CellKey cell_of(const Unitary2& canonical) {
    const auto q = [](double x) {
        return static_cast<int>(std::floor(x / kCellSize));
    };
    return CellKey{{q(canonical.m[0].real()), q(canonical.m[0].imag()),
                    q(canonical.m[1].real()), q(canonical.m[1].imag())}};
}

struct Half {
    BraidWord word;
    Unitary2 matrix;
};

}  // namespace

SearchResult bidirectional(const Unitary2& target, const SearchBudget& budget) {
    budget.validate();
    const auto start = Clock::now();
    const int max = budget.max_exchanges;
    const int cap = budget.resolved_max_slots();
    const int half_max = (max + 1) / 2;
    const int half_cap = std::min(cap, half_max / 2);
    const Unitary2 tadj = target.adjoint();

    const std::uint64_t half_count = count_weaves(half_max, half_cap);
    if (half_count > budget.max_index_entries)
        throw SearchResourceError(
            "bidirectional index needs " + std::to_string(half_count) +
                " half-weaves, over the configured ceiling of " +
                std::to_string(budget.max_index_entries),
            static_cast<std::size_t>(half_count));

    std::vector<Half> halves;
    {
        WeaveEnumerator en(half_max, half_cap);
        while (auto w = en.next()) {
            Half h;
            h.matrix = evaluate(*w);
            h.word = std::move(*w);
            halves.push_back(std::move(h));
        }
    }

    // Each half is filed under both residual signs of its canonical form,
    // so a probe never misses across the sign convention.
    std::unordered_map<CellKey, std::vector<std::uint32_t>, CellKeyHash> index;
    for (std::size_t id = 0; id < halves.size(); ++id) {
        const Unitary2 canon = phase_canonicalize(halves[id].matrix);
        const CellKey plus = cell_of(canon);
        const CellKey minus = cell_of(canon.scaled(-1.0));
        index[plus].push_back(static_cast<std::uint32_t>(id));
        if (!(plus == minus))
            index[minus].push_back(static_cast<std::uint32_t>(id));
    }
    const std::size_t index_size = halves.size();

    std::uint64_t nodes = halves.size();
    std::atomic<std::uint64_t> probe_nodes{0};
    std::vector<Best> thread_best(
        static_cast<std::size_t>(std::max(1, budget.threads)));
    std::atomic<std::size_t> cursor{0};

    const auto consider = [&](Best& best, const BraidWord& w,
                              std::uint64_t& local_nodes) {
        ++local_nodes;
        const Unitary2 u = evaluate(w);
        best.offer(weave_error(u, tadj), w.length(), word_start_gen(w),
                   word_exponents(w));
    };

    const auto worker = [&](std::size_t slot) {
        Best& best = thread_best[slot];
        std::uint64_t local_nodes = 0;
        for (;;) {
            const std::size_t fa = cursor.fetch_add(1);
            if (fa >= halves.size()) break;
            const Half& forward = halves[fa];
            // The forward half alone is always a candidate; this keeps every
            // half-length weave in the search set.
            consider(best, forward.word, local_nodes);
            // Wanted completion C with evaluate(forward then B) = C * forward.
            const Unitary2 completion = target * forward.matrix.adjoint();
            const CellKey base = cell_of(phase_canonicalize(completion));
            CellKey probe;
            for (int d0 = -1; d0 <= 1; ++d0)
                for (int d1 = -1; d1 <= 1; ++d1)
                    for (int d2 = -1; d2 <= 1; ++d2)
                        for (int d3 = -1; d3 <= 1; ++d3) {
                            probe.q = {base.q[0] + d0, base.q[1] + d1,
                                       base.q[2] + d2, base.q[3] + d3};
                            const auto it = index.find(probe);
                            if (it == index.end()) continue;
                            for (std::uint32_t id : it->second) {
                                const BraidWord cand = normalize(
                                    concat(forward.word, halves[id].word));
                                if (!is_weave(cand) || cand.length() > max ||
                                    cand.slot_count() > cap)
                                    continue;
                                consider(best, cand, local_nodes);
                            }
                        }
        }
        probe_nodes.fetch_add(local_nodes);
    };

    const int nthreads = std::max(1, budget.threads);
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i)
            pool.emplace_back(worker, static_cast<std::size_t>(i));
        for (std::thread& th : pool) th.join();
    }
    Best best;
    for (const Best& b : thread_best) best.merge(b);
    nodes += probe_nodes.load();
    return finish(best, SearchMethod::Bidirectional, target, nodes, index_size,
                  start);
}

SearchResult search(const Unitary2& target, const SearchBudget& budget) {
    return budget.method == SearchMethod::Brute ? brute_force(target, budget)
                                                : bidirectional(target, budget);
}

}  // namespace braidc
