#include "sdc/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <omp.h>

namespace sdc {

namespace {

// Redundancy parts of the two systematic forms, one packed word per message bit.
struct Forms {
    std::size_t k = 0;
    std::vector<std::uint64_t> first;
    std::vector<std::uint64_t> second;
};

std::uint64_t pack(const BinaryMatrix& m, std::size_t r, const std::vector<std::size_t>& cols) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (m.get(r, cols[i])) w |= std::uint64_t{1} << i;
    return w;
}

Forms systematic_forms(const BinaryCode& c) {
    if (!c.is_self_dual()) throw CensusError("census needs a self-dual code");
    const std::size_t k = c.dimension();
    if (k > 64) throw CensusError("census supports dimension up to 64");
    const auto& s = c.pivots();
    std::vector<bool> in_s(c.length(), false);
    for (auto p : s) in_s[p] = true;
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < c.length(); ++i)
        if (!in_s[i]) t.push_back(i);

    const auto second = rref(c.generator(), t);
    for (auto p : second.pivots)
        if (in_s[p]) throw CensusError("the complement of the pivot set is not an information set");

    Forms f;
    f.k = k;
    for (std::size_t r = 0; r < k; ++r) f.first.push_back(pack(c.generator(), r, t));
    for (std::size_t r = 0; r < k; ++r) f.second.push_back(pack(second.matrix, r, s));
    return f;
}

std::uint64_t binomial_sum(std::size_t k, int t) {
    unsigned __int128 total = 0, term = 1;
    for (int d = 0; d <= t && static_cast<std::size_t>(d) <= k; ++d) {
        total += term;
        term = term * (k - d) / (d + 1);
    }
    const unsigned __int128 cap = ~std::uint64_t{0};
    return static_cast<std::uint64_t>(total > cap ? cap : total);
}

void radii(int max_weight, int& t1, int& t2) {
    t1 = max_weight / 2;
    t2 = max_weight - t1 - 1;
}

// Pass over one systematic form: messages of weight <= t, counting a word of
// total weight depth + popcount only when popcount >= min_pc.
struct Pass {
    const std::uint64_t* red;
    int k;
    int t;
    int min_pc;
    int max_weight;
    int abort_below;
};

class SerialWalker {
  public:
    SerialWalker(const Pass& p, std::vector<std::uint64_t>& counts) : p_(p), counts_(counts) {}

    bool run() {
        walk(0, 0, 0);
        return aborted_;
    }
    std::uint64_t nodes() const { return nodes_; }

  private:
    void walk(int start, int depth, std::uint64_t acc) {
        if (aborted_) return;
        ++nodes_;
        const int pc = std::popcount(acc);
        const int w = depth + pc;
        if (depth > 0 && w < p_.abort_below) {
            aborted_ = true;
            return;
        }
        if (pc >= p_.min_pc && w <= p_.max_weight) ++counts_[w];
        if (depth == p_.t) return;
        for (int j = start; j < p_.k; ++j) walk(j + 1, depth + 1, acc ^ p_.red[j]);
    }

    const Pass& p_;
    std::vector<std::uint64_t>& counts_;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
};

// Kernel: counts go into a thread-local array indexed by full weight.
class Kernel {
  public:
    Kernel(const Pass& p, std::uint64_t* counts, std::atomic<bool>& abort) : p_(p), counts_(counts), abort_(abort) {}

    // Visits the subtree below a node at `depth` whose children start at `start`.
    void below(int start, int depth, std::uint64_t acc) {
        if (depth == p_.t) return;
        if (depth + 1 == p_.t) {
            leaves(start, depth + 1, acc);
            return;
        }
        for (int j = start; j < p_.k; ++j) {
            if (abort_.load(std::memory_order_relaxed)) return;
            const std::uint64_t a = acc ^ p_.red[j];
            visit(depth + 1, a);
            below(j + 1, depth + 1, a);
        }
    }

    void visit(int depth, std::uint64_t acc) {
        ++nodes_;
        const int pc = std::popcount(acc);
        const int w = depth + pc;
        if (w < p_.abort_below && depth > 0) abort_.store(true, std::memory_order_relaxed);
        if (pc >= p_.min_pc && w <= p_.max_weight) ++counts_[w];
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    void leaves(int start, int depth, std::uint64_t acc) {
        const std::uint64_t* red = p_.red;
        // Almost every leaf lands above both the count cap and the abort
        // threshold, so the bookkeeping sits behind one rarely taken branch.
        const int high = std::max(p_.max_weight, p_.abort_below - 1) - depth;
        for (int j = start; j < p_.k; ++j) {
            const int pc = std::popcount(acc ^ red[j]);
            if (pc <= high) [[unlikely]] {
                if (depth + pc < p_.abort_below) abort_.store(true, std::memory_order_relaxed);
                if (pc >= p_.min_pc && depth + pc <= p_.max_weight) ++counts_[depth + pc];
            }
        }
        nodes_ += static_cast<std::uint64_t>(std::max(0, p_.k - start));
    }

    const Pass& p_;
    std::uint64_t* counts_;
    std::atomic<bool>& abort_;
    std::uint64_t nodes_ = 0;
};

bool run_parallel(const Pass& p, std::vector<std::uint64_t>& counts, std::uint64_t& nodes) {
    std::atomic<bool> abort{false};
    const std::size_t width = counts.size();

    // Depths 0 and 1 inline; everything deeper is split by its first two rows.
    {
        Kernel head(p, counts.data(), abort);
        head.visit(0, 0);
        if (p.t >= 1)
            for (int j = 0; j < p.k; ++j) head.visit(1, p.red[j]);
        nodes += head.nodes();
    }
    if (p.t < 2 || abort.load()) return abort.load();

    std::vector<std::pair<int, int>> roots;
    for (int i = 0; i < p.k; ++i)
        for (int j = i + 1; j < p.k; ++j) roots.emplace_back(i, j);

    const auto n_roots = static_cast<std::int64_t>(roots.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(width, 0);
        Kernel kernel(p, local.data(), abort);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t r = 0; r < n_roots; ++r) {
            if (abort.load(std::memory_order_relaxed)) continue;
            const auto [i, j] = roots[static_cast<std::size_t>(r)];
            const std::uint64_t acc = p.red[i] ^ p.red[j];
            kernel.visit(2, acc);
            kernel.below(j + 1, 2, acc);
        }
#pragma omp critical(sdc_census_merge)
        {
            for (std::size_t w = 0; w < width; ++w) counts[w] += local[w];
            nodes += kernel.nodes();
        }
    }
    return abort.load();
}

Census run_census(const BinaryCode& c, const CensusOptions& options, bool parallel) {
    if (options.max_weight < 0) throw CensusError("census weight must be non-negative");
    if (options.max_weight > static_cast<int>(c.length()))
        throw CensusError("census weight exceeds the code length");
    const auto forms = systematic_forms(c);

    Census out;
    out.max_weight = options.max_weight;
    radii(options.max_weight, out.first_radius, out.second_radius);
    const std::uint64_t cost = census_cost(forms.k, options.max_weight);
    if (options.budget != 0 && cost > options.budget)
        throw CensusError("census to weight " + std::to_string(options.max_weight) + " needs " +
                          std::to_string(cost) + " nodes, over the budget of " + std::to_string(options.budget));

    std::vector<std::uint64_t> counts(c.length() + 1, 0);
    const int k = static_cast<int>(forms.k);
    const Pass passes[2] = {
        {forms.first.data(), k, out.first_radius, 0, options.max_weight, options.abort_below},
        {forms.second.data(), k, out.second_radius, out.first_radius + 1, options.max_weight, options.abort_below},
    };
    for (const auto& pass : passes) {
        if (pass.t < 0) continue;
        bool aborted = false;
        if (parallel) {
            aborted = run_parallel(pass, counts, out.nodes);
        } else {
            SerialWalker walker(pass, counts);
            aborted = walker.run();
            out.nodes += walker.nodes();
        }
        if (aborted) {
            out.aborted = true;
            break;
        }
    }
    counts.resize(static_cast<std::size_t>(options.max_weight) + 1);
    out.counts = std::move(counts);
    return out;
}

}  // namespace

int Census::min_nonzero_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] != 0) return static_cast<int>(w);
    return 0;
}

std::uint64_t census_cost(std::size_t k, int max_weight) {
    int t1 = 0, t2 = 0;
    radii(max_weight, t1, t2);
    return binomial_sum(k, t1) + (t2 >= 0 ? binomial_sum(k, t2) : 0);
}

Census low_weight_census(const BinaryCode& c, const CensusOptions& options) {
    return run_census(c, options, options.parallel);
}

Census low_weight_census_serial(const BinaryCode& c, const CensusOptions& options) {
    return run_census(c, options, false);
}

DistanceCertificate min_distance(const BinaryCode& c, int claimed_d, bool parallel) {
    CensusOptions opt;
    opt.max_weight = claimed_d;
    opt.parallel = parallel;
    const auto census = low_weight_census(c, opt);
    const int d = census.min_nonzero_weight();
    if (d == 0)
        throw CensusError("no nonzero codeword of weight <= " + std::to_string(claimed_d) +
                          "; the distance exceeds the claim");
    return {d, claimed_d};
}

}  // namespace sdc
