#include "sdc/groupring.hpp"

#include <functional>
#include <stdexcept>

namespace sdc {

namespace {

// Fills the multiplication table from a listing given as decode/encode into
// some canonical pair representation and a product on that representation.
struct Pair {
    std::size_t x, y;
};

std::vector<std::uint32_t> build_table(std::size_t n, const std::function<Pair(std::size_t)>& decode,
                                       const std::function<std::size_t(Pair)>& encode,
                                       const std::function<Pair(Pair, Pair)>& mul) {
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = static_cast<std::uint32_t>(encode(mul(decode(i), decode(j))));
    return table;
}

}  // namespace

GroupSpec::GroupSpec(Family family, std::size_t n, std::string name, std::vector<std::uint32_t> table)
    : family_(family), n_(n), name_(std::move(name)), table_(std::move(table)), inverse_(n, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < n_ && !found; ++j) {
            if (table_[i * n_ + j] == 0) {
                inverse_[i] = static_cast<std::uint32_t>(j);
                found = true;
            }
        }
        if (!found) throw std::logic_error("group listing without inverse for " + name_);
    }
}

GroupSpec GroupSpec::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group of order 0");
    auto decode = [](std::size_t i) { return Pair{i, 0}; };
    auto encode = [](Pair p) { return p.x; };
    auto mul = [n](Pair a, Pair b) { return Pair{(a.x + b.x) % n, 0}; };
    return GroupSpec(Family::Cyclic, n, "C" + std::to_string(n), build_table(n, decode, encode, mul));
}

GroupSpec GroupSpec::dihedral(std::size_t m) {
    if (m == 0) throw std::invalid_argument("dihedral group with m = 0");
    const std::size_t n = 2 * m;
    auto decode = [m](std::size_t i) { return Pair{i % m, i / m}; };
    auto encode = [m](Pair p) { return m * p.y + p.x; };
    // a^i b^j * a^k b^l = a^(i + (-1)^j k) b^(j + l)
    auto mul = [m](Pair a, Pair b) {
        const std::size_t rot = a.y == 0 ? (a.x + b.x) % m : (a.x + m - b.x) % m;
        return Pair{rot, (a.y + b.y) % 2};
    };
    return GroupSpec(Family::Dihedral, n, "D" + std::to_string(m), build_table(n, decode, encode, mul));
}

GroupSpec GroupSpec::direct_product_cyclic(std::size_t m, std::size_t k) {
    if (m == 0 || k == 0) throw std::invalid_argument("direct product with a trivial factor order 0");
    const std::size_t n = m * k;
    auto decode = [m](std::size_t i) { return Pair{i % m, i / m}; };
    auto encode = [m](Pair p) { return m * p.y + p.x; };
    auto mul = [m, k](Pair a, Pair b) { return Pair{(a.x + b.x) % m, (a.y + b.y) % k}; };
    return GroupSpec(Family::DirectProductCyclic, n, "C" + std::to_string(m) + "xC" + std::to_string(k),
                     build_table(n, decode, encode, mul));
}

GroupSpec GroupSpec::cyclic_interleaved(std::size_t s, std::size_t k) {
    if (s == 0 || k == 0) throw std::invalid_argument("interleaved cyclic group with a zero parameter");
    const std::size_t n = s * k;
    // Pair.x holds the exponent e = s*i + j of c.
    auto decode = [s, k](std::size_t idx) {
        const std::size_t i = idx % k, j = idx / k;
        return Pair{s * i + j, 0};
    };
    auto encode = [s, k](Pair p) { return k * (p.x % s) + p.x / s; };
    auto mul = [n](Pair a, Pair b) { return Pair{(a.x + b.x) % n, 0}; };
    return GroupSpec(Family::CyclicInterleaved, n, "C" + std::to_string(s) + "." + std::to_string(k),
                     build_table(n, decode, encode, mul));
}

bool GroupSpec::satisfies_group_axioms() const {
    for (auto e : table_)
        if (e >= n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (product(0, i) != i || product(i, 0) != i) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (product(i, inverse_[i]) != 0 || product(inverse_[i], i) != 0) return false;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t c = 0; c < n_; ++c)
                if (product(product(a, b), c) != product(a, product(b, c))) return false;
    return true;
}

GroupRingVector::GroupRingVector(GroupPtr g, RingVector c) : group(std::move(g)), coeffs(std::move(c)) {
    if (!group) throw std::invalid_argument("group ring vector without a group");
    if (coeffs.size() != group->order())
        throw std::invalid_argument("group ring vector length differs from the group order");
}

GroupRingVector operator+(const GroupRingVector& v, const GroupRingVector& w) {
    if (!(*v.group == *w.group)) throw std::invalid_argument("group ring vectors over different groups");
    if (v.coeffs.alphabet != w.coeffs.alphabet) throw AlphabetMismatch("group ring vectors over different alphabets");
    RingVector sum = v.coeffs;
    for (std::size_t i = 0; i < sum.size(); ++i) sum.syms[i] ^= w.coeffs.syms[i];
    return GroupRingVector(v.group, std::move(sum));
}

GroupRingVector operator*(const GroupRingVector& v, const GroupRingVector& w) {
    if (!(*v.group == *w.group)) throw std::invalid_argument("group ring vectors over different groups");
    if (v.coeffs.alphabet != w.coeffs.alphabet) throw AlphabetMismatch("group ring vectors over different alphabets");
    const auto& mul = tables(v.coeffs.alphabet).mul;
    const auto& g = *v.group;
    RingVector prod{v.coeffs.alphabet, std::vector<std::uint8_t>(g.order(), 0)};
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j)
            prod.syms[g.product(i, j)] ^= mul[v.coeffs.syms[i]][w.coeffs.syms[j]];
    return GroupRingVector(v.group, std::move(prod));
}

std::vector<std::uint32_t> sigma_indices(const GroupSpec& g) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> idx(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) idx[i * n + j] = static_cast<std::uint32_t>(g.quotient(i, j));
    return idx;
}

RingMatrix sigma(const GroupRingVector& v) {
    const std::size_t n = v.group->order();
    const auto idx = sigma_indices(*v.group);
    std::vector<std::uint8_t> e(n * n);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = v.coeffs.syms[idx[k]];
    return RingMatrix(v.coeffs.alphabet, n, n, std::move(e));
}

IndexTable mh_table(const GroupSpec& h) {
    const std::size_t r = h.order();
    IndexTable t{r, std::vector<std::uint32_t>(r * r)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) t.entries[i * r + j] = static_cast<std::uint32_t>(h.quotient(i, j) + 1);
    return t;
}

void CompositeSpec::validate() const {
    if (!g) throw std::invalid_argument("composite spec without a group G");
    const std::size_t n = g->order();
    if (r <= 1 || r >= n || n % r != 0) throw std::invalid_argument("composite spec needs r | n with 1 < r < n");
    if (hs.empty()) throw std::invalid_argument("composite spec needs at least one group H");
    for (const auto& h : hs) {
        if (!h || h->order() != r) throw std::invalid_argument("every H must have order r");
        for (std::size_t j = 0; j < r; ++j)
            if (h->product(0, j) != j) throw std::invalid_argument("H listing does not start with the identity");
    }
    const std::size_t mm = m() * m();
    if (h_prime.size() != mm || p_prime.size() != mm) throw std::invalid_argument("H' and P' must be m x m");
    for (auto t : h_prime)
        if (t < 1 || t > hs.size()) throw std::invalid_argument("H' entry outside [1..eta]");
    for (auto p : p_prime)
        if (p > 1) throw std::invalid_argument("P' entries must be 0 or 1");
}

CompositeSpec uniform_composite(GroupPtr g, GroupPtr h, bool p_all_ones) {
    CompositeSpec spec;
    spec.r = h->order();
    spec.g = std::move(g);
    spec.hs = {std::move(h)};
    const std::size_t m = spec.m();
    spec.h_prime.assign(m * m, 1);
    spec.p_prime.assign(m * m, p_all_ones ? 1 : 0);
    spec.validate();
    return spec;
}

std::vector<std::uint32_t> composite_indices(const CompositeSpec& spec) {
    spec.validate();
    const auto& g = *spec.g;
    const std::size_t n = g.order(), r = spec.r, m = spec.m();
    std::vector<IndexTable> mh;
    for (const auto& h : spec.hs) mh.push_back(mh_table(*h));

    std::vector<std::uint32_t> idx(n * n);
    for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t z = 0; z < m; ++z) {
            const bool patterned = spec.p_prime[y * m + z] == 1;
            const auto& table = mh[spec.h_prime[y * m + z] - 1];
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    // rho(y, z, i, j) = g_{r y + i}^{-1} g_{r z + j} (0-based)
                    const std::size_t row = patterned ? r * y : r * y + i;
                    const std::size_t col = patterned ? r * z + table(i, j) - 1 : r * z + j;
                    idx[(r * y + i) * n + r * z + j] = static_cast<std::uint32_t>(g.quotient(row, col));
                }
            }
        }
    }
    return idx;
}

RingMatrix composite_omega(const GroupRingVector& v, const CompositeSpec& spec) {
    if (!(*v.group == *spec.g)) throw std::invalid_argument("vector and composite spec use different groups");
    const std::size_t n = v.group->order();
    const auto idx = composite_indices(spec);
    std::vector<std::uint8_t> e(n * n);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = v.coeffs.syms[idx[k]];
    return RingMatrix(v.coeffs.alphabet, n, n, std::move(e));
}

}  // namespace sdc
