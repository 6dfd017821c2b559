#pragma once

#include <memory>
#include <random>

#include "sdc/alphabet.hpp"
#include "sdc/bincode.hpp"
#include "sdc/groupring.hpp"
#include "sdc/ringmat.hpp"

namespace sdc::testing {

inline RingVector random_vector(std::mt19937_64& rng, Alphabet a, std::size_t n) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(order(a)) - 1);
    RingVector v{a, std::vector<std::uint8_t>(n)};
    for (auto& s : v.syms) s = static_cast<std::uint8_t>(d(rng));
    return v;
}

inline RingMatrix random_matrix(std::mt19937_64& rng, Alphabet a, std::size_t r, std::size_t c) {
    auto v = random_vector(rng, a, r * c);
    return RingMatrix(a, r, c, std::move(v.syms));
}

// Unit vector e_k of length n.
inline RingVector unit_vector(Alphabet a, std::size_t n, std::size_t k) {
    RingVector v{a, std::vector<std::uint8_t>(n, 0)};
    v.syms[k] = 1;
    return v;
}

// Rows added one at a time, kept only when orthogonal to themselves and to
// every row already accepted.
inline RingMatrix random_self_orthogonal_rows(std::mt19937_64& rng, Alphabet a, std::size_t rows, std::size_t len) {
    std::vector<RingVector> accepted;
    while (accepted.size() < rows) {
        auto v = random_vector(rng, a, len);
        bool ok = inner_product(v, v) == 0;
        for (const auto& w : accepted) ok = ok && inner_product(v, w) == 0;
        if (ok) accepted.push_back(std::move(v));
    }
    std::vector<std::uint8_t> e;
    for (const auto& v : accepted) e.insert(e.end(), v.syms.begin(), v.syms.end());
    return RingMatrix(a, rows, len, std::move(e));
}

// A random self-dual binary code from (I | Omega(v)) with Omega a composite
// matrix over a group of order n (8 or 10), retried until Omega Omega^T = I.
// Over F2U and F4 only order 8 is used, keeping the dimension at most 16.
inline BinaryCode random_composite_self_dual(std::mt19937_64& rng, Alphabet a) {
    auto share = [](GroupSpec g) { return std::make_shared<const GroupSpec>(std::move(g)); };
    const std::vector<CompositeSpec> specs = {
        uniform_composite(share(GroupSpec::dihedral(4)), share(GroupSpec::cyclic(4))),
        uniform_composite(share(GroupSpec::dihedral(4)), share(GroupSpec::direct_product_cyclic(2, 2))),
        uniform_composite(share(GroupSpec::cyclic(8)), share(GroupSpec::cyclic(4)), false),
        uniform_composite(share(GroupSpec::direct_product_cyclic(4, 2)), share(GroupSpec::cyclic_interleaved(2, 2))),
        uniform_composite(share(GroupSpec::dihedral(5)), share(GroupSpec::cyclic(5))),
        uniform_composite(share(GroupSpec::cyclic(10)), share(GroupSpec::cyclic(5)), false),
    };
    const std::size_t choices = a == Alphabet::F2 ? specs.size() : 4;
    std::uniform_int_distribution<std::size_t> pick(0, choices - 1);
    const auto& spec = specs[pick(rng)];
    const std::size_t n = spec.g->order();
    for (;;) {
        const GroupRingVector v(spec.g, random_vector(rng, a, n));
        const auto omega = composite_omega(v, spec);
        if (!is_identity(mul_transposed(omega, omega))) continue;
        RingMatrix g(a, n, 2 * n);
        g.set_block(0, 0, RingMatrix::identity(a, n));
        g.set_block(0, n, omega);
        return BinaryCode::from_generator(gray_lift(g));
    }
}

}  // namespace sdc::testing
