#include "sdc/bincode.hpp"

#include <bit>
#include <stdexcept>

namespace sdc {

std::vector<std::uint8_t> gray_image(const RingVector& v) {
    if (v.alphabet == Alphabet::F2) return v.syms;
    const std::size_t m = v.size();
    std::vector<std::uint8_t> bits(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto g = gray(v.alphabet, v.syms[i]);
        bits[i] = g[0];
        bits[m + i] = g[1];
    }
    return bits;
}

BinaryMatrix gray_lift(const RingMatrix& g) {
    if (g.alphabet() == Alphabet::F2) {
        BinaryMatrix b(g.rows(), g.cols());
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c) b.set(r, c, g(r, c) != 0);
        return b;
    }
    const auto& mul = tables(g.alphabet()).mul;
    const std::uint8_t delta = 2;  // u or w
    const std::size_t m = g.cols();
    BinaryMatrix b(2 * g.rows(), 2 * m);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            const auto plain = gray(g.alphabet(), g(r, c));
            const auto scaled = gray(g.alphabet(), mul[delta][g(r, c)]);
            b.set(2 * r, c, plain[0]);
            b.set(2 * r, m + c, plain[1]);
            b.set(2 * r + 1, c, scaled[0]);
            b.set(2 * r + 1, m + c, scaled[1]);
        }
    }
    return b;
}

std::string_view to_string(CodeType t) noexcept { return t == CodeType::TypeII ? "Type II" : "Type I"; }

BinaryCode BinaryCode::from_generator(const BinaryMatrix& spanning) {
    auto reduced = rref(spanning);
    BinaryCode c;
    c.basis_ = std::move(reduced.matrix);
    c.pivots_ = std::move(reduced.pivots);
    return c;
}

bool BinaryCode::is_self_orthogonal() const noexcept {
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t j = i; j < dimension(); ++j)
            if (basis_.rows_inner_product(i, j)) return false;
    return true;
}

bool BinaryCode::is_self_dual() const noexcept { return length() == 2 * dimension() && is_self_orthogonal(); }

CodeType classify_type(const BinaryCode& c) {
    if (!c.is_self_dual()) throw std::invalid_argument("classify_type needs a self-dual code");
    for (std::size_t r = 0; r < c.dimension(); ++r)
        if (c.generator().row_weight(r) % 4 != 0) return CodeType::TypeI;
    return CodeType::TypeII;
}

int distance_bound(int n, CodeType t) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("distance_bound needs a positive even length");
    const int base = 4 * (n / 24);
    if (t == CodeType::TypeII) return base + 4;
    if (n % 24 == 0) return base + 2;
    if (n % 24 == 22) return base + 6;
    return base + 4;
}

std::vector<std::uint64_t> full_weight_distribution(const BinaryCode& c) {
    const std::size_t k = c.dimension();
    if (k > 30) throw std::invalid_argument("full enumeration is limited to dimension 30");
    const auto& g = c.generator();
    const std::size_t words = g.words_per_row();
    std::vector<std::uint64_t> dist(c.length() + 1, 0);
    std::vector<std::uint64_t> word(words, 0);
    dist[0] = 1;
    // Gray-code walk: step s flips basis row ctz(s).
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        const auto r = static_cast<std::size_t>(std::countr_zero(s));
        auto row = g.row(r);
        std::size_t w = 0;
        for (std::size_t i = 0; i < words; ++i) {
            word[i] ^= row[i];
            w += static_cast<std::size_t>(std::popcount(word[i]));
        }
        ++dist[w];
    }
    return dist;
}

}  // namespace sdc
