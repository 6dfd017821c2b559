#include "sdc/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdc {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    BinaryMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("binary matrix rows differ in length");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument(std::string("illegal bit character '") + ch + "'");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool bit) noexcept {
    auto& w = row(r)[c >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    w = bit ? (w | mask) : (w & ~mask);
}

void BinaryMatrix::add_row(std::size_t dst, std::size_t src) noexcept {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void BinaryMatrix::append_row(std::span<const std::uint64_t> words) {
    if (words.size() != words_) throw std::invalid_argument("appended row has the wrong word count");
    data_.insert(data_.end(), words.begin(), words.end());
    ++rows_;
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const noexcept {
    std::size_t n = 0;
    for (auto w : row(r)) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BinaryMatrix::rows_inner_product(std::size_t a, std::size_t b) const noexcept {
    auto x = row(a);
    auto y = row(b);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_; ++w) acc ^= x[w] & y[w];
    return std::popcount(acc) & 1;
}

std::string BinaryMatrix::row_string(std::size_t r) const {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) s[c] = '1';
    return s;
}

RrefResult rref(const BinaryMatrix& m, std::span<const std::size_t> pivot_preference) {
    std::vector<std::size_t> order;
    std::vector<bool> listed(m.cols(), false);
    for (auto c : pivot_preference) {
        if (c >= m.cols()) throw std::out_of_range("pivot preference column out of range");
        if (!listed[c]) order.push_back(c);
        listed[c] = true;
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!listed[c]) order.push_back(c);

    BinaryMatrix a = m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (auto c : order) {
        if (rank == a.rows()) break;
        std::size_t p = rank;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(rank, p);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != rank && a.get(r, c)) a.add_row(r, rank);
        pivots.push_back(c);
        ++rank;
    }

    BinaryMatrix reduced(0, m.cols());
    for (std::size_t r = 0; r < rank; ++r) reduced.append_row(a.row(r));
    return {std::move(reduced), rank, std::move(pivots)};
}

BinaryMatrix mul_transposed(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("mul_transposed: column counts differ");
    BinaryMatrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto x = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            auto y = b.row(j);
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < a.words_per_row(); ++w) acc ^= x[w] & y[w];
            c.set(i, j, std::popcount(acc) & 1);
        }
    }
    return c;
}

}  // namespace sdc
