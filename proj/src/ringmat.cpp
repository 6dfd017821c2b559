#include "sdc/ringmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc {

namespace {

void require_alphabet(const RingMatrix& a, const RingMatrix& b) {
    if (a.alphabet() != b.alphabet()) throw AlphabetMismatch("matrices over different alphabets");
}

}  // namespace

RingMatrix::RingMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols)
    : alphabet_(alphabet), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

RingMatrix::RingMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries)
    : alphabet_(alphabet), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw std::invalid_argument("entry count does not match the matrix shape");
    for (auto s : entries_)
        if (s >= order(alphabet)) throw std::invalid_argument("matrix entry out of range for alphabet");
}

RingMatrix RingMatrix::identity(Alphabet alphabet, std::size_t n) {
    RingMatrix m(alphabet, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RingElement RingMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return RingElement(alphabet_, (*this)(r, c));
}

RingVector RingMatrix::row_vector(std::size_t r) const {
    auto span = row(r);
    return RingVector{alphabet_, std::vector<std::uint8_t>(span.begin(), span.end())};
}

RingMatrix RingMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("block exceeds matrix bounds");
    RingMatrix b(alphabet_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0), cols,
                    b.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    return b;
}

void RingMatrix::set_block(std::size_t r0, std::size_t c0, const RingMatrix& b) {
    require_alphabet(*this, b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block exceeds matrix bounds");
    for (std::size_t i = 0; i < b.rows_; ++i)
        std::copy_n(b.entries_.begin() + static_cast<std::ptrdiff_t>(i * b.cols_), b.cols_,
                    entries_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0));
}

RingMatrix matmul(const RingMatrix& a, const RingMatrix& b) {
    require_alphabet(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    const auto& mul = tables(a.alphabet()).mul;
    RingMatrix c(a.alphabet(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto aik = a(i, k);
            if (aik == 0) continue;
            const auto& row = mul[aik];
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) ^= row[b(k, j)];
        }
    }
    return c;
}

RingMatrix mul_transposed(const RingMatrix& a, const RingMatrix& b) {
    require_alphabet(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("mul_transposed: column counts differ");
    const auto& mul = tables(a.alphabet()).mul;
    RingMatrix c(a.alphabet(), a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            std::uint8_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc ^= mul[a(i, k)][b(j, k)];
            c(i, j) = acc;
        }
    }
    return c;
}

RingMatrix matadd(const RingMatrix& a, const RingMatrix& b) {
    require_alphabet(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matadd: shapes differ");
    std::vector<std::uint8_t> e(a.entries());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] ^= b.entries()[i];
    return RingMatrix(a.alphabet(), a.rows(), a.cols(), std::move(e));
}

RingMatrix transpose(const RingMatrix& a) {
    RingMatrix t(a.alphabet(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

bool is_identity(const RingMatrix& a) noexcept {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool is_zero(const RingMatrix& a) noexcept {
    return std::all_of(a.entries().begin(), a.entries().end(), [](std::uint8_t s) { return s == 0; });
}

RingMatrix circulant(Alphabet alphabet, std::span<const std::uint8_t> first_row) {
    const std::size_t n = first_row.size();
    if (n == 0) throw std::invalid_argument("circulant of an empty row");
    RingMatrix m(alphabet, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
    for (auto s : first_row)
        if (s >= order(alphabet)) throw std::invalid_argument("circulant entry out of range for alphabet");
    return m;
}

RingMatrix circulant(const RingVector& first_row) { return circulant(first_row.alphabet, first_row.syms); }

RingMatrix block_circulant(std::span<const RingMatrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("block circulant of no blocks");
    const auto& b0 = blocks.front();
    for (const auto& b : blocks) {
        require_alphabet(b0, b);
        if (b.rows() != b0.rows() || b.cols() != b0.cols())
            throw std::invalid_argument("block circulant blocks must share one shape");
    }
    const std::size_t k = blocks.size();
    RingMatrix x(b0.alphabet(), k * b0.rows(), k * b0.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) x.set_block(i * b0.rows(), j * b0.cols(), blocks[(j + k - i) % k]);
    return x;
}

RingMatrix block_circulant(std::initializer_list<RingMatrix> blocks) {
    return block_circulant(std::span<const RingMatrix>(blocks.begin(), blocks.size()));
}

RingMatrix shift_perm(Alphabet alphabet, std::size_t n) {
    if (n < 2) throw std::invalid_argument("shift permutation needs n >= 2");
    RingMatrix p(alphabet, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) p(i, i + 1) = 1;
    p(n - 1, 0) = 1;
    return p;
}

RingMatrix star(const RingMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("star transform needs a square matrix");
    const std::size_t n = a.cols();
    RingMatrix s(a.alphabet(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, (j + 1) % n) = a(i, j);
    return s;
}

RingMatrix exchange(Alphabet alphabet, std::size_t n) {
    RingMatrix j(alphabet, n, n);
    for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
    return j;
}

RingMatrix kronecker(const RingMatrix& a, const RingMatrix& b) {
    require_alphabet(a, b);
    const auto& mul = tables(a.alphabet()).mul;
    RingMatrix k(a.alphabet(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = mul[a(i, j)][b(p, q)];
    return k;
}

RingMatrix assemble(const std::vector<std::vector<RingMatrix>>& grid) {
    if (grid.empty() || grid.front().empty()) throw std::invalid_argument("empty block grid");
    const auto& b0 = grid.front().front();
    const std::size_t br = b0.rows(), bc = b0.cols();
    RingMatrix m(b0.alphabet(), grid.size() * br, grid.front().size() * bc);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != grid.front().size()) throw std::invalid_argument("ragged block grid");
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (grid[i][j].rows() != br || grid[i][j].cols() != bc)
                throw std::invalid_argument("block grid entries must share one shape");
            m.set_block(i * br, j * bc, grid[i][j]);
        }
    }
    return m;
}

}  // namespace sdc
