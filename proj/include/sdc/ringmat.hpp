#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sdc/alphabet.hpp"

namespace sdc {

/// Dense row-major matrix over one alphabet.
class RingMatrix {
  public:
    RingMatrix() = default;
    RingMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols);
    RingMatrix(Alphabet alphabet, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries);

    static RingMatrix identity(Alphabet alphabet, std::size_t n);

    Alphabet alphabet() const noexcept { return alphabet_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    std::uint8_t& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
    RingElement at(std::size_t r, std::size_t c) const;

    std::span<const std::uint8_t> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
    RingVector row_vector(std::size_t r) const;
    const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }

    /// Copy of the sub-matrix starting at (r0, c0).
    RingMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t r0, std::size_t c0, const RingMatrix& b);

    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

  private:
    Alphabet alphabet_ = Alphabet::F2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> entries_;
};

RingMatrix matmul(const RingMatrix& a, const RingMatrix& b);
RingMatrix matadd(const RingMatrix& a, const RingMatrix& b);
RingMatrix transpose(const RingMatrix& a);
/// A * B^T without materialising the transpose.
RingMatrix mul_transposed(const RingMatrix& a, const RingMatrix& b);
bool is_identity(const RingMatrix& a) noexcept;
bool is_zero(const RingMatrix& a) noexcept;

inline RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) { return matmul(a, b); }
inline RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) { return matadd(a, b); }

/// cir(a_0, ..., a_{n-1}): row i+1 is row i shifted cyclically right by one.
RingMatrix circulant(const RingVector& first_row);
RingMatrix circulant(Alphabet alphabet, std::span<const std::uint8_t> first_row);

/// CIRC(A_0, ..., A_{k-1}) with block-row i+1 the block-cyclic right shift of block-row i.
RingMatrix block_circulant(std::span<const RingMatrix> blocks);
RingMatrix block_circulant(std::initializer_list<RingMatrix> blocks);

/// The cyclic shift permutation P = [[0, I_{n-1}], [1, 0]].
RingMatrix shift_perm(Alphabet alphabet, std::size_t n);

/// Columns of a square matrix rotated right by one position (A P).
RingMatrix star(const RingMatrix& a);

/// Anti-diagonal identity J_n.
RingMatrix exchange(Alphabet alphabet, std::size_t n);

RingMatrix kronecker(const RingMatrix& a, const RingMatrix& b);

/// Assembles a grid of equally sized blocks.
RingMatrix assemble(const std::vector<std::vector<RingMatrix>>& grid);

}  // namespace sdc
