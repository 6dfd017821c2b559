#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sdc/alphabet.hpp"
#include "sdc/ringmat.hpp"

namespace sdc {

/// A finite group given by a fixed listing of its elements. Elements are
/// referred to by 0-based listing index; index 0 is always the identity.
///
/// Listings (i, j 0-based):
///   cyclic(n)                    index i           = c^i
///   dihedral(m), order 2m        index m*j + i     = a^i b^j,  bab = a^-1
///   direct_product_cyclic(m, k)  index m*j + i     = c^i d^j,  |c| = m, |d| = k
///   cyclic_interleaved(s, k)     index k*j + i     = c^(s*i + j) in C_{s*k}
class GroupSpec {
  public:
    enum class Family { Cyclic, Dihedral, DirectProductCyclic, CyclicInterleaved };

    static GroupSpec cyclic(std::size_t n);
    static GroupSpec dihedral(std::size_t m);
    static GroupSpec direct_product_cyclic(std::size_t m, std::size_t k);
    static GroupSpec cyclic_interleaved(std::size_t s, std::size_t k);

    Family family() const noexcept { return family_; }
    std::size_t order() const noexcept { return n_; }
    const std::string& name() const noexcept { return name_; }

    std::size_t product(std::size_t i, std::size_t j) const noexcept { return table_[i * n_ + j]; }
    std::size_t inverse(std::size_t i) const noexcept { return inverse_[i]; }
    /// Index of g_i^{-1} g_j.
    std::size_t quotient(std::size_t i, std::size_t j) const noexcept { return product(inverse_[i], j); }

    /// Exhaustive check of closure, identity at index 0, inverses and associativity.
    bool satisfies_group_axioms() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.table_ == b.table_; }

  private:
    GroupSpec(Family family, std::size_t n, std::string name, std::vector<std::uint32_t> table);

    Family family_;
    std::size_t n_;
    std::string name_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

/// v = sum alpha_{g_i} g_i with coeffs[i] = alpha_{g_{i+1}}.
struct GroupRingVector {
    GroupPtr group;
    RingVector coeffs;

    GroupRingVector(GroupPtr g, RingVector c);
};

GroupRingVector operator+(const GroupRingVector& v, const GroupRingVector& w);
GroupRingVector operator*(const GroupRingVector& v, const GroupRingVector& w);

/// 0-based index matrix of sigma: entry (i, j) is the index of g_i^{-1} g_j.
std::vector<std::uint32_t> sigma_indices(const GroupSpec& g);
RingMatrix sigma(const GroupRingVector& v);

/// Square table of 1-based listing indices: entry (i, j) is l with h_l = h_i^{-1} h_j.
struct IndexTable {
    std::size_t n = 0;
    std::vector<std::uint32_t> entries;

    std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return entries[i * n + j]; }
    friend bool operator==(const IndexTable&, const IndexTable&) = default;
};

IndexTable mh_table(const GroupSpec& h);

/// The data (G, H_1..H_eta, H', P') fixing a composite matrix.
struct CompositeSpec {
    GroupPtr g;
    std::size_t r = 0;
    std::vector<GroupPtr> hs;
    /// m x m, row-major, 1-based indices into hs.
    std::vector<std::uint32_t> h_prime;
    /// m x m, row-major, entries 0 or 1.
    std::vector<std::uint8_t> p_prime;

    std::size_t m() const noexcept { return r == 0 ? 0 : g->order() / r; }
    /// Throws std::invalid_argument when the invariants do not hold.
    void validate() const;
};

/// Uniform spec with every H'-entry 1 and P' all ones or all zeros.
CompositeSpec uniform_composite(GroupPtr g, GroupPtr h, bool p_all_ones = true);

/// 0-based G-listing index chosen for every entry of the composite matrix.
std::vector<std::uint32_t> composite_indices(const CompositeSpec& spec);
RingMatrix composite_omega(const GroupRingVector& v, const CompositeSpec& spec);

}  // namespace sdc
