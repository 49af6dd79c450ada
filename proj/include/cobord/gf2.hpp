#pragma once
// Exact linear algebra over GF(2) on word-packed vectors: rank, inversion,
// dual bases under the dot-product pairing, and exhaustive enumeration of
// ordered bases of GF(2)^n.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/errors.hpp"

namespace cobord {

inline constexpr int kMaxDim = 16;

// Element of GF(2)^n, 1 <= n <= 16.  Bit i-1 of the encoding is the
// coordinate along the i-th standard basis vector, so the standard basis
// encodes as 1, 2, 4, ...  The same type stores characters (elements of
// Hom(G,Z2)) and cocharacters (Hom(Z2,G)); which one is meant is tracked
// one level up, by the monomial side tag.
class BitVec {
public:
    BitVec() = default;
    BitVec(std::uint32_t encoding, int dim);

    static BitVec zero(int dim) { return BitVec(0u, dim); }
    static BitVec unit(int i, int dim);  // i is 1-based
    // Parses "1011"; leftmost character is the first coordinate.
    static BitVec from_bits(std::string_view text);

    std::uint32_t encoding() const { return bits_; }
    int dim() const { return dim_; }
    bool is_zero() const { return bits_ == 0; }
    bool bit(int i) const { return (bits_ >> (i - 1)) & 1u; }  // i is 1-based

    BitVec operator+(BitVec other) const;
    bool dot(BitVec other) const;

    std::string to_bits() const;

    friend bool operator==(BitVec, BitVec) = default;
    friend auto operator<=>(BitVec a, BitVec b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint32_t bits_ = 0;
    int dim_ = 0;
};

class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::vector<BitVec> rows);

    static BitMatrix identity(int n);

    int rows() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    const BitVec& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<BitVec>& row_data() const { return rows_; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::vector<BitVec> rows_;
    int dim_ = 0;
};

int rank(const BitMatrix& m);
BitMatrix transpose(const BitMatrix& m);

// Throws SingularMatrix unless m is square of full rank.
BitMatrix invert(const BitMatrix& m);

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

// m acting on a column vector: bit i of the result is row_i . v.
BitVec apply(const BitMatrix& m, BitVec v);

// Rows form a basis t_1..t_n; returns s_1..s_n with s_j . t_i = delta_ij,
// i.e. the transpose of the inverse.  Throws NotABasis.
BitMatrix dual_basis(const BitMatrix& m);

// Visits every ordered basis of GF(2)^n exactly once, in lexicographic
// order of the row-encoding tuples.  The visitor may return false to stop.
// Throws DimensionTooLarge for n > 5; the count is prod_i (2^n - 2^i).
void for_each_ordered_basis(int n, const std::function<bool(const BitMatrix&)>& visit);

std::vector<BitMatrix> enumerate_ordered_bases(int n);

}  // namespace cobord
