#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace autdec {

/// Bit-packed vector over GF(2). Fixed length after construction.
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BinaryVector from_bits(std::initializer_list<int> bits);
    static BinaryVector from_bits(const std::vector<int>& bits);
    /// All-zero vector with single ones at the given positions.
    static BinaryVector indicator(std::size_t len, std::initializer_list<std::size_t> ones);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BinaryVector& operator^=(const BinaryVector& other);
    friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) { return a ^= b; }

    std::size_t popcount() const;
    bool is_zero() const;
    /// Index of the lowest set bit, or size() when none.
    std::size_t first_set() const;

    bool operator==(const BinaryVector& other) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Bit-packed dense matrix over GF(2), row-major. Dimensions fixed after
/// construction; (row, col) indexing is the only contract, packing is internal.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v)
            data_[r * wpr_ + (c >> 6)] |= mask;
        else
            data_[r * wpr_ + (c >> 6)] &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * wpr_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }

    /// dst_row ^= src_row (in place).
    void xor_rows(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BinaryVector row(std::size_t r) const;
    void set_row(std::size_t r, const BinaryVector& v);
    BinaryVector column(std::size_t c) const;
    std::size_t row_popcount(std::size_t r) const;

    BinaryMatrix transpose() const;
    /// [this; below] stacked vertically.
    BinaryMatrix vstack(const BinaryMatrix& below) const;
    /// [this | right] side by side.
    BinaryMatrix hstack(const BinaryMatrix& right) const;

    bool is_zero() const;
    bool operator==(const BinaryMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;  // words per row
    std::vector<std::uint64_t> data_;
};

/// Bijection on {0..n-1}. Column-permutation convention used throughout:
/// applying A to a matrix M yields out[:, j] = M[:, A(j)].
struct Permutation {
    std::vector<std::uint32_t> image;

    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> img);

    static Permutation identity(std::size_t n);
    /// Build from disjoint cycles over 0-based points, e.g. {{1,8},{2,7}}.
    static Permutation from_cycles(std::size_t n,
                                   std::initializer_list<std::initializer_list<std::uint32_t>> cycles);

    std::size_t size() const { return image.size(); }
    std::uint32_t operator()(std::size_t j) const { return image[j]; }

    bool is_identity() const;
    Permutation inverse() const;
    /// Composition: (a * b)(j) = a(b(j)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    bool operator==(const Permutation& other) const = default;
};

/// Result of Gaussian elimination to reduced row-echelon form mod 2.
/// transform * input = reduced, with transform invertible (a record of the
/// row operations); pivots lists the pivot column indices in increasing order.
struct RrefResult {
    BinaryMatrix reduced;
    BinaryMatrix transform;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const BinaryMatrix& m);
std::size_t rank(const BinaryMatrix& m);

/// Grows a space one vector at a time, keeping a mutually reduced basis with
/// distinct pivots; cheap independence tests and span membership.
class IncrementalBasis {
public:
    std::size_t rank() const { return rows_.size(); }
    BinaryVector reduce(BinaryVector v) const;
    /// False if v was already in the span; otherwise inserts and optionally
    /// reports the reduced form through *reduced_out.
    bool insert(const BinaryVector& v, BinaryVector* reduced_out = nullptr);

private:
    std::vector<std::size_t> pivots_;
    std::vector<BinaryVector> rows_;
};

/// Rows form a basis of the right kernel {v : M v = 0}; row count = cols - rank.
BinaryMatrix kernel_basis(const BinaryMatrix& m);

BinaryMatrix permute_columns(const BinaryMatrix& m, const Permutation& a);
BinaryVector permute(const BinaryVector& v, const Permutation& a);

BinaryVector mul(const BinaryMatrix& a, const BinaryVector& v);
BinaryMatrix mul(const BinaryMatrix& a, const BinaryMatrix& b);

/// True when v lies in the row space of the (precomputed) RREF basis.
bool in_rowspace(const RrefResult& rr, const BinaryVector& v);

}  // namespace autdec
