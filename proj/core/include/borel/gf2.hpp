#pragma once

// Dense bit-packed linear algebra over the two-element field.
//
// Vectors and matrices pack 64 entries per word. Matrices are row-major, so
// Gaussian elimination is a sequence of word-wise row XORs. Empty shapes
// (zero rows or zero columns) are legal everywhere and have rank 0.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace borel::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Raised by subquotient_dim when an image vector is outside the kernel span.
struct ImageNotInKernel : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised by brute_force_rank for matrices with more than 16 columns.
struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {}
    Vector(std::initializer_list<int> bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    bool is_zero() const;
    std::size_t popcount() const;
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    Vector& operator^=(const Vector& other);
    friend Vector operator^(Vector lhs, const Vector& rhs) { return lhs ^= rhs; }
    friend bool operator==(const Vector&, const Vector&) = default;

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    /// Each vector becomes one row; all must share a length. `cols` is used
    /// when the list is empty.
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols = 0);
    /// Each vector becomes one column; all must share a length.
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows = 0);
    static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    /// Matrix-vector product m·v; v.size() must equal cols().
    Vector apply(const Vector& v) const;
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Row rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Basis of {v : m·v = 0}; has cols() - rank(m) vectors of length cols().
std::vector<Vector> kernel_basis(const Matrix& m);

/// Basis of the column space; has rank(m) vectors of length rows().
std::vector<Vector> image_basis(const Matrix& m);

/// dim span(kernel) - dim span(image). Every image vector must lie in the
/// span of the kernel vectors, otherwise ImageNotInKernel is thrown (the
/// caller has a differential that does not square to zero).
std::size_t subquotient_dim(std::span<const Vector> kernel, std::span<const Vector> image);

/// Rank obtained by enumerating every subset of columns and counting the
/// distinct sums. Independent of the elimination code; cols() <= 16.
std::size_t brute_force_rank(const Matrix& m);

}  // namespace borel::gf2
