#include "borel/gf2.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

namespace borel::gf2 {

Vector::Vector(std::initializer_list<int> bits) : Vector(bits.size())
{
    std::size_t i = 0;
    for (int b : bits)
        set(i++, b & 1);
}

void Vector::set(std::size_t i, bool value)
{
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

bool Vector::is_zero() const
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Vector::popcount() const
{
    std::size_t count = 0;
    for (Word w : words_)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

Vector& Vector::operator^=(const Vector& other)
{
    if (other.len_ != len_)
        throw std::invalid_argument("gf2::Vector: length mismatch in addition");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

std::string Vector::to_string() const
{
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i)
        s.push_back(get(i) ? '1' : '0');
    return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0)
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("gf2::Matrix::from_rows: ragged rows");
        std::copy(rows[r].words().begin(), rows[r].words().end(), m.data_.begin() + r * m.stride_);
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows)
{
    if (!columns.empty())
        rows = columns.front().size();
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("gf2::Matrix::from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r)
            if (columns[c].get(r))
                m.set(r, c, true);
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("gf2::Matrix::from_rows: ragged rows");
        std::size_t c = 0;
        for (int b : row)
            m.set(r, c++, b & 1);
        ++r;
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, bool value)
{
    const Word mask = Word{1} << (c % kWordBits);
    Word& w = data_[r * stride_ + c / kWordBits];
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

Vector Matrix::row(std::size_t r) const
{
    Vector v(cols_);
    std::copy_n(data_.begin() + r * stride_, stride_, v.words().begin());
    return v;
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c))
            v.set(r, true);
    return v;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("gf2::Matrix::apply: dimension mismatch");
    Vector out(rows_);
    const auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        Word acc = 0;
        for (std::size_t i = 0; i < stride_; ++i)
            acc ^= data_[r * stride_ + i] & vw[i];
        if (std::popcount(acc) & 1)
            out.set(r, true);
    }
    return out;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

namespace {

// In-place elimination on a packed row-major buffer. Returns the pivot
// column of each pivot row; rows [0, pivots.size()) hold the echelon form.
// With `reduce` the pivot columns are cleared above the pivot as well.
std::vector<std::size_t> eliminate(std::vector<Word>& data, std::size_t rows, std::size_t cols,
                                   std::size_t stride, bool reduce)
{
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        const std::size_t wi = c / kWordBits;
        const Word mask = Word{1} << (c % kWordBits);
        std::size_t found = pivot_row;
        while (found < rows && !(data[found * stride + wi] & mask))
            ++found;
        if (found == rows)
            continue;
        if (found != pivot_row)
            std::swap_ranges(data.begin() + found * stride, data.begin() + (found + 1) * stride,
                             data.begin() + pivot_row * stride);
        const Word* src = data.data() + pivot_row * stride;
        for (std::size_t r = reduce ? 0 : pivot_row + 1; r < rows; ++r) {
            if (r == pivot_row)
                continue;
            Word* dst = data.data() + r * stride;
            if (dst[wi] & mask)
                for (std::size_t i = wi; i < stride; ++i)
                    dst[i] ^= src[i];
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

std::vector<Word> pack(std::span<const Vector> vecs, std::size_t stride)
{
    std::vector<Word> data(vecs.size() * stride, 0);
    for (std::size_t r = 0; r < vecs.size(); ++r)
        std::copy(vecs[r].words().begin(), vecs[r].words().end(), data.begin() + r * stride);
    return data;
}

std::size_t rank_of_rows(std::span<const Vector> vecs, std::size_t len)
{
    const std::size_t stride = words_for(len);
    auto data = pack(vecs, stride);
    return eliminate(data, vecs.size(), len, stride, false).size();
}

}  // namespace

std::size_t rank(const Matrix& m)
{
    std::vector<Word> data(m.rows() * m.stride());
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::copy(m.row_words(r).begin(), m.row_words(r).end(), data.begin() + r * m.stride());
    return eliminate(data, m.rows(), m.cols(), m.stride(), false).size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    std::vector<Word> data(m.rows() * m.stride());
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::copy(m.row_words(r).begin(), m.row_words(r).end(), data.begin() + r * m.stride());
    const auto pivots = eliminate(data, m.rows(), m.cols(), m.stride(), true);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<Vector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v.set(free, true);
        const std::size_t wi = free / kWordBits;
        const Word mask = Word{1} << (free % kWordBits);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (data[r * m.stride() + wi] & mask)
                v.set(pivots[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> image_basis(const Matrix& m)
{
    const Matrix t = m.transposed();
    std::vector<Word> data(t.rows() * t.stride());
    for (std::size_t r = 0; r < t.rows(); ++r)
        std::copy(t.row_words(r).begin(), t.row_words(r).end(), data.begin() + r * t.stride());
    const auto pivots = eliminate(data, t.rows(), t.cols(), t.stride(), false);

    std::vector<Vector> basis;
    basis.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Vector v(m.rows());
        std::copy_n(data.begin() + r * t.stride(), t.stride(), v.words().begin());
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t subquotient_dim(std::span<const Vector> kernel, std::span<const Vector> image)
{
    if (kernel.empty() && image.empty())
        return 0;
    const std::size_t len = kernel.empty() ? image.front().size() : kernel.front().size();
    for (const auto& v : image)
        if (v.size() != len)
            throw std::invalid_argument("gf2::subquotient_dim: vector length mismatch");

    const std::size_t kernel_rank = rank_of_rows(kernel, len);
    std::vector<Vector> stacked(kernel.begin(), kernel.end());
    stacked.insert(stacked.end(), image.begin(), image.end());
    if (rank_of_rows(stacked, len) != kernel_rank)
        throw ImageNotInKernel("gf2::subquotient_dim: image is not contained in the kernel span");
    return kernel_rank - rank_of_rows(image, len);
}

std::size_t brute_force_rank(const Matrix& m)
{
    if (m.cols() > 16)
        throw TooLarge("gf2::brute_force_rank: at most 16 columns, got " + std::to_string(m.cols()));

    std::vector<Vector> columns;
    columns.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        columns.push_back(m.column(c));

    // Walk all 2^cols column subsets in Gray-code order, one XOR per step.
    std::set<std::vector<Word>> span;
    Vector acc(m.rows());
    span.insert({acc.words().begin(), acc.words().end()});
    const std::size_t subsets = std::size_t{1} << m.cols();
    for (std::size_t i = 1; i < subsets; ++i) {
        acc ^= columns[static_cast<std::size_t>(std::countr_zero(i))];
        span.insert({acc.words().begin(), acc.words().end()});
    }
    return static_cast<std::size_t>(std::bit_width(span.size()) - 1);
}

}  // namespace borel::gf2
