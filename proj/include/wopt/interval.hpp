#pragma once

#include "wopt/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace wopt {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Closed interval [lo, hi] with exact rational bounds.
class Interval {
public:
    Interval() = default;
    explicit Interval(Rational point) : lo_(point), hi_(std::move(point)) {}
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    bool is_degenerate() const { return lo_ == hi_; }
    bool contains(const Rational& value) const { return lo_ <= value && value <= hi_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_ = 0;
    Rational hi_ = 0;
};

using IntervalVector = std::vector<Interval>;

Interval operator+(const Interval& lhs, const Interval& rhs);

// alpha * [lo, hi], flipping the bounds when alpha < 0.
Interval interval_scale(const Rational& alpha, const Interval& value);

// Exact range {w . x : w in v} for a fixed real vector x.
Interval interval_dot(std::span<const Rational> x, std::span<const Interval> v);

// Row-major dense matrix. Shared storage layout for the real and interval
// variants.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

    // Throws DimensionError on ragged input. An empty list gives a 0 x cols
    // matrix.
    static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0)
    {
        std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        DenseMatrix out(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                out(i, j) = rows[i][j];
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    std::span<T> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }

    std::span<const T> entries() const { return entries_; }
    std::span<T> entries() { return entries_; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntervalMatrix = DenseMatrix<Interval>;
using Matrix = DenseMatrix<Rational>;

} // namespace wopt
