#include "wopt/reduction.hpp"

namespace wopt {

ReducedInstance reduce_weak_feasibility_to_weak_optimality(const IntervalMatrix& Bf, const IntervalVector& b)
{
    if (b.size() != Bf.rows())
        throw DimensionError("reduction: b length differs from row count of Bf");
    const std::size_t rows = Bf.rows();
    const std::size_t cols = Bf.cols();

    IntervalMatrix An(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            An(j, i) = Bf(i, j);

    IlpData data(IntervalMatrix(cols, 0), std::move(An), IntervalMatrix(0, 0), IntervalMatrix(0, rows),
                 IntervalVector(cols, Interval(Rational(0))), IntervalVector{}, IntervalVector{}, b);
    return {std::move(data), Point{{}, RationalVector(rows, 0)}};
}

} // namespace wopt
