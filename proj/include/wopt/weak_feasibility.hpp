#pragma once

#include "wopt/model.hpp"

#include <stdexcept>

namespace wopt {

struct RowKind {
    enum Tag { Equality, Inequality };
    Tag tag;
    std::size_t index;
};

class RowInfeasibleAtPoint : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Range of row_coefficients . x over the row's coefficient intervals.
Interval row_range(const IlpData& data, const Point& x, RowKind row);

// Whether some realization of this row alone holds at x.
bool row_weakly_feasible(const IlpData& data, const Point& x, RowKind row);

// x is feasible for LS(s) for some scenario s. Rows are checked
// independently since they share no coefficients. xn must be nonnegative.
bool check_point_weak_feasibility(const IlpData& data, const Point& x);

struct RowCompletion {
    RationalVector free_coeffs;   // length m
    RationalVector nonneg_coeffs; // length n
    Rational rhs;
};

// Real coefficients and right-hand side inside the row's intervals with the
// row holding at x (with equality for equality rows). Equality rows target
// the midpoint of (row range at x) intersected with a_i.
RowCompletion complete_row_scenario(const IlpData& data, const Point& x, RowKind row);

} // namespace wopt
