#include "wopt/weak_feasibility.hpp"
#include "wopt/linsolve.hpp"
#include "wopt/scenario_program.hpp"

#include <algorithm>
#include <string>

namespace wopt {

namespace {

IntervalVector row_intervals(const IlpData& data, RowKind row)
{
    const bool eq = row.tag == RowKind::Equality;
    const IntervalMatrix& free_part = eq ? data.Af() : data.Bf();
    const IntervalMatrix& nonneg_part = eq ? data.An() : data.Bn();
    if (row.index >= free_part.rows())
        throw DimensionError("row index out of range");
    IntervalVector out(free_part.row(row.index).begin(), free_part.row(row.index).end());
    out.insert(out.end(), nonneg_part.row(row.index).begin(), nonneg_part.row(row.index).end());
    return out;
}

const Interval& row_rhs(const IlpData& data, RowKind row)
{
    return row.tag == RowKind::Equality ? data.a()[row.index] : data.b()[row.index];
}

std::string describe(RowKind row)
{
    return std::string(row.tag == RowKind::Equality ? "equality" : "inequality") + " row " +
           std::to_string(row.index);
}

// Adds a variable constrained to the interval.
std::size_t add_bounded(LinearSystem& sys, std::string name, const Interval& range)
{
    std::size_t v = sys.add_variable(std::move(name), range.lo());
    RationalVector row = sys.zero_row();
    row[v] = 1;
    if (range.is_degenerate())
        sys.add_eq(std::move(row), range.lo());
    else
        sys.add_le(std::move(row), range.hi());
    return v;
}

} // namespace

Interval row_range(const IlpData& data, const Point& x, RowKind row)
{
    check_point_shape(data, x);
    return interval_dot(flatten(x), row_intervals(data, row));
}

bool row_weakly_feasible(const IlpData& data, const Point& x, RowKind row)
{
    Interval range = row_range(data, x, row);
    const Interval& rhs = row_rhs(data, row);
    if (row.tag == RowKind::Equality)
        return range.lo() <= rhs.hi() && rhs.lo() <= range.hi();
    return range.hi() >= rhs.lo();
}

bool check_point_weak_feasibility(const IlpData& data, const Point& x)
{
    check_point_shape(data, x);
    for (const auto& v : x.xn)
        if (sgn(v) < 0)
            return false;
    for (std::size_t i = 0; i < data.k(); ++i)
        if (!row_weakly_feasible(data, x, {RowKind::Equality, i}))
            return false;
    for (std::size_t i = 0; i < data.l(); ++i)
        if (!row_weakly_feasible(data, x, {RowKind::Inequality, i}))
            return false;
    return true;
}

RowCompletion complete_row_scenario(const IlpData& data, const Point& x, RowKind row)
{
    if (!row_weakly_feasible(data, x, row))
        throw RowInfeasibleAtPoint(describe(row) + " cannot hold at the given point");

    const IntervalVector coeffs = row_intervals(data, row);
    const RationalVector point = flatten(x);
    LinearSystem sys;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        add_bounded(sys, "w" + std::to_string(j), coeffs[j]);

    Rational target;
    if (row.tag == RowKind::Equality) {
        Interval range = interval_dot(point, coeffs);
        const Interval& a = row_rhs(data, row);
        Interval hit(std::max(range.lo(), a.lo()), std::min(range.hi(), a.hi()));
        target = hit.midpoint();
        sys.add_eq(point, target);
    } else {
        std::size_t beta = add_bounded(sys, "beta", row_rhs(data, row));
        RationalVector lhs = point;
        lhs.resize(sys.num_vars, 0);
        lhs[beta] = -1;
        sys.add_ge(std::move(lhs), 0);
    }

    SolveResult result = solve_feasibility(sys);
    if (!result.feasible())
        throw std::logic_error("row completion system infeasible for " + describe(row));

    const std::size_t m = data.m();
    RowCompletion out;
    out.free_coeffs.assign(result.assignment.begin(), result.assignment.begin() + static_cast<std::ptrdiff_t>(m));
    out.nonneg_coeffs.assign(result.assignment.begin() + static_cast<std::ptrdiff_t>(m),
                             result.assignment.begin() + static_cast<std::ptrdiff_t>(coeffs.size()));
    out.rhs = row.tag == RowKind::Equality ? target : result.assignment[coeffs.size()];
    return out;
}

} // namespace wopt
