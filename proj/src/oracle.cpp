#include "wopt/oracle.hpp"
#include "wopt/linsolve.hpp"
#include "wopt/scenario_program.hpp"

#include <limits>
#include <string>

namespace wopt {

namespace {

// One admissible realization of a constraint row: coefficients then rhs.
using RowChoice = RationalVector;

// Lexicographic product of the grids of the given intervals.
template <typename Visit>
void for_each_combination(const std::vector<RationalVector>& grids, Visit&& visit)
{
    std::vector<std::size_t> digit(grids.size(), 0);
    for (const auto& g : grids)
        if (g.empty())
            return;
    RationalVector current(grids.size());
    for (;;) {
        for (std::size_t i = 0; i < grids.size(); ++i)
            current[i] = grids[i][digit[i]];
        visit(current);
        std::size_t pos = grids.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < grids[pos].size())
                break;
            digit[pos] = 0;
            if (pos == 0)
                return;
        }
        if (grids.empty())
            return;
    }
}

std::vector<RowChoice> feasible_row_choices(const IntervalMatrix& free_part, const IntervalMatrix& nonneg_part,
                                            const Interval& rhs, std::size_t row, bool equality, const Point& x,
                                            std::size_t depth)
{
    std::vector<RationalVector> grids;
    for (const auto& iv : free_part.row(row))
        grids.push_back(grid_values(iv, depth));
    for (const auto& iv : nonneg_part.row(row))
        grids.push_back(grid_values(iv, depth));
    grids.push_back(grid_values(rhs, depth));

    const RationalVector point = flatten(x);
    std::vector<RowChoice> out;
    for_each_combination(grids, [&](const RationalVector& values) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < point.size(); ++j)
            lhs += values[j] * point[j];
        const Rational& target = values.back();
        if (equality ? lhs == target : lhs >= target)
            out.push_back(values);
    });
    return out;
}

void assign_row(Matrix& free_part, Matrix& nonneg_part, Rational& rhs, std::size_t row, const RowChoice& choice)
{
    const std::size_t m = free_part.cols();
    for (std::size_t j = 0; j < m; ++j)
        free_part(row, j) = choice[j];
    for (std::size_t j = 0; j < nonneg_part.cols(); ++j)
        nonneg_part(row, j) = choice[m + j];
    rhs = choice.back();
}

} // namespace

RationalVector grid_values(const Interval& range, std::size_t depth)
{
    if (range.is_degenerate())
        return {range.lo()};
    RationalVector values;
    values.reserve(depth + 2);
    const Rational step = (range.hi() - range.lo()) / static_cast<unsigned long>(depth + 1);
    for (std::size_t i = 0; i <= depth; ++i)
        values.push_back(range.lo() + step * static_cast<unsigned long>(i));
    values.push_back(range.hi());
    return values;
}

std::uint64_t grid_size(const IlpData& data, std::size_t depth)
{
    constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    auto account = [&](std::span<const Interval> entries) {
        for (const auto& iv : entries) {
            if (iv.is_degenerate())
                continue;
            const std::uint64_t factor = depth + 2;
            total = total > saturated / factor ? saturated : total * factor;
        }
    };
    account(data.Af().entries());
    account(data.An().entries());
    account(data.Bf().entries());
    account(data.Bn().entries());
    account(data.a());
    account(data.b());
    account(data.cf());
    account(data.cn());
    return total;
}

OracleResult corner_grid_oracle(const IlpData& data, const Point& x, std::size_t depth, std::uint64_t budget)
{
    check_point_shape(data, x);
    if (std::uint64_t size = grid_size(data, depth); size > budget)
        throw BudgetExceeded("scenario grid has " + std::to_string(size) + " points, budget is " +
                             std::to_string(budget));

    OracleResult result;
    for (const auto& v : x.xn)
        if (sgn(v) < 0)
            return result;

    // Rows are independent, so infeasible row realizations are dropped before
    // forming the product. The surviving scenarios keep their grid order.
    std::vector<std::vector<RowChoice>> rows;
    for (std::size_t i = 0; i < data.k(); ++i)
        rows.push_back(feasible_row_choices(data.Af(), data.An(), data.a()[i], i, true, x, depth));
    for (std::size_t i = 0; i < data.l(); ++i)
        rows.push_back(feasible_row_choices(data.Bf(), data.Bn(), data.b()[i], i, false, x, depth));
    for (const auto& choices : rows)
        if (choices.empty())
            return result;

    std::vector<RationalVector> objective_grids;
    for (const auto& iv : data.cf())
        objective_grids.push_back(grid_values(iv, depth));
    for (const auto& iv : data.cn())
        objective_grids.push_back(grid_values(iv, depth));

    Scenario s{Matrix(data.k(), data.m()), Matrix(data.k(), data.n()), Matrix(data.l(), data.m()),
               Matrix(data.l(), data.n()), RationalVector(data.k()), RationalVector(data.l()),
               RationalVector(data.m()), RationalVector(data.n())};
    const RationalVector point = flatten(x);

    std::vector<std::size_t> digit(rows.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < data.k(); ++i)
            assign_row(s.Af, s.An, s.a[i], i, rows[i][digit[i]]);
        for (std::size_t i = 0; i < data.l(); ++i)
            assign_row(s.Bf, s.Bn, s.b[i], i, rows[data.k() + i][digit[data.k() + i]]);

        bool found = false;
        for_each_combination(objective_grids, [&](const RationalVector& c) {
            if (found)
                return;
            for (std::size_t j = 0; j < data.m(); ++j)
                s.cf[j] = c[j];
            for (std::size_t j = 0; j < data.n(); ++j)
                s.cn[j] = c[data.m() + j];
            ++result.scenarios_checked;
            ScenarioProgram lp = make_scenario_program(s);
            if (verify_optimal(lp.sys, lp.objective, point))
                found = true;
        });
        if (found) {
            result.tag = OracleResult::Certified;
            result.scenario = s;
            return result;
        }

        std::size_t pos = rows.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < rows[pos].size()) {
                done = false;
                break;
            }
            digit[pos] = 0;
        }
        if (done)
            return result;
    }
}

bool weak_feasibility_system_bruteforce(const IntervalMatrix& Bf, const IntervalVector& b, std::size_t cap)
{
    if (b.size() != Bf.rows())
        throw DimensionError("b length differs from row count of Bf");
    const std::size_t m = Bf.cols();
    if (m > cap)
        throw std::invalid_argument("orthant enumeration over " + std::to_string(m) + " variables exceeds cap " +
                                    std::to_string(cap));

    // Inside a fixed orthant the smallest value of B_i x over B_i in Bf_i is
    // linear in x, so some B, beta work iff min_B B_i x <= hi(b_i):
    //
    //   sign of x_j   coefficient minimizing B_ij x_j
    //   x_j >= 0      lo(Bf_ij)
    //   x_j <= 0      hi(Bf_ij)
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << m); ++t) {
        LinearSystem sys;
        std::vector<bool> nonnegative(m);
        for (std::size_t j = 0; j < m; ++j) {
            nonnegative[j] = ((t >> (m - 1 - j)) & 1U) == 0;
            sys.add_variable("x" + std::to_string(j),
                             nonnegative[j] ? std::optional<Rational>(0) : std::nullopt);
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (nonnegative[j])
                continue;
            RationalVector row = sys.zero_row();
            row[j] = 1;
            sys.add_le(std::move(row), 0);
        }
        for (std::size_t i = 0; i < Bf.rows(); ++i) {
            RationalVector row(m);
            for (std::size_t j = 0; j < m; ++j)
                row[j] = nonnegative[j] ? Bf(i, j).lo() : Bf(i, j).hi();
            sys.add_le(std::move(row), b[i].hi());
        }
        if (solve_feasibility(sys).feasible())
            return true;
    }
    return false;
}

} // namespace wopt

namespace wopt {

bool weak_feasibility_point_bruteforce(const IlpData& data, const Point& x)
{
    check_point_shape(data, x);
    for (const auto& v : x.xn)
        if (v < 0)
            return false;

    const RationalVector point = flatten(x);
    LinearSystem sys;
    std::vector<std::pair<std::vector<std::size_t>, bool>> rows;
    auto bounded = [&sys](const Interval& iv) {
        return sys.add_variable("c" + std::to_string(sys.num_vars), iv.lo());
    };
    auto collect = [&](const IntervalMatrix& fp, const IntervalMatrix& np, const IntervalVector& rhs, bool eq) {
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            std::vector<std::size_t> vars;
            for (const auto& iv : fp.row(i))
                vars.push_back(bounded(iv));
            for (const auto& iv : np.row(i))
                vars.push_back(bounded(iv));
            vars.push_back(bounded(rhs[i]));
            rows.emplace_back(std::move(vars), eq);
        }
    };
    collect(data.Af(), data.An(), data.a(), true);
    collect(data.Bf(), data.Bn(), data.b(), false);

    auto intervals = [&](const IntervalMatrix& fp, const IntervalMatrix& np, const IntervalVector& rhs) {
        std::vector<Interval> out;
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            out.insert(out.end(), fp.row(i).begin(), fp.row(i).end());
            out.insert(out.end(), np.row(i).begin(), np.row(i).end());
            out.push_back(rhs[i]);
        }
        return out;
    };
    std::vector<Interval> all = intervals(data.Af(), data.An(), data.a());
    std::vector<Interval> ineq = intervals(data.Bf(), data.Bn(), data.b());
    all.insert(all.end(), ineq.begin(), ineq.end());
    for (std::size_t v = 0; v < all.size(); ++v) {
        RationalVector upper = sys.zero_row();
        upper[v] = 1;
        sys.add_le(std::move(upper), all[v].hi());
    }

    // Row i: sum_j coeff_ij * x_j - rhs_i (= or >=) 0, linear in the coefficients.
    for (const auto& [vars, eq] : rows) {
        RationalVector row = sys.zero_row();
        for (std::size_t j = 0; j + 1 < vars.size(); ++j)
            row[vars[j]] = point[j];
        row[vars.back()] = -1;
        if (eq)
            sys.add_eq(std::move(row), 0);
        else
            sys.add_ge(std::move(row), 0);
    }
    return solve_feasibility(sys).feasible();
}

} // namespace wopt
