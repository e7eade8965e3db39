#include "wopt/linsolve.hpp"
#include "wopt/interval.hpp"

#include <ostream>
#include <set>

namespace wopt {

std::size_t LinearSystem::add_variable(std::string name, std::optional<Rational> lower_bound)
{
    names.push_back(std::move(name));
    lower_bounds.push_back(std::move(lower_bound));
    for (auto& row : eq_rows)
        row.coeffs.emplace_back(0);
    for (auto& row : le_rows)
        row.coeffs.emplace_back(0);
    return num_vars++;
}

void LinearSystem::add_eq(RationalVector coeffs, Rational rhs)
{
    eq_rows.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_le(RationalVector coeffs, Rational rhs)
{
    le_rows.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_ge(RationalVector coeffs, Rational rhs)
{
    for (auto& c : coeffs)
        c = -c;
    le_rows.push_back({std::move(coeffs), -rhs});
}

void LinearSystem::validate() const
{
    if (lower_bounds.size() != num_vars)
        throw DimensionError("linear system: lower_bounds length differs from num_vars");
    if (!names.empty() && names.size() != num_vars)
        throw DimensionError("linear system: names length differs from num_vars");
    for (const auto& row : eq_rows)
        if (row.coeffs.size() != num_vars)
            throw DimensionError("linear system: equality row has wrong length");
    for (const auto& row : le_rows)
        if (row.coeffs.size() != num_vars)
            throw DimensionError("linear system: inequality row has wrong length");
    std::set<std::string_view> seen;
    for (const auto& name : names)
        if (!seen.insert(name).second)
            throw DimensionError("linear system: duplicate variable label '" + name + "'");
}

bool LinearSystem::is_satisfied_by(const RationalVector& assignment) const
{
    if (assignment.size() != num_vars)
        return false;
    for (std::size_t j = 0; j < num_vars; ++j)
        if (lower_bounds[j] && assignment[j] < *lower_bounds[j])
            return false;
    for (const auto& row : eq_rows)
        if (dot(row.coeffs, assignment) != row.rhs)
            return false;
    for (const auto& row : le_rows)
        if (dot(row.coeffs, assignment) > row.rhs)
            return false;
    return true;
}

namespace {

// Dense tableau over nonnegative columns. Structural variables are shifted
// by their lower bound; free variables are split into a positive and a
// negative part. Each inequality row gets a slack column.
class Tableau {
public:
    Tableau(const LinearSystem& sys, std::ostream* trace) : trace_(trace)
    {
        const std::size_t nv = sys.num_vars;
        pos_col_.resize(nv);
        neg_col_.assign(nv, npos);
        shift_.assign(nv, 0);
        for (std::size_t j = 0; j < nv; ++j) {
            pos_col_[j] = num_cols_++;
            if (sys.lower_bounds[j])
                shift_[j] = *sys.lower_bounds[j];
            else
                neg_col_[j] = num_cols_++;
        }
        structural_cols_ = num_cols_;
        const std::size_t slack_start = num_cols_;
        num_cols_ += sys.le_rows.size();

        // Rows are assembled first, artificial columns appended afterwards.
        struct Pending {
            RationalVector coeffs;
            Rational rhs;
            std::size_t basic; // npos when an artificial is needed
        };
        std::vector<Pending> pending;
        auto assemble = [&](const LinearRow& row, std::size_t slack) {
            Pending p{RationalVector(num_cols_, 0), row.rhs, npos};
            for (std::size_t j = 0; j < nv; ++j) {
                const Rational& a = row.coeffs[j];
                if (is_zero(a))
                    continue;
                p.coeffs[pos_col_[j]] = a;
                if (neg_col_[j] != npos)
                    p.coeffs[neg_col_[j]] = -a;
                p.rhs -= a * shift_[j];
            }
            if (slack != npos)
                p.coeffs[slack] = 1;
            if (sgn(p.rhs) < 0) {
                for (auto& c : p.coeffs)
                    c = -c;
                p.rhs = -p.rhs;
            } else if (slack != npos) {
                p.basic = slack;
            }
            pending.push_back(std::move(p));
        };
        for (const auto& row : sys.eq_rows)
            assemble(row, npos);
        for (std::size_t i = 0; i < sys.le_rows.size(); ++i)
            assemble(sys.le_rows[i], slack_start + i);

        artificial_start_ = num_cols_;
        for (const auto& p : pending)
            if (p.basic == npos)
                ++num_cols_;

        std::size_t next_artificial = artificial_start_;
        for (auto& p : pending) {
            RationalVector row(num_cols_ + 1, 0);
            for (std::size_t j = 0; j < p.coeffs.size(); ++j)
                row[j] = std::move(p.coeffs[j]);
            row[num_cols_] = std::move(p.rhs);
            if (p.basic == npos) {
                row[next_artificial] = 1;
                p.basic = next_artificial++;
            }
            rows_.push_back(std::move(row));
            basis_.push_back(p.basic);
        }
    }

    // Phase 1. Returns false when the system is infeasible.
    bool find_feasible_basis()
    {
        if (artificial_start_ == num_cols_)
            return true;
        RationalVector cost(num_cols_, 0);
        for (std::size_t j = artificial_start_; j < num_cols_; ++j)
            cost[j] = 1;
        set_objective(cost);
        dump("phase 1 start");
        if (!optimize(num_cols_))
            throw std::logic_error("phase 1 reported unbounded");
        if (sgn(objective_[num_cols_]) != 0)
            return false;

        // Drive remaining (zero-level) artificials out of the basis.
        for (std::size_t r = 0; r < rows_.size();) {
            if (basis_[r] < artificial_start_) {
                ++r;
                continue;
            }
            std::size_t entering = npos;
            for (std::size_t j = 0; j < artificial_start_; ++j)
                if (!is_zero(rows_[r][j])) {
                    entering = j;
                    break;
                }
            if (entering == npos) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
                continue;
            }
            pivot(r, entering);
            ++r;
        }
        dump("phase 1 end");
        return true;
    }

    // Phase 2 on the structural objective. Returns false when unbounded.
    bool minimize(const RationalVector& objective)
    {
        RationalVector cost(num_cols_, 0);
        for (std::size_t j = 0; j < objective.size(); ++j) {
            cost[pos_col_[j]] = objective[j];
            if (neg_col_[j] != npos)
                cost[neg_col_[j]] = -objective[j];
        }
        set_objective(cost);
        dump("phase 2 start");
        return optimize(artificial_start_);
    }

    RationalVector assignment() const
    {
        RationalVector z(num_cols_, 0);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            z[basis_[r]] = rows_[r][num_cols_];
        RationalVector v(pos_col_.size());
        for (std::size_t j = 0; j < v.size(); ++j) {
            v[j] = shift_[j] + z[pos_col_[j]];
            if (neg_col_[j] != npos)
                v[j] -= z[neg_col_[j]];
        }
        return v;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void set_objective(const RationalVector& cost)
    {
        objective_.assign(num_cols_ + 1, 0);
        for (std::size_t j = 0; j < num_cols_; ++j)
            objective_[j] = cost[j];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& cb = cost[basis_[r]];
            if (is_zero(cb))
                continue;
            for (std::size_t j = 0; j <= num_cols_; ++j)
                if (!is_zero(rows_[r][j]))
                    objective_[j] -= cb * rows_[r][j];
        }
    }

    // Bland's rule: lowest-index improving column enters; ties in the ratio
    // test go to the lowest-index basic variable.
    bool optimize(std::size_t allowed_cols)
    {
        for (;;) {
            std::size_t entering = npos;
            for (std::size_t j = 0; j < allowed_cols; ++j)
                if (sgn(objective_[j]) < 0) {
                    entering = j;
                    break;
                }
            if (entering == npos)
                return true;

            std::size_t leaving = npos;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const Rational& a = rows_[r][entering];
                if (sgn(a) <= 0)
                    continue;
                Rational ratio = rows_[r][num_cols_] / a;
                if (leaving == npos || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == npos)
                return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t e)
    {
        RationalVector& prow = rows_[r];
        const Rational inv = 1 / prow[e];
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j <= num_cols_; ++j) {
            if (is_zero(prow[j]))
                continue;
            prow[j] *= inv;
            support.push_back(j);
        }
        auto eliminate = [&](RationalVector& row) {
            if (is_zero(row[e]))
                return;
            const Rational factor = row[e];
            for (std::size_t j : support)
                row[j] -= factor * prow[j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r)
                eliminate(rows_[i]);
        eliminate(objective_);
        basis_[r] = e;
        ++pivots_;
        if (trace_)
            *trace_ << "pivot " << pivots_ << ": row " << r << ", column " << e << '\n';
    }

    void dump(const char* label) const
    {
        if (!trace_)
            return;
        *trace_ << "== " << label << " (" << rows_.size() << " rows, " << num_cols_ << " columns)\n";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            *trace_ << "  [" << basis_[r] << "]";
            for (const auto& v : rows_[r])
                *trace_ << ' ' << v;
            *trace_ << '\n';
        }
        *trace_ << "  obj";
        for (const auto& v : objective_)
            *trace_ << ' ' << v;
        *trace_ << '\n';
    }

    std::ostream* trace_;
    std::vector<std::size_t> pos_col_, neg_col_;
    RationalVector shift_;
    std::size_t num_cols_ = 0;
    std::size_t structural_cols_ = 0;
    std::size_t artificial_start_ = 0;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> basis_;
    RationalVector objective_;
    std::size_t pivots_ = 0;
};

} // namespace

SolveResult solve_feasibility(const LinearSystem& sys, const SolveOptions& options)
{
    sys.validate();
    Tableau tableau(sys, options.trace);
    if (!tableau.find_feasible_basis())
        return {SolveStatus::Infeasible, {}, std::nullopt};
    return {SolveStatus::Feasible, tableau.assignment(), std::nullopt};
}

SolveResult solve_lp(const LinearSystem& sys, const RationalVector& objective, Sense sense,
                     const SolveOptions& options)
{
    sys.validate();
    if (objective.size() != sys.num_vars)
        throw DimensionError("solve_lp: objective length differs from num_vars");
    Tableau tableau(sys, options.trace);
    if (!tableau.find_feasible_basis())
        return {SolveStatus::Infeasible, {}, std::nullopt};

    RationalVector cost = objective;
    if (sense == Sense::Maximize)
        for (auto& c : cost)
            c = -c;
    bool bounded = tableau.minimize(cost);
    RationalVector assignment = tableau.assignment();
    if (!bounded)
        return {SolveStatus::Unbounded, std::move(assignment), std::nullopt};
    Rational value = dot(objective, assignment);
    return {SolveStatus::Feasible, std::move(assignment), std::move(value)};
}

bool verify_optimal(const LinearSystem& sys, const RationalVector& objective, const RationalVector& point,
                    Sense sense)
{
    if (point.size() != sys.num_vars)
        throw DimensionError("verify_optimal: point length differs from num_vars");
    if (!sys.is_satisfied_by(point))
        return false;
    SolveResult result = solve_lp(sys, objective, sense);
    if (result.status != SolveStatus::Feasible)
        return false;
    return dot(objective, point) == *result.optimum;
}

} // namespace wopt
