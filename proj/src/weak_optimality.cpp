#include "wopt/weak_optimality.hpp"
#include "wopt/scenario_program.hpp"
#include "wopt/weak_feasibility.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <thread>

namespace wopt {

namespace {

std::string label(const char* block, std::size_t i)
{
    return std::string(block) + "[" + std::to_string(i) + "]";
}

std::string label(const char* block, std::size_t i, std::size_t j)
{
    return label(block, i) + "[" + std::to_string(j) + "]";
}

// primed in multiplier * [lo, hi], linearized for a multiplier of known sign.
void add_scaled_membership(LinearSystem& sys, std::size_t primed, std::size_t multiplier, const Interval& range,
                           int sign)
{
    if (range.is_degenerate()) {
        RationalVector row = sys.zero_row();
        row[primed] = 1;
        row[multiplier] = -range.lo();
        sys.add_eq(std::move(row), 0);
        return;
    }
    const Rational& lower = sign > 0 ? range.lo() : range.hi();
    const Rational& upper = sign > 0 ? range.hi() : range.lo();
    RationalVector below = sys.zero_row();
    below[multiplier] = lower;
    below[primed] = -1;
    sys.add_le(std::move(below), 0);
    RationalVector above = sys.zero_row();
    above[primed] = 1;
    above[multiplier] = -upper;
    sys.add_le(std::move(above), 0);
}

// sum of the given variables in [lo, hi], or only <= hi when upper_only.
void add_sum_membership(LinearSystem& sys, const std::vector<std::size_t>& terms, const Interval& range,
                        bool upper_only)
{
    RationalVector row = sys.zero_row();
    for (std::size_t v : terms)
        row[v] += 1;
    if (upper_only) {
        sys.add_le(std::move(row), range.hi());
    } else if (range.is_degenerate()) {
        sys.add_eq(std::move(row), range.lo());
    } else {
        sys.add_ge(row, range.lo());
        sys.add_le(std::move(row), range.hi());
    }
}

struct OrthantOutcome {
    TestingSystem ts;
    SolveResult result;
};

OrthantOutcome solve_orthant(const IlpData& data, const Point& x, std::uint64_t t)
{
    TestingSystem ts = build_testing_system_orthant(data, x, orthant(data.k(), t));
    SolveResult result = solve_feasibility(ts.sys);
    return {std::move(ts), std::move(result)};
}

} // namespace

SignVector orthant(std::size_t k, std::uint64_t t)
{
    SignVector sigma(k);
    for (std::size_t i = 0; i < k; ++i)
        sigma[i] = ((t >> (k - 1 - i)) & 1U) ? -1 : 1;
    return sigma;
}

TestingSystem build_testing_system_orthant(const IlpData& data, const Point& x, const SignVector& sigma)
{
    check_point_shape(data, x);
    const std::size_t k = data.k(), l = data.l(), m = data.m(), n = data.n();
    if (sigma.size() != k)
        throw DimensionError("orthant sign vector length differs from equality row count");
    for (auto s : sigma)
        if (s != 1 && s != -1)
            throw std::invalid_argument("orthant signs must be +1 or -1");

    TestingSystem ts;
    ts.sigma = sigma;
    LinearSystem& sys = ts.sys;
    TestingVariables& v = ts.vars;

    for (std::size_t i = 0; i < k; ++i)
        v.yf.push_back(sys.add_variable(label("yf", i), sigma[i] > 0 ? std::optional<Rational>(0) : std::nullopt));
    for (std::size_t i = 0; i < l; ++i)
        v.yn.push_back(sys.add_variable(label("yn", i), Rational(0)));
    v.Af = DenseMatrix<std::size_t>(k, m);
    v.An = DenseMatrix<std::size_t>(k, n);
    v.Bf = DenseMatrix<std::size_t>(l, m);
    v.Bn = DenseMatrix<std::size_t>(l, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            v.Af(i, j) = sys.add_variable(label("Af'", i, j));
        for (std::size_t j = 0; j < n; ++j)
            v.An(i, j) = sys.add_variable(label("An'", i, j));
        v.a.push_back(sys.add_variable(label("a'", i)));
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            v.Bf(i, j) = sys.add_variable(label("Bf'", i, j));
        for (std::size_t j = 0; j < n; ++j)
            v.Bn(i, j) = sys.add_variable(label("Bn'", i, j));
        v.b.push_back(sys.add_variable(label("b'", i)));
    }

    // yf_i <= 0 in negative orthants; the nonnegative side is a lower bound.
    for (std::size_t i = 0; i < k; ++i) {
        if (sigma[i] > 0)
            continue;
        RationalVector row = sys.zero_row();
        row[v.yf[i]] = 1;
        sys.add_le(std::move(row), 0);
    }

    // Scaled coefficient memberships.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            add_scaled_membership(sys, v.Af(i, j), v.yf[i], data.Af()(i, j), sigma[i]);
        for (std::size_t j = 0; j < n; ++j)
            add_scaled_membership(sys, v.An(i, j), v.yf[i], data.An()(i, j), sigma[i]);
        add_scaled_membership(sys, v.a[i], v.yf[i], data.a()[i], sigma[i]);
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            add_scaled_membership(sys, v.Bf(i, j), v.yn[i], data.Bf()(i, j), 1);
        for (std::size_t j = 0; j < n; ++j)
            add_scaled_membership(sys, v.Bn(i, j), v.yn[i], data.Bn()(i, j), 1);
        add_scaled_membership(sys, v.b[i], v.yn[i], data.b()[i], 1);
    }

    // Scaled primal rows hold with equality at x.
    auto add_scaled_primal = [&](const DenseMatrix<std::size_t>& free_vars, const DenseMatrix<std::size_t>& nonneg_vars,
                                 std::size_t rhs_var, std::size_t i) {
        RationalVector row = sys.zero_row();
        for (std::size_t j = 0; j < m; ++j)
            row[free_vars(i, j)] = x.xf[j];
        for (std::size_t j = 0; j < n; ++j)
            row[nonneg_vars(i, j)] = x.xn[j];
        row[rhs_var] = -1;
        sys.add_eq(std::move(row), 0);
    };
    for (std::size_t i = 0; i < k; ++i)
        add_scaled_primal(v.Af, v.An, v.a[i], i);
    for (std::size_t i = 0; i < l; ++i)
        add_scaled_primal(v.Bf, v.Bn, v.b[i], i);

    // Column sums reproduce the objective.
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::size_t> terms;
        for (std::size_t i = 0; i < k; ++i)
            terms.push_back(v.Af(i, j));
        for (std::size_t i = 0; i < l; ++i)
            terms.push_back(v.Bf(i, j));
        add_sum_membership(sys, terms, data.cf()[j], false);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> terms;
        for (std::size_t i = 0; i < k; ++i)
            terms.push_back(v.An(i, j));
        for (std::size_t i = 0; i < l; ++i)
            terms.push_back(v.Bn(i, j));
        add_sum_membership(sys, terms, data.cn()[j], sgn(x.xn[j]) <= 0);
    }
    return ts;
}

TestingSystem build_testing_system_ineq(const IlpData& data, const Point& x)
{
    if (data.k() != 0)
        throw DimensionError("inequality-only testing system requires k = 0");
    return build_testing_system_orthant(data, x, {});
}

Witness extract_witness(const TestingSystem& ts, const RationalVector& assignment, const IlpData& data,
                        const Point& x, std::size_t* row_completions)
{
    check_point_shape(data, x);
    if (!ts.sys.is_satisfied_by(assignment))
        throw std::invalid_argument("extract_witness: assignment does not satisfy the testing system");
    const std::size_t k = data.k(), l = data.l(), m = data.m(), n = data.n();
    const TestingVariables& v = ts.vars;
    auto value = [&](std::size_t index) -> const Rational& { return assignment[index]; };

    Witness w;
    w.sigma = ts.sigma;
    Scenario& s = w.scenario;
    s.Af = Matrix(k, m);
    s.An = Matrix(k, n);
    s.Bf = Matrix(l, m);
    s.Bn = Matrix(l, n);
    s.a.resize(k);
    s.b.resize(l);
    s.cf.assign(m, 0);
    s.cn.assign(n, 0);

    auto fill_row = [&](Matrix& free_part, Matrix& nonneg_part, Rational& rhs, std::size_t i,
                        const DenseMatrix<std::size_t>& free_vars, const DenseMatrix<std::size_t>& nonneg_vars,
                        std::size_t rhs_var, const Rational& multiplier, RowKind kind) {
        if (!is_zero(multiplier)) {
            for (std::size_t j = 0; j < m; ++j)
                free_part(i, j) = value(free_vars(i, j)) / multiplier;
            for (std::size_t j = 0; j < n; ++j)
                nonneg_part(i, j) = value(nonneg_vars(i, j)) / multiplier;
            rhs = value(rhs_var) / multiplier;
            return;
        }
        RowCompletion row = complete_row_scenario(data, x, kind);
        if (row_completions)
            ++*row_completions;
        for (std::size_t j = 0; j < m; ++j)
            free_part(i, j) = row.free_coeffs[j];
        for (std::size_t j = 0; j < n; ++j)
            nonneg_part(i, j) = row.nonneg_coeffs[j];
        rhs = row.rhs;
    };

    for (std::size_t i = 0; i < k; ++i) {
        w.yf.push_back(value(v.yf[i]));
        fill_row(s.Af, s.An, s.a[i], i, v.Af, v.An, v.a[i], w.yf.back(), {RowKind::Equality, i});
    }
    for (std::size_t i = 0; i < l; ++i) {
        w.yn.push_back(value(v.yn[i]));
        fill_row(s.Bf, s.Bn, s.b[i], i, v.Bf, v.Bn, v.b[i], w.yn.back(), {RowKind::Inequality, i});
    }

    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < k; ++i)
            s.cf[j] += value(v.Af(i, j));
        for (std::size_t i = 0; i < l; ++i)
            s.cf[j] += value(v.Bf(i, j));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(x.xn[j]) == 0) {
            s.cn[j] = data.cn()[j].hi();
            continue;
        }
        for (std::size_t i = 0; i < k; ++i)
            s.cn[j] += value(v.An(i, j));
        for (std::size_t i = 0; i < l; ++i)
            s.cn[j] += value(v.Bn(i, j));
    }
    return w;
}

Decision decide_weak_optimality(const IlpData& data, const Point& x, const DecideOptions& options)
{
    check_point_shape(data, x);
    Decision decision;
    if (!check_point_weak_feasibility(data, x)) {
        decision.verdict.tag = VerdictTag::NotWeaklyFeasible;
        return decision;
    }

    const std::size_t k = data.k();
    if (k >= 63)
        throw std::invalid_argument("too many equality rows for orthant enumeration");
    const std::uint64_t total = std::uint64_t{1} << k;
    const std::uint64_t batch = std::max<std::uint64_t>(1, options.jobs);

    std::optional<OrthantOutcome> winner;
    for (std::uint64_t start = 0; start < total; start += batch) {
        const std::uint64_t end = std::min(total, start + batch);
        std::vector<std::optional<OrthantOutcome>> outcomes(end - start);
        if (end - start > 1) {
            std::vector<std::jthread> workers;
            for (std::uint64_t t = start; t < end; ++t)
                workers.emplace_back([&, t] { outcomes[t - start] = solve_orthant(data, x, t); });
        } else {
            outcomes[0] = solve_orthant(data, x, start);
        }
        decision.stats.orthants_tried += end - start;

        for (auto& outcome : outcomes) {
            if (!outcome->result.feasible())
                continue;
            if (options.exhaustive)
                decision.feasible_orthants.push_back(outcome->ts.sigma);
            if (!winner)
                winner = std::move(outcome);
        }
        if (winner && !options.exhaustive)
            break;
    }

    if (!winner) {
        decision.verdict.tag = VerdictTag::NotWeaklyOptimal;
        return decision;
    }

    Witness w = extract_witness(winner->ts, winner->result.assignment, data, x, &decision.stats.row_completions);
    WitnessCheck check = check_witness(data, x, w);
    if (!check.valid)
        throw InternalInconsistency("extracted witness failed verification: " + check.reason);
    decision.verdict.tag = VerdictTag::WeaklyOptimal;
    decision.verdict.witness = std::move(w);
    return decision;
}

WitnessCheck check_witness(const IlpData& data, const Point& x, const Witness& w)
{
    const std::size_t k = data.k(), l = data.l(), m = data.m(), n = data.n();
    const Scenario& s = w.scenario;
    auto fail = [](std::string reason) { return WitnessCheck{false, std::move(reason)}; };

    if (x.xf.size() != m || x.xn.size() != n || w.yf.size() != k || w.yn.size() != l || w.sigma.size() != k)
        return fail("shape");
    try {
        if (!scenario_contains(data, s))
            return fail("scenario membership");
    } catch (const DimensionError&) {
        return fail("shape");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (w.sigma[i] != 1 && w.sigma[i] != -1)
            return fail("orthant sign");
        if (sgn(w.yf[i]) * w.sigma[i] < 0)
            return fail("orthant sign");
    }
    if (!is_feasible_for(s, x))
        return fail("primal feasibility");
    for (const auto& y : w.yn)
        if (sgn(y) < 0)
            return fail("dual sign");

    for (std::size_t j = 0; j < m; ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < k; ++i)
            col += s.Af(i, j) * w.yf[i];
        for (std::size_t i = 0; i < l; ++i)
            col += s.Bf(i, j) * w.yn[i];
        if (col != s.cf[j])
            return fail("dual feasibility");
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < k; ++i)
            col += s.An(i, j) * w.yf[i];
        for (std::size_t i = 0; i < l; ++i)
            col += s.Bn(i, j) * w.yn[i];
        if (col > s.cn[j])
            return fail("dual feasibility");
        if (!is_zero(x.xn[j] * (s.cn[j] - col)))
            return fail("complementary slackness");
    }
    for (std::size_t i = 0; i < l; ++i)
        if (!is_zero(w.yn[i] * (s.b[i] - row_value(s.Bf, s.Bn, i, x))))
            return fail("complementary slackness");

    ScenarioProgram lp = make_scenario_program(s);
    if (!verify_optimal(lp.sys, lp.objective, flatten(x)))
        return fail("scenario LP optimality");
    return {true, {}};
}

} // namespace wopt
