#include "wopt/scenario_program.hpp"

#include <string>

namespace wopt {

ScenarioProgram make_scenario_program(const Scenario& s)
{
    ScenarioProgram out;
    const std::size_t m = s.cf.size();
    const std::size_t n = s.cn.size();
    for (std::size_t j = 0; j < m; ++j)
        out.sys.add_variable("xf" + std::to_string(j));
    for (std::size_t j = 0; j < n; ++j)
        out.sys.add_variable("xn" + std::to_string(j), Rational(0));

    auto coefficient_row = [&](const Matrix& free_part, const Matrix& nonneg_part, std::size_t i) {
        RationalVector row;
        row.reserve(m + n);
        for (const auto& v : free_part.row(i))
            row.push_back(v);
        for (const auto& v : nonneg_part.row(i))
            row.push_back(v);
        return row;
    };
    for (std::size_t i = 0; i < s.a.size(); ++i)
        out.sys.add_eq(coefficient_row(s.Af, s.An, i), s.a[i]);
    for (std::size_t i = 0; i < s.b.size(); ++i)
        out.sys.add_ge(coefficient_row(s.Bf, s.Bn, i), s.b[i]);

    out.objective = s.cf;
    out.objective.insert(out.objective.end(), s.cn.begin(), s.cn.end());
    return out;
}

RationalVector flatten(const Point& x)
{
    RationalVector v = x.xf;
    v.insert(v.end(), x.xn.begin(), x.xn.end());
    return v;
}

bool is_feasible_for(const Scenario& s, const Point& x)
{
    for (const auto& v : x.xn)
        if (sgn(v) < 0)
            return false;
    for (std::size_t i = 0; i < s.a.size(); ++i)
        if (row_value(s.Af, s.An, i, x) != s.a[i])
            return false;
    for (std::size_t i = 0; i < s.b.size(); ++i)
        if (row_value(s.Bf, s.Bn, i, x) < s.b[i])
            return false;
    return true;
}

} // namespace wopt
