#include "wopt/model.hpp"

#include <string>

namespace wopt {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_)
        throw std::invalid_argument("interval lower bound exceeds upper");
}

Interval operator+(const Interval& lhs, const Interval& rhs)
{
    return Interval(lhs.lo() + rhs.lo(), lhs.hi() + rhs.hi());
}

Interval interval_scale(const Rational& alpha, const Interval& value)
{
    if (sgn(alpha) < 0)
        return Interval(alpha * value.hi(), alpha * value.lo());
    return Interval(alpha * value.lo(), alpha * value.hi());
}

Interval interval_dot(std::span<const Rational> x, std::span<const Interval> v)
{
    if (x.size() != v.size())
        throw DimensionError("interval_dot: dimension mismatch");
    Rational lo = 0;
    Rational hi = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        Interval term = interval_scale(x[j], v[j]);
        lo += term.lo();
        hi += term.hi();
    }
    return Interval(std::move(lo), std::move(hi));
}

namespace {

void expect(bool ok, const char* what)
{
    if (!ok)
        throw DimensionError(std::string("inconsistent dimensions: ") + what);
}

bool contains_all(std::span<const Interval> intervals, std::span<const Rational> values)
{
    for (std::size_t i = 0; i < intervals.size(); ++i)
        if (!intervals[i].contains(values[i]))
            return false;
    return true;
}

Matrix midpoints(const IntervalMatrix& m)
{
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).midpoint();
    return out;
}

RationalVector midpoints(const IntervalVector& v)
{
    RationalVector out;
    out.reserve(v.size());
    for (const auto& entry : v)
        out.push_back(entry.midpoint());
    return out;
}

} // namespace

IlpData::IlpData(IntervalMatrix Af, IntervalMatrix An, IntervalMatrix Bf, IntervalMatrix Bn,
                 IntervalVector a, IntervalVector b, IntervalVector cf, IntervalVector cn)
    : Af_(std::move(Af)), An_(std::move(An)), Bf_(std::move(Bf)), Bn_(std::move(Bn)),
      a_(std::move(a)), b_(std::move(b)), cf_(std::move(cf)), cn_(std::move(cn))
{
    expect(An_.rows() == Af_.rows(), "Af and An row counts differ");
    expect(a_.size() == Af_.rows(), "a length differs from equality row count");
    expect(Bn_.rows() == Bf_.rows(), "Bf and Bn row counts differ");
    expect(b_.size() == Bf_.rows(), "b length differs from inequality row count");
    expect(Af_.cols() == cf_.size(), "Af column count differs from cf length");
    expect(Bf_.cols() == cf_.size(), "Bf column count differs from cf length");
    expect(An_.cols() == cn_.size(), "An column count differs from cn length");
    expect(Bn_.cols() == cn_.size(), "Bn column count differs from cn length");
}

std::size_t IlpData::entry_count() const
{
    return (k() + l()) * (m() + n()) + k() + l() + m() + n();
}

std::string_view to_string(VerdictTag tag)
{
    switch (tag) {
    case VerdictTag::WeaklyOptimal:
        return "weakly_optimal";
    case VerdictTag::NotWeaklyOptimal:
        return "not_weakly_optimal";
    case VerdictTag::NotWeaklyFeasible:
        return "not_weakly_feasible";
    }
    return "unknown";
}

bool scenario_contains(const IlpData& data, const Scenario& s)
{
    auto same_shape = [](const Matrix& lhs, const IntervalMatrix& rhs) {
        return lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols();
    };
    if (!same_shape(s.Af, data.Af()) || !same_shape(s.An, data.An()) || !same_shape(s.Bf, data.Bf()) ||
        !same_shape(s.Bn, data.Bn()) || s.a.size() != data.k() || s.b.size() != data.l() ||
        s.cf.size() != data.m() || s.cn.size() != data.n())
        throw DimensionError("scenario shape does not match interval data");

    return contains_all(data.Af().entries(), s.Af.entries()) && contains_all(data.An().entries(), s.An.entries()) &&
           contains_all(data.Bf().entries(), s.Bf.entries()) && contains_all(data.Bn().entries(), s.Bn.entries()) &&
           contains_all(data.a(), s.a) && contains_all(data.b(), s.b) && contains_all(data.cf(), s.cf) &&
           contains_all(data.cn(), s.cn);
}

void check_point_shape(const IlpData& data, const Point& x)
{
    if (x.xf.size() != data.m() || x.xn.size() != data.n())
        throw DimensionError("point shape does not match interval data");
}

Scenario midpoint_scenario(const IlpData& data)
{
    return Scenario{midpoints(data.Af()), midpoints(data.An()), midpoints(data.Bf()), midpoints(data.Bn()),
                    midpoints(data.a()),  midpoints(data.b()),  midpoints(data.cf()), midpoints(data.cn())};
}

Rational row_value(const Matrix& free_part, const Matrix& nonneg_part, std::size_t row, const Point& x)
{
    Rational sum = 0;
    auto f = free_part.row(row);
    for (std::size_t j = 0; j < f.size(); ++j)
        sum += f[j] * x.xf[j];
    auto nn = nonneg_part.row(row);
    for (std::size_t j = 0; j < nn.size(); ++j)
        sum += nn[j] * x.xn[j];
    return sum;
}

} // namespace wopt
