#pragma once

#include "wopt/linsolve.hpp"
#include "wopt/model.hpp"

#include <algorithm>
#include <random>

namespace wopt::testing {

struct FuzzShape {
    std::size_t max_k = 3, max_l = 3, max_m = 3, max_n = 3;
    int bound = 5;                  // every interval bound lies in [-bound, bound]
    double degenerate_share = 0.35; // chance that an interval is a single point
};

struct FuzzInstance {
    enum Kind { Random, FeasiblePlanted, OptimalPlanted };
    Kind kind;
    IlpData data;
    Point x;
};

// Random interval programs in three flavours: unstructured data, data built
// around a scenario where x is feasible, and data built around a scenario
// where x is optimal (with planted duals).
class InstanceFuzzer {
public:
    explicit InstanceFuzzer(std::uint64_t seed, FuzzShape shape = {}) : rng_(seed), shape_(shape) {}

    std::mt19937_64& rng() { return rng_; }

    std::size_t uniform_count(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

    // Uniform over multiples of 1/den in [lo, hi] with den in {1, 2, 3, 4}.
    Rational rational(int lo, int hi)
    {
        long den = std::uniform_int_distribution<long>(1, 4)(rng_);
        long num = std::uniform_int_distribution<long>(lo * den, hi * den)(rng_);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    Interval interval(int bound)
    {
        Rational lo = rational(-bound, bound);
        if (coin(shape_.degenerate_share))
            return Interval(lo);
        Rational hi = rational(-bound, bound);
        if (hi < lo)
            std::swap(lo, hi);
        return Interval(lo, hi);
    }

    // Interval around value, clipped to the bound box (value must lie in it).
    Interval around(const Rational& value)
    {
        if (coin(shape_.degenerate_share))
            return Interval(value);
        Rational lo = value - rational(0, 2);
        Rational hi = value + rational(0, 2);
        const Rational box(shape_.bound);
        return Interval(std::max(lo, Rational(-box)), std::min(hi, box));
    }

    Point point(std::size_t m, std::size_t n, int spread)
    {
        Point x;
        for (std::size_t j = 0; j < m; ++j)
            x.xf.push_back(rational(-spread, spread));
        for (std::size_t j = 0; j < n; ++j)
            x.xn.push_back(coin(0.4) ? Rational(0) : rational(0, spread));
        return x;
    }

    FuzzInstance next()
    {
        auto kind = static_cast<FuzzInstance::Kind>(uniform_count(0, 2));
        for (;;) {
            const std::size_t k = uniform_count(0, shape_.max_k), l = uniform_count(0, shape_.max_l),
                              m = uniform_count(0, shape_.max_m), n = uniform_count(0, shape_.max_n);
            if (kind == FuzzInstance::Random)
                return random_instance(k, l, m, n);
            if (auto planted = planted_instance(k, l, m, n, kind == FuzzInstance::OptimalPlanted))
                return *planted;
        }
    }

    FuzzInstance random_instance(std::size_t k, std::size_t l, std::size_t m, std::size_t n)
    {
        auto imatrix = [&](std::size_t r, std::size_t c) {
            IntervalMatrix out(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    out(i, j) = interval(shape_.bound);
            return out;
        };
        auto ivector = [&](std::size_t len) {
            IntervalVector out;
            for (std::size_t i = 0; i < len; ++i)
                out.push_back(interval(shape_.bound));
            return out;
        };
        IntervalMatrix Af = imatrix(k, m), An = imatrix(k, n), Bf = imatrix(l, m), Bn = imatrix(l, n);
        IntervalVector a = ivector(k), b = ivector(l), cf = ivector(m), cn = ivector(n);
        IlpData data(std::move(Af), std::move(An), std::move(Bf), std::move(Bn), std::move(a), std::move(b),
                     std::move(cf), std::move(cn));
        return {FuzzInstance::Random, std::move(data), point(m, n, 2)};
    }

    std::optional<FuzzInstance> planted_instance(std::size_t k, std::size_t l, std::size_t m, std::size_t n,
                                                 bool optimal)
    {
        Point x = point(m, n, 1);
        Scenario s{Matrix(k, m), Matrix(k, n), Matrix(l, m), Matrix(l, n), RationalVector(k), RationalVector(l),
                   RationalVector(m), RationalVector(n)};
        auto fill = [&](Matrix& mtx) {
            for (std::size_t i = 0; i < mtx.rows(); ++i)
                for (std::size_t j = 0; j < mtx.cols(); ++j)
                    mtx(i, j) = rational(-1, 1);
        };
        fill(s.Af);
        fill(s.An);
        fill(s.Bf);
        fill(s.Bn);
        std::vector<bool> active(l);
        for (std::size_t i = 0; i < k; ++i)
            s.a[i] = row_value(s.Af, s.An, i, x);
        for (std::size_t i = 0; i < l; ++i) {
            active[i] = coin(0.6);
            s.b[i] = row_value(s.Bf, s.Bn, i, x) - (active[i] ? Rational(0) : rational(0, 2));
        }

        RationalVector yf(k), yn(l, 0);
        for (auto& y : yf)
            y = rational(-1, 1);
        for (std::size_t i = 0; i < l; ++i)
            if (active[i])
                yn[i] = rational(0, 1);
        auto columns = [&](const RationalVector& f, const RationalVector& g, RationalVector& cf, RationalVector& cn) {
            for (std::size_t j = 0; j < m; ++j) {
                cf[j] = 0;
                for (std::size_t i = 0; i < k; ++i)
                    cf[j] += s.Af(i, j) * f[i];
                for (std::size_t i = 0; i < l; ++i)
                    cf[j] += s.Bf(i, j) * g[i];
            }
            for (std::size_t j = 0; j < n; ++j) {
                cn[j] = 0;
                for (std::size_t i = 0; i < k; ++i)
                    cn[j] += s.An(i, j) * f[i];
                for (std::size_t i = 0; i < l; ++i)
                    cn[j] += s.Bn(i, j) * g[i];
            }
        };
        if (optimal) {
            columns(yf, yn, s.cf, s.cn);
            Rational largest = 0;
            for (const auto& c : s.cf)
                largest = std::max(largest, Rational(abs(c)));
            for (const auto& c : s.cn)
                largest = std::max(largest, Rational(abs(c)));
            if (largest > 4) {
                Rational factor = Rational(4) / largest;
                for (auto& y : yf)
                    y *= factor;
                for (auto& y : yn)
                    y *= factor;
                columns(yf, yn, s.cf, s.cn);
            }
            for (std::size_t j = 0; j < n; ++j)
                if (is_zero(x.xn[j]))
                    s.cn[j] += rational(0, 1);
        } else {
            for (auto& c : s.cf)
                c = rational(-shape_.bound, shape_.bound);
            for (auto& c : s.cn)
                c = rational(-shape_.bound, shape_.bound);
        }

        const Rational box(shape_.bound);
        auto in_box = [&](std::span<const Rational> values) {
            return std::all_of(values.begin(), values.end(), [&](const Rational& v) { return abs(v) <= box; });
        };
        if (!in_box(s.a) || !in_box(s.b) || !in_box(s.cf) || !in_box(s.cn))
            return std::nullopt;

        auto widen_matrix = [&](const Matrix& mtx) {
            IntervalMatrix out(mtx.rows(), mtx.cols());
            for (std::size_t i = 0; i < mtx.rows(); ++i)
                for (std::size_t j = 0; j < mtx.cols(); ++j)
                    out(i, j) = around(mtx(i, j));
            return out;
        };
        auto widen_vector = [&](const RationalVector& v) {
            IntervalVector out;
            for (const auto& e : v)
                out.push_back(around(e));
            return out;
        };
        IlpData data(widen_matrix(s.Af), widen_matrix(s.An), widen_matrix(s.Bf), widen_matrix(s.Bn),
                     widen_vector(s.a), widen_vector(s.b), widen_vector(s.cf), widen_vector(s.cn));
        return FuzzInstance{optimal ? FuzzInstance::OptimalPlanted : FuzzInstance::FeasiblePlanted, std::move(data),
                            std::move(x)};
    }

    // Random interval system Bf x <= b with up to max_l rows and max_m columns.
    std::pair<IntervalMatrix, IntervalVector> interval_system(std::size_t max_l, std::size_t max_m)
    {
        const std::size_t l = uniform_count(0, max_l), m = uniform_count(0, max_m);
        IntervalMatrix Bf(l, m);
        for (auto& e : Bf.entries())
            e = interval(shape_.bound);
        IntervalVector b;
        for (std::size_t i = 0; i < l; ++i)
            b.push_back(interval(shape_.bound));
        return {std::move(Bf), std::move(b)};
    }

    // Copy of data with a random subset of intervals enlarged on either side.
    IlpData widen(const IlpData& data)
    {
        auto grow = [&](const Interval& iv) {
            if (!coin(0.3))
                return iv;
            return Interval(iv.lo() - rational(0, 2), iv.hi() + rational(0, 2));
        };
        auto matrix = [&](const IntervalMatrix& mtx) {
            IntervalMatrix out = mtx;
            for (auto& e : out.entries())
                e = grow(e);
            return out;
        };
        auto vector = [&](const IntervalVector& v) {
            IntervalVector out;
            for (const auto& e : v)
                out.push_back(grow(e));
            return out;
        };
        return IlpData(matrix(data.Af()), matrix(data.An()), matrix(data.Bf()), matrix(data.Bn()), vector(data.a()),
                       vector(data.b()), vector(data.cf()), vector(data.cn()));
    }

    // Random kernel system with lower-bounded and free variables.
    LinearSystem linear_system(std::size_t max_vars, std::size_t max_rows, double free_share = 0.25)
    {
        LinearSystem sys;
        const std::size_t nv = uniform_count(1, max_vars);
        for (std::size_t j = 0; j < nv; ++j)
            sys.add_variable("v" + std::to_string(j),
                             coin(free_share) ? std::nullopt : std::optional<Rational>(rational(-2, 2)));
        const std::size_t rows = uniform_count(0, max_rows);
        for (std::size_t r = 0; r < rows; ++r) {
            RationalVector coeffs(nv);
            for (auto& c : coeffs)
                c = coin(0.3) ? Rational(0) : rational(-3, 3);
            Rational rhs = rational(-4, 4);
            if (coin(0.25))
                sys.add_eq(std::move(coeffs), std::move(rhs));
            else
                sys.add_le(std::move(coeffs), std::move(rhs));
        }
        return sys;
    }

private:
    std::mt19937_64 rng_;
    FuzzShape shape_;
};

} // namespace wopt::testing
