#pragma once

#include "wopt/interval.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace wopt {

// Interval data of the program
//
//   min  cf.xf + cn.xn
//   s.t. Af xf + An xn  = a   (k rows)
//        Bf xf + Bn xn >= b   (l rows)
//        xn >= 0
//
// with m free variables xf and n nonnegative variables xn. Any of k, l, m, n
// may be zero.
class IlpData {
public:
    IlpData() = default;
    // Throws DimensionError if the blocks disagree on k, l, m or n.
    IlpData(IntervalMatrix Af, IntervalMatrix An, IntervalMatrix Bf, IntervalMatrix Bn,
            IntervalVector a, IntervalVector b, IntervalVector cf, IntervalVector cn);

    std::size_t k() const { return Af_.rows(); }
    std::size_t l() const { return Bf_.rows(); }
    std::size_t m() const { return cf_.size(); }
    std::size_t n() const { return cn_.size(); }

    const IntervalMatrix& Af() const { return Af_; }
    const IntervalMatrix& An() const { return An_; }
    const IntervalMatrix& Bf() const { return Bf_; }
    const IntervalMatrix& Bn() const { return Bn_; }
    const IntervalVector& a() const { return a_; }
    const IntervalVector& b() const { return b_; }
    const IntervalVector& cf() const { return cf_; }
    const IntervalVector& cn() const { return cn_; }

    // Number of coefficient cells across all eight blocks.
    std::size_t entry_count() const;

    friend bool operator==(const IlpData&, const IlpData&) = default;

private:
    IntervalMatrix Af_, An_, Bf_, Bn_;
    IntervalVector a_, b_, cf_, cn_;
};

// One real realization of every block of an IlpData.
struct Scenario {
    Matrix Af, An, Bf, Bn;
    RationalVector a, b, cf, cn;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Point {
    RationalVector xf;
    RationalVector xn;

    friend bool operator==(const Point&, const Point&) = default;
};

using SignVector = std::vector<std::int8_t>;

// Scenario plus dual multipliers satisfying the strong duality system at x.
struct Witness {
    Scenario scenario;
    RationalVector yf;
    RationalVector yn;
    SignVector sigma;

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class VerdictTag { WeaklyOptimal, NotWeaklyOptimal, NotWeaklyFeasible };

struct Verdict {
    VerdictTag tag = VerdictTag::NotWeaklyOptimal;
    std::optional<Witness> witness; // present iff tag == WeaklyOptimal
};

std::string_view to_string(VerdictTag tag);

// Throws DimensionError when s does not have the shapes of data.
bool scenario_contains(const IlpData& data, const Scenario& s);

// Throws DimensionError when x does not have lengths (m, n).
void check_point_shape(const IlpData& data, const Point& x);

Scenario midpoint_scenario(const IlpData& data);

// Evaluates row i of the equality (Af_i xf + An_i xn) or inequality block.
Rational row_value(const Matrix& free_part, const Matrix& nonneg_part, std::size_t row, const Point& x);

} // namespace wopt
