#pragma once

#include "wopt/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wopt {

struct LinearRow {
    RationalVector coeffs;
    Rational rhs;
};

// Exact linear system over num_vars variables:
//   eq_rows:  coeffs . v == rhs
//   le_rows:  coeffs . v <= rhs
//   v_j >= lower_bounds[j] when present, otherwise v_j is free.
struct LinearSystem {
    std::size_t num_vars = 0;
    std::vector<LinearRow> eq_rows;
    std::vector<LinearRow> le_rows;
    std::vector<std::optional<Rational>> lower_bounds;
    std::vector<std::string> names;

    std::size_t add_variable(std::string name, std::optional<Rational> lower_bound = std::nullopt);
    void add_eq(RationalVector coeffs, Rational rhs);
    void add_le(RationalVector coeffs, Rational rhs);
    void add_ge(RationalVector coeffs, Rational rhs);

    // Zero coefficient row sized for the current variable count.
    RationalVector zero_row() const { return RationalVector(num_vars, 0); }

    // Throws DimensionError on length mismatch or duplicate labels.
    void validate() const;

    // Exact check of every row and bound.
    bool is_satisfied_by(const RationalVector& assignment) const;
};

enum class SolveStatus { Feasible, Infeasible, Unbounded };
enum class Sense { Minimize, Maximize };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    RationalVector assignment;      // present unless Infeasible
    std::optional<Rational> optimum; // present for bounded optimization calls

    bool feasible() const { return status == SolveStatus::Feasible; }
};

struct SolveOptions {
    // Dumps every tableau to this stream when set.
    std::ostream* trace = nullptr;
};

// Two-phase exact simplex with Bland's rule. Deterministic.
SolveResult solve_feasibility(const LinearSystem& sys, const SolveOptions& options = {});

// Unbounded problems yield SolveStatus::Unbounded with a feasible assignment.
SolveResult solve_lp(const LinearSystem& sys, const RationalVector& objective, Sense sense = Sense::Minimize,
                     const SolveOptions& options = {});

// True iff point is feasible and attains the optimum of min objective . v.
// Unbounded problems have no optimum, so the answer is false.
bool verify_optimal(const LinearSystem& sys, const RationalVector& objective, const RationalVector& point,
                    Sense sense = Sense::Minimize);

} // namespace wopt
