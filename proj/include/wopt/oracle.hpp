#pragma once

#include "wopt/model.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace wopt {

// Brute-force checkers for cross-validation. None of them goes through the
// testing-system machinery.

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 2'000'000;
inline constexpr std::size_t kDefaultOrthantCap = 12;

struct OracleResult {
    enum Tag { Certified, Inconclusive };
    Tag tag = Inconclusive;
    std::optional<Scenario> scenario; // present iff Certified
    std::uint64_t scenarios_checked = 0;
};

// lo, depth equally spaced interior points, hi. A degenerate interval gives
// its single value.
RationalVector grid_values(const Interval& range, std::size_t depth);

// Number of grid scenarios, saturating at UINT64_MAX.
std::uint64_t grid_size(const IlpData& data, std::size_t depth);

// Searches the scenario grid for one where x is optimal. One-sided: a
// certificate proves weak optimality, Inconclusive proves nothing. Throws
// BudgetExceeded when the grid has more than budget scenarios.
OracleResult corner_grid_oracle(const IlpData& data, const Point& x, std::size_t depth,
                                std::uint64_t budget = kDefaultOracleBudget);

// Whether Bf xf <= b holds for some xf, B in Bf, beta in b. Decided by one
// LP per sign orthant of xf (2^m of them). Throws std::invalid_argument when
// m exceeds cap.
bool weak_feasibility_system_bruteforce(const IntervalMatrix& Bf, const IntervalVector& b,
                                        std::size_t cap = kDefaultOrthantCap);

// Whether x is feasible for some scenario, decided by one joint LP over all
// constraint coefficients and right-hand sides at once.
bool weak_feasibility_point_bruteforce(const IlpData& data, const Point& x);

} // namespace wopt
