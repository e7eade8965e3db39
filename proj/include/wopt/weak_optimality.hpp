#pragma once

#include "wopt/linsolve.hpp"
#include "wopt/model.hpp"

#include <stdexcept>
#include <string>

namespace wopt {

// Kernel variable indices of every primed quantity in a testing system.
// Primed rows are the interval data rows scaled by their dual multiplier:
// A' = diag(yf) A, a' = diag(yf) a, B' = diag(yn) B, b' = diag(yn) b.
struct TestingVariables {
    std::vector<std::size_t> yf, yn;
    DenseMatrix<std::size_t> Af, An, Bf, Bn;
    std::vector<std::size_t> a, b;
};

struct TestingSystem {
    SignVector sigma;
    LinearSystem sys;
    TestingVariables vars;
};

// k = 0 only. Throws DimensionError otherwise.
TestingSystem build_testing_system_ineq(const IlpData& data, const Point& x);

// Testing system for the sign orthant sigma of yf (|sigma| = k).
TestingSystem build_testing_system_orthant(const IlpData& data, const Point& x, const SignVector& sigma);

// Orthant number t in lexicographic order, +1 before -1 per coordinate.
SignVector orthant(std::size_t k, std::uint64_t t);

class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct DecideOptions {
    unsigned jobs = 1;
    // Solve every orthant and list the feasible ones (diagnostics only).
    bool exhaustive = false;
};

struct DecisionStats {
    std::size_t orthants_tried = 0;  // testing systems solved
    std::size_t row_completions = 0; // kernel solves spent on zero-multiplier rows
};

struct Decision {
    Verdict verdict;
    DecisionStats stats;
    std::vector<SignVector> feasible_orthants; // filled in exhaustive mode
};

// Orthants are tried in lexicographic order and the first feasible one wins,
// also when several jobs solve a batch of orthants concurrently.
Decision decide_weak_optimality(const IlpData& data, const Point& x, const DecideOptions& options = {});

// Rebuilds a scenario from a feasible testing-system assignment. Rows with a
// zero multiplier are completed independently. row_completions, when given,
// is incremented once per completed row.
Witness extract_witness(const TestingSystem& ts, const RationalVector& assignment, const IlpData& data,
                        const Point& x, std::size_t* row_completions = nullptr);

struct WitnessCheck {
    bool valid = false;
    std::string reason; // empty when valid
};

// Exact check of the strong duality system for (x, yf, yn, scenario), plus an
// independent optimality check of x on LP(scenario).
WitnessCheck check_witness(const IlpData& data, const Point& x, const Witness& w);

inline bool verify_witness(const IlpData& data, const Point& x, const Witness& w)
{
    return check_witness(data, x, w).valid;
}

} // namespace wopt
