#pragma once

#include "wopt/linsolve.hpp"
#include "wopt/model.hpp"

namespace wopt {

// LP(s) as a kernel system over (xf, xn): xf free, xn >= 0, equality rows
// A x = a and inequality rows B x >= b. Objective is (cf, cn), minimized.
struct ScenarioProgram {
    LinearSystem sys;
    RationalVector objective;
};

ScenarioProgram make_scenario_program(const Scenario& s);

RationalVector flatten(const Point& x);

// Exact primal feasibility of x for LP(s).
bool is_feasible_for(const Scenario& s, const Point& x);

} // namespace wopt
