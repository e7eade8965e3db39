#pragma once

#include "wopt/model.hpp"

namespace wopt {

struct ReducedInstance {
    IlpData data;
    Point point;
};

// Maps the interval system Bf xf <= b (free xf, l rows, m columns) to
//   min b.xn  s.t.  Bf^T xn = 0, xn >= 0
// together with the candidate xn = 0. The candidate is weakly optimal iff
// the input system is weakly feasible.
ReducedInstance reduce_weak_feasibility_to_weak_optimality(const IntervalMatrix& Bf, const IntervalVector& b);

} // namespace wopt
