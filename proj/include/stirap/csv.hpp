#pragma once

#include <ostream>
#include <string>

#include "stirap/diagnostics.hpp"
#include "stirap/propagator.hpp"

namespace stirap {

/// Shortest-round-trip-safe text for a double: %.17g semantics.
std::string format_double(double v);

/// t,re_c1,im_c1,...,re_cN,im_cN,p1,...,pN
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// t,lambda1..lambdaN,theta_dot
void write_spectrum_csv(std::ostream& os, const SpectrumSeries& series);

}  // namespace stirap
