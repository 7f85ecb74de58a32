#pragma once

#include <string>

#include "fif/collage_fit.hpp"

namespace fifit {

/// Resolves a target specification to an evaluable function on [a, b].
/// Builtins: sin, cos, exp, abs, runge, poly:c0,c1,...  CSV targets
/// ("csv:FILE", two columns x,y, optional header) are extended to functions
/// by linear interpolation; the sample range must cover [a, b].
/// Throws std::runtime_error on unknown specs, parse failures, non-monotone
/// sample abscissae, or insufficient coverage.
fif::TargetFunction load_target(const std::string& spec, double a, double b);

}  // namespace fifit
