#pragma once

// Fractal interpolation functions over interval partitions: the cardinal
// basis of continuous fixed points, collage-operator evaluation, and
// least-squares fitting of a target function through the collage bound.

#include "fif/affine_polynomial.hpp"
#include "fif/basis.hpp"
#include "fif/collage_fit.hpp"
#include "fif/fixed_point.hpp"
#include "fif/linalg.hpp"
#include "fif/oracle.hpp"
#include "fif/partition.hpp"
#include "fif/quadrature.hpp"
