#pragma once

// Umbrella header for the pfd partial fraction decomposition library.

#include "pfd/rational.hpp"
#include "pfd/param_rational.hpp"
#include "pfd/poly.hpp"
#include "pfd/factor_basis.hpp"
#include "pfd/algext.hpp"
#include "pfd/trace.hpp"
#include "pfd/decompose.hpp"
#include "pfd/expr.hpp"
#include "pfd/render.hpp"
#include "pfd/bench.hpp"
