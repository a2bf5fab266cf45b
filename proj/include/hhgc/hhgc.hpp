#pragma once

// Umbrella header: geometric Hermite-Hadamard product-integral bounds,
// their assembly tables, and the special-means cross-checks.

#include "applications.hpp"
#include "bounds.hpp"
#include "functions.hpp"
#include "interval.hpp"
#include "kernels.hpp"
#include "means.hpp"
#include "quadrature.hpp"
#include "report_io.hpp"
