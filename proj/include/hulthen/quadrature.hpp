#pragma once

#include <functional>

#include "hulthen/errors.hpp"

namespace hulthen {

struct QuadResult {
  double value = 0;
  double error = 0;   ///< estimated absolute error
  int intervals = 0;  ///< number of subintervals in the final partition
};

struct QuadOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

/// Global adaptive Gauss–Kronrod (7,15) on a finite interval. Nodes never touch
/// the endpoints, so integrable endpoint singularities are tolerated. Throws
/// QuadratureFailure if the requested accuracy is not reached within
/// max_intervals subdivisions.
QuadResult adaptive_quad(const std::function<double(double)>& f, double lo, double hi,
                         const QuadOptions& opts = {});

/// Value-only form; `tol` is used as both the absolute and relative target.
double integrate(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace hulthen
