#include "hulthen/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace hulthen {
namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights; the
// Gauss 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  double excess;  ///< error above the roundoff floor; bisection cannot remove the rest
  bool operator<(const Segment& other) const { return excess < other.excess; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double resabs = std::abs(kronrod);
  std::array<double, 7> fv1{}, fv2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    kronrod += kWgk[j] * (fv1[j] + fv2[j]);
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv1[j] + fv2[j]);
  }
  const double mean = 0.5 * kronrod;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  const double absh = std::abs(half);
  resabs *= absh;
  resasc *= absh;
  // QUADPACK error heuristic.
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double floor = 50.0 * eps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(floor, err);
  return {lo, hi, kronrod * half, err, std::max(0.0, err - floor)};
}

}  // namespace

QuadResult adaptive_quad(const std::function<double(double)>& f, double lo, double hi,
                         const QuadOptions& opts) {
  if (!(std::isfinite(lo) && std::isfinite(hi))) throw DomainError("adaptive_quad needs finite limits");
  if (lo == hi) return {0.0, 0.0, 0};
  if (lo > hi) {
    QuadResult r = adaptive_quad(f, hi, lo, opts);
    r.value = -r.value;
    return r;
  }
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, lo, hi);
  double total = first.value;
  double total_excess = first.excess;
  heap.push(first);
  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (total_excess > target()) {
    if (static_cast<int>(heap.size()) >= opts.max_intervals) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "adaptive_quad: no convergence after %d subintervals (error %.3e)",
                    opts.max_intervals, total_excess);
      throw QuadratureFailure(msg);
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw QuadratureFailure("adaptive_quad: subinterval reached machine resolution");
    }
    Segment left = gk15(f, worst.lo, mid);
    Segment right = gk15(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_excess += left.excess + right.excess - worst.excess;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to remove drift from the incremental updates.
  QuadResult out;
  out.intervals = static_cast<int>(heap.size());
  double sum = 0.0, err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = err;
  return out;
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
  return adaptive_quad(f, lo, hi, {tol, tol, 4000}).value;
}

}  // namespace hulthen
