#include "qclt/numerics.hpp"

#include <cmath>

namespace qclt {

namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> v) {
  if (v.size() <= 32) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum_impl(v.first(half)) + pairwise_sum_impl(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise_sum_impl(values); }
cplx pairwise_sum(std::span<const cplx> values) { return pairwise_sum_impl(values); }

double trapezoid(std::span<const double> values, double dx) {
  if (values.empty()) return 0.0;
  if (values.size() == 1) return 0.0;
  double s = pairwise_sum(values);
  s -= 0.5 * (values.front() + values.back());
  return s * dx;
}

double periodic_quadrature(std::span<const double> values, double dx) {
  return pairwise_sum(values) * dx;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  LineFit fit;
  fit.slope = (dn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dn;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / dn);
  return fit;
}

double quad2d(const std::function<double(double, double)>& f, double cx, double cy,
              double hx, double hy, std::size_t m) {
  const double dx = 2.0 * hx / static_cast<double>(m - 1);
  const double dy = 2.0 * hy / static_cast<double>(m - 1);
  std::vector<double> rows(m);
  std::vector<double> row(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = cx - hx + static_cast<double>(i) * dx;
    for (std::size_t j = 0; j < m; ++j) {
      const double y = cy - hy + static_cast<double>(j) * dy;
      row[j] = f(x, y);
    }
    rows[i] = trapezoid(row, dy);
  }
  return trapezoid(rows, dx);
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace qclt
