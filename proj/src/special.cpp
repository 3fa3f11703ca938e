#include "netrisk/special.hpp"

#include <cmath>

namespace netrisk {
namespace {

// exp(-x^2) * sum_n x^(2n+1) / (n! (2n+1)): every term is positive, so the
// only rounding comes from the final scaling.
double dawson_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= x2 / n;
    const double contribution = term / (2 * n + 1);
    sum += contribution;
    if (contribution < 1e-17 * sum) break;
  }
  return std::exp(-x2) * sum;
}

// F(x) = x / (1 + 2x^2 - 4x^2 / (3 + 2x^2 - 8x^2 / (5 + 2x^2 - ...))),
// evaluated bottom-up. 80 levels reach full precision for x >= 4.
double dawson_continued_fraction(double x) {
  const double x2 = x * x;
  double tail = 0.0;
  for (int k = 80; k >= 1; --k) {
    tail = (4.0 * k * x2) / ((2.0 * k + 1.0) + 2.0 * x2 - tail);
  }
  return x / (1.0 + 2.0 * x2 - tail);
}

}  // namespace

double dawson(double x) {
  const double ax = std::fabs(x);
  if (ax < 1e-8) return x;  // F(x) = x - 2x^3/3 + ...
  if (ax > 1e7) return 0.5 / x;
  const double value = ax <= 4.0 ? dawson_series(ax) : dawson_continued_fraction(ax);
  return x < 0 ? -value : value;
}

}  // namespace netrisk
