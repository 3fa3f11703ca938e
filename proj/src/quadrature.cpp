#include "netrisk/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace netrisk::quad {
namespace {

using cplx = std::complex<double>;

// QUADPACK qk15 abscissae (descending) and weights.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights attached to kNodes[1], [3], [5], [7].
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(center);
  cplx kronrod = fc * kKronrod[7];
  cplx gauss = fc * kGauss[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const cplx pair = f(center - dx) + f(center + dx);
    kronrod += pair * kKronrod[j];
    if (j % 2 == 1) gauss += pair * kGauss[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result adaptive_gk15(const Integrand& f, double a, double b, double abs_tol,
                     double initial_width, std::size_t max_intervals) {
  Result out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::size_t pieces = 1;
  if (initial_width > 0.0) {
    pieces = static_cast<std::size_t>(std::ceil((b - a) / initial_width));
    pieces = std::clamp<std::size_t>(pieces, 1, max_intervals / 2 + 1);
  }

  std::priority_queue<Panel> queue;
  double total_error = 0.0;
  const double step = (b - a) / static_cast<double>(pieces);
  for (std::size_t i = 0; i < pieces; ++i) {
    const double lo = a + step * static_cast<double>(i);
    const double hi = (i + 1 == pieces) ? b : a + step * static_cast<double>(i + 1);
    Panel p = gk15(f, lo, hi);
    total_error += p.error;
    queue.push(p);
  }

  while (total_error > abs_tol && queue.size() < max_intervals) {
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    queue.pop();
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    // Periodically re-sum to stop drift in the running error total.
    if (queue.size() % 4096 == 0) {
      total_error = 0.0;
      auto copy = queue;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }

  // Neumaier summation of the panel values.
  cplx sum = 0.0;
  cplx compensation = 0.0;
  double err = 0.0;
  out.intervals = queue.size();
  while (!queue.empty()) {
    const Panel& p = queue.top();
    const cplx t = sum + p.value;
    const auto fix = [](double s, double v, double tt) {
      return std::abs(s) >= std::abs(v) ? (s - tt) + v : (v - tt) + s;
    };
    compensation += cplx(fix(sum.real(), p.value.real(), t.real()),
                         fix(sum.imag(), p.value.imag(), t.imag()));
    sum = t;
    err += p.error;
    queue.pop();
  }
  out.value = sum + compensation;
  out.error = err;
  out.converged = err <= abs_tol;
  return out;
}

Extrapolation wynn_epsilon(std::span<const cplx> partial) {
  const std::size_t n = partial.size();
  if (n == 0) return {0.0, std::numeric_limits<double>::infinity()};
  if (n < 3) {
    const double err = n == 2 ? std::abs(partial[1] - partial[0])
                              : std::numeric_limits<double>::infinity();
    return {partial.back(), err};
  }

  Extrapolation best{partial.back(), std::abs(partial[n - 1] - partial[n - 2])};
  std::vector<cplx> previous(n + 1, 0.0);  // epsilon_{-1}
  std::vector<cplx> current(partial.begin(), partial.end());
  for (std::size_t column = 1; current.size() >= 2; ++column) {
    std::vector<cplx> next(current.size() - 1);
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      const cplx diff = current[i + 1] - current[i];
      if (std::abs(diff) <= 1e-300) {
        // Sequence has converged to working precision.
        return {current[i + 1], std::min(best.error, std::abs(diff))};
      }
      next[i] = previous[i + 1] + 1.0 / diff;
    }
    if (column % 2 == 0 && next.size() >= 2) {
      const double err = std::abs(next.back() - next[next.size() - 2]);
      if (err < best.error) best = {next.back(), err};
    }
    previous = std::move(current);
    current = std::move(next);
  }
  return best;
}

Extrapolation richardson_even(std::span<const cplx> values) {
  std::vector<cplx> column(values.begin(), values.end());
  if (column.size() < 2) {
    return {column.empty() ? cplx{} : column.front(),
            std::numeric_limits<double>::infinity()};
  }
  double factor = 4.0;
  cplx last_best = column.back();
  double error = std::abs(column.back() - column[column.size() - 2]);
  while (column.size() >= 2) {
    std::vector<cplx> next(column.size() - 1);
    for (std::size_t i = 0; i + 1 < column.size(); ++i) {
      next[i] = (factor * column[i + 1] - column[i]) / (factor - 1.0);
    }
    error = std::abs(next.back() - column.back());
    last_best = next.back();
    column = std::move(next);
    factor *= 4.0;
  }
  return {last_best, error};
}

}  // namespace netrisk::quad
