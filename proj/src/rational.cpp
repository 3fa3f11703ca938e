#include "netrisk/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netrisk/errors.hpp"

namespace netrisk {

namespace poly {

cplx eval(const std::vector<cplx>& p, cplx z) {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<cplx> derivative(const std::vector<cplx>& p) {
  if (p.size() <= 1) return {0.0};
  std::vector<cplx> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<double>(k);
  return d;
}

std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<cplx> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<cplx> add(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<cplx> shift(const std::vector<cplx>& p, cplx a) {
  // Repeated synthetic division (Horner shift).
  std::vector<cplx> c = p;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t j = n - 1; j > k; --j) c[j - 1] += a * c[j];
  return c;
}

std::vector<cplx> linear_power(cplx a, int n) {
  std::vector<cplx> out{1.0};
  for (int k = 0; k < n; ++k) out = multiply(out, {-a, 1.0});
  return out;
}

}  // namespace poly

namespace {

// Taylor coefficients of (h + d)^{-m} in h.
std::vector<cplx> inverse_power_series(cplx d, int m, std::size_t terms) {
  std::vector<cplx> out(terms);
  const cplx lead = std::pow(d, -m);
  double binom = 1.0;  // C(m+k-1, k)
  cplx ratio = 1.0;
  for (std::size_t k = 0; k < terms; ++k) {
    out[k] = lead * binom * ratio * (k % 2 == 0 ? 1.0 : -1.0);
    binom = binom * static_cast<double>(m + static_cast<int>(k)) / static_cast<double>(k + 1);
    ratio /= d;
  }
  return out;
}

std::vector<cplx> truncated_product(const std::vector<cplx>& a, const std::vector<cplx>& b,
                                    std::size_t terms) {
  std::vector<cplx> out(terms, 0.0);
  for (std::size_t i = 0; i < a.size() && i < terms; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) out[i + j] += a[i] * b[j];
  return out;
}

void trim(std::vector<cplx>& p) {
  double scale = 0.0;
  for (const auto& c : p) scale = std::max(scale, std::abs(c));
  while (p.size() > 1 && std::abs(p.back()) <= 1e-13 * scale) p.pop_back();
  if (p.empty()) p.push_back(0.0);
}

bool same_location(cplx a, cplx b) {
  return std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a));
}

}  // namespace

RationalForm::RationalForm(cplx constant, std::vector<cplx> numerator, std::vector<Pole> poles)
    : constant_(constant), numerator_(std::move(numerator)) {
  if (numerator_.empty()) numerator_.push_back(0.0);
  while (numerator_.size() > 1 && numerator_.back() == cplx{}) numerator_.pop_back();
  for (const Pole& p : poles) {
    if (p.order <= 0) throw ValidationError("pole order must be positive");
    auto hit = std::find_if(poles_.begin(), poles_.end(),
                            [&](const Pole& q) { return same_location(q.location, p.location); });
    if (hit != poles_.end()) {
      hit->order += p.order;
    } else {
      poles_.push_back(p);
    }
  }
}

int RationalForm::denominator_degree() const {
  int d = 0;
  for (const Pole& p : poles_) d += p.order;
  return d;
}

cplx RationalForm::operator()(cplx z) const {
  cplx value = constant_ * poly::eval(numerator_, z);
  for (const Pole& p : poles_) value /= std::pow(z - p.location, p.order);
  return value;
}

cplx RationalForm::derivative(cplx z) const {
  // f' = c [P' - P * sum n_j/(z - a_j)] / prod (z - a_j)^{n_j}
  const cplx pz = poly::eval(numerator_, z);
  cplx log_sum = 0.0;
  cplx denom = 1.0;
  for (const Pole& p : poles_) {
    log_sum += static_cast<double>(p.order) / (z - p.location);
    denom *= std::pow(z - p.location, p.order);
  }
  return constant_ * (poly::eval(poly::derivative(numerator_), z) - pz * log_sum) / denom;
}

RationalForm RationalForm::operator*(const RationalForm& other) const {
  std::vector<Pole> merged = poles_;
  merged.insert(merged.end(), other.poles_.begin(), other.poles_.end());
  return RationalForm(constant_ * other.constant_, poly::multiply(numerator_, other.numerator_),
                      std::move(merged));
}

RationalForm RationalForm::conjugated() const {
  std::vector<cplx> num(numerator_.size());
  std::transform(numerator_.begin(), numerator_.end(), num.begin(),
                 [](cplx c) { return std::conj(c); });
  std::vector<Pole> poles;
  for (const Pole& p : poles_) poles.push_back({std::conj(p.location), p.order});
  return RationalForm(std::conj(constant_), std::move(num), std::move(poles));
}

std::vector<cplx> RationalForm::regular_taylor(std::size_t index, std::size_t terms,
                                               const std::vector<cplx>& kernel) const {
  const cplx a = poles_.at(index).location;
  std::vector<cplx> series = poly::shift(numerator_, a);
  series.resize(std::min(series.size(), terms));
  for (auto& c : series) c *= constant_;
  for (std::size_t j = 0; j < poles_.size(); ++j) {
    if (j == index) continue;
    series = truncated_product(series,
                               inverse_power_series(a - poles_[j].location, poles_[j].order, terms),
                               terms);
  }
  series = truncated_product(series, kernel, terms);
  series.resize(terms, 0.0);
  return series;
}

RationalForm RationalForm::principal_parts(const std::function<bool(cplx)>& keep) const {
  std::vector<Pole> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t i = 0; i < poles_.size(); ++i) {
    if (keep(poles_[i].location)) {
      kept.push_back(poles_[i]);
      kept_index.push_back(i);
    }
  }
  std::vector<cplx> numerator{0.0};
  for (std::size_t s = 0; s < kept.size(); ++s) {
    const auto n = static_cast<std::size_t>(kept[s].order);
    const std::vector<cplx> g = regular_taylor(kept_index[s], n, {1.0});
    // sum_k g_k (z-a)^k  times the other kept factors
    std::vector<cplx> local{0.0};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<cplx> term = poly::linear_power(kept[s].location, static_cast<int>(k));
      for (auto& c : term) c *= g[k];
      local = poly::add(local, term);
    }
    for (std::size_t r = 0; r < kept.size(); ++r) {
      if (r == s) continue;
      local = poly::multiply(local, poly::linear_power(kept[r].location, kept[r].order));
    }
    numerator = poly::add(numerator, local);
  }
  trim(numerator);
  return RationalForm(1.0, std::move(numerator), std::move(kept));
}

std::string RationalForm::to_string() const {
  std::ostringstream os;
  os << constant_ << " * P[";
  for (std::size_t k = 0; k < numerator_.size(); ++k) os << (k ? ", " : "") << numerator_[k];
  os << "] /";
  for (const Pole& p : poles_) os << " (z - " << p.location << ")^" << p.order;
  return os.str();
}

}  // namespace netrisk
