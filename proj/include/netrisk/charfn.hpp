#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netrisk/distribution.hpp"
#include "netrisk/rational.hpp"

namespace netrisk {

enum class Side { Both, Positive, Negative };

/// Coarse label for a c.f.'s structure, used in reports and dispatch.
enum class StructureKind { RationalPoles, GaussianEven, OneSidedPositive, OneSidedNegative, EvenReal, Generic };

std::string to_string(StructureKind kind);

/// Metadata that lets the Hilbert engine pick a closed form. Several fields can
/// be set at once (a Laplace power is both rational and even-real).
struct Structure {
  std::optional<RationalForm> rational;
  /// f(t) = exp(-variance t^2 / 2)
  std::optional<double> gaussian_variance;
  bool even_real = false;
  Side side = Side::Both;
  /// Closed-form Hilbert transform of an even real c.f. and its slope at 0,
  /// when known but neither rational nor Gaussian (uniform).
  std::function<double(double)> even_hilbert;
  std::optional<double> even_hilbert_slope;

  StructureKind kind() const;
};

class CharFn {
 public:
  using Evaluator = std::function<cplx(double)>;

  CharFn(Evaluator evaluator, Structure structure, std::optional<double> mean, std::string label);

  cplx operator()(double t) const { return evaluator_(t); }
  const Structure& structure() const { return structure_; }
  std::optional<double> known_mean() const { return mean_; }
  const std::string& label() const { return label_; }

 private:
  Evaluator evaluator_;
  Structure structure_;
  std::optional<double> mean_;
  std::string label_;
};

CharFn charfn_of(const DistributionSpec& spec);
/// The constant function 1 (the law of Y = 0).
CharFn cf_one();
CharFn cf_product(std::span<const CharFn> factors);
CharFn cf_power(const CharFn& f, int m);
/// Law of -X, i.e. t -> f(-t) = conj f(t).
CharFn cf_negate(const CharFn& f);

/// C.f. of |X| for an even real base (the analytic signal f + iH{f}).
CharFn pos_abs_cf(const CharFn& base);
/// C.f. of -|X|, the conjugate of pos_abs_cf.
CharFn neg_abs_cf(const CharFn& base);

/// First moment from f'(0)/i. Throws NumericError if the imaginary residue of
/// the extracted moment does not vanish.
double cf_mean(const CharFn& f);

}  // namespace netrisk
