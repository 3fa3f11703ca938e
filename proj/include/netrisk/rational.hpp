#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace netrisk {

using cplx = std::complex<double>;

struct Pole {
  cplx location;
  int order = 1;
};

/// A rational function kept in factored form,
///   f(z) = constant * P(z) / prod_j (z - a_j)^{n_j},
/// with P given by ascending coefficients. Pole data is exact from the
/// distribution catalog, so no root finding ever happens here.
class RationalForm {
 public:
  RationalForm() : constant_(1.0), numerator_{1.0} {}
  RationalForm(cplx constant, std::vector<cplx> numerator, std::vector<Pole> poles);

  cplx constant() const { return constant_; }
  const std::vector<cplx>& numerator() const { return numerator_; }
  const std::vector<Pole>& poles() const { return poles_; }

  int numerator_degree() const { return static_cast<int>(numerator_.size()) - 1; }
  int denominator_degree() const;
  /// f(z) -> 0 as |z| -> infinity.
  bool decays() const { return numerator_degree() < denominator_degree(); }

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;

  RationalForm operator*(const RationalForm& other) const;
  /// z -> conj(f(conj z)); on the real line this is t -> f(-t) for a
  /// Hermitian f, i.e. the law of the negated variable.
  RationalForm conjugated() const;

  /// Taylor coefficients c_0..c_{terms-1} of (z - a)^n * f(z) * kernel(z)
  /// about the pole a = poles()[index], where the kernel's own Taylor
  /// coefficients about a are supplied.
  std::vector<cplx> regular_taylor(std::size_t index, std::size_t terms,
                                   const std::vector<cplx>& kernel) const;

  /// Sum of the principal parts at all poles accepted by `keep`, returned as a
  /// single rational function over those poles.
  RationalForm principal_parts(const std::function<bool(cplx)>& keep) const;

  std::string to_string() const;

 private:
  cplx constant_;
  std::vector<cplx> numerator_;
  std::vector<Pole> poles_;
};

namespace poly {
cplx eval(const std::vector<cplx>& p, cplx z);
std::vector<cplx> derivative(const std::vector<cplx>& p);
std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b);
std::vector<cplx> add(const std::vector<cplx>& a, const std::vector<cplx>& b);
/// Coefficients of p(a + h) in powers of h.
std::vector<cplx> shift(const std::vector<cplx>& p, cplx a);
/// (z - a)^n expanded.
std::vector<cplx> linear_power(cplx a, int n);
}  // namespace poly

}  // namespace netrisk
