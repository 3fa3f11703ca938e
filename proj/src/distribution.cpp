#include "netrisk/distribution.hpp"

#include <sstream>

namespace netrisk {
namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << value;
    throw ValidationError(os.str());
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

void validate(const DistributionSpec& spec) {
  std::visit(Overloaded{
                 [](const NormalSym& d) { require_positive(d.sigma, "normal sigma"); },
                 [](const LaplaceSym& d) { require_positive(d.scale, "laplace scale"); },
                 [](const UniformSym& d) { require_positive(d.half_width, "uniform half-width"); },
                 [](const GammaDist& d) {
                   require_positive(d.shape, "gamma shape");
                   require_positive(d.scale, "gamma scale");
                 },
                 [](const ExponentialDist& d) { require_positive(d.scale, "exponential scale"); },
             },
             spec);
}

bool is_two_sided(const DistributionSpec& spec) {
  return std::holds_alternative<NormalSym>(spec) || std::holds_alternative<LaplaceSym>(spec) ||
         std::holds_alternative<UniformSym>(spec);
}

std::string describe(const DistributionSpec& spec) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const NormalSym& d) { os << "normal(sigma=" << d.sigma << ")"; },
                 [&](const LaplaceSym& d) { os << "laplace(b=" << d.scale << ")"; },
                 [&](const UniformSym& d) { os << "uniform(c=" << d.half_width << ")"; },
                 [&](const GammaDist& d) {
                   os << "gamma(alpha=" << d.shape << ", beta=" << d.scale << ")";
                 },
                 [&](const ExponentialDist& d) { os << "exponential(theta=" << d.scale << ")"; },
             },
             spec);
  return os.str();
}

double mean_abs(const DistributionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const NormalSym& d) { return d.sigma * std::sqrt(2.0 / std::numbers::pi); },
          [](const LaplaceSym& d) { return d.scale; },
          [](const UniformSym& d) { return 0.5 * d.half_width; },
          [](const GammaDist& d) { return d.shape * d.scale; },
          [](const ExponentialDist& d) { return d.scale; },
      },
      spec);
}

double second_moment(const DistributionSpec& spec) {
  return std::visit(
      Overloaded{
          [](const NormalSym& d) { return d.sigma * d.sigma; },
          [](const LaplaceSym& d) { return 2.0 * d.scale * d.scale; },
          [](const UniformSym& d) { return d.half_width * d.half_width / 3.0; },
          [](const GammaDist& d) { return d.shape * (d.shape + 1.0) * d.scale * d.scale; },
          [](const ExponentialDist& d) { return 2.0 * d.scale * d.scale; },
      },
      spec);
}

}  // namespace netrisk
