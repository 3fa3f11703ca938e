#include "netrisk/charfn.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "netrisk/errors.hpp"
#include "netrisk/hilbert.hpp"
#include "netrisk/quadrature.hpp"
#include "netrisk/special.hpp"

namespace netrisk {
namespace {

constexpr cplx kI{0.0, 1.0};

double sinc(double x) {
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// (1 - cos x) / x, the Hilbert partner of sinc.
double cosc(double x) {
  if (std::fabs(x) < 1e-4) {
    const double x2 = x * x;
    return x / 2.0 - x * x2 / 24.0;
  }
  return 2.0 * std::sin(0.5 * x) * std::sin(0.5 * x) / x;
}

bool is_integer(double x) { return x == std::floor(x) && x < 1e6; }

CharFn laplace_cf(const LaplaceSym& d) {
  const double b = d.scale;
  Structure s;
  s.rational = RationalForm(1.0 / (b * b), {1.0}, {{cplx(0.0, 1.0 / b), 1}, {cplx(0.0, -1.0 / b), 1}});
  s.even_real = true;
  return CharFn([b](double t) { return cplx(1.0 / (1.0 + b * b * t * t), 0.0); }, std::move(s), 0.0,
                "laplace");
}

CharFn normal_cf(const NormalSym& d) {
  const double v = d.sigma * d.sigma;
  Structure s;
  s.gaussian_variance = v;
  s.even_real = true;
  return CharFn([v](double t) { return cplx(std::exp(-0.5 * v * t * t), 0.0); }, std::move(s), 0.0,
                "normal");
}

CharFn uniform_cf(const UniformSym& d) {
  const double c = d.half_width;
  Structure s;
  s.even_real = true;
  s.even_hilbert = [c](double w) { return cosc(c * w); };
  s.even_hilbert_slope = 0.5 * c;
  return CharFn([c](double t) { return cplx(sinc(c * t), 0.0); }, std::move(s), 0.0, "uniform");
}

CharFn gamma_cf(double shape, double scale, const char* label) {
  Structure s;
  s.side = Side::Positive;
  if (is_integer(shape)) {
    const int n = static_cast<int>(shape);
    s.rational = RationalForm(std::pow(cplx(0.0, 1.0 / scale), n), {1.0}, {{cplx(0.0, -1.0 / scale), n}});
  }
  return CharFn([shape, scale](double t) { return std::pow(cplx(1.0, -scale * t), -shape); },
                std::move(s), shape * scale, label);
}

}  // namespace

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::RationalPoles: return "rational";
    case StructureKind::GaussianEven: return "gaussian";
    case StructureKind::OneSidedPositive: return "one-sided-positive";
    case StructureKind::OneSidedNegative: return "one-sided-negative";
    case StructureKind::EvenReal: return "even-real";
    case StructureKind::Generic: return "generic";
  }
  return "generic";
}

StructureKind Structure::kind() const {
  if (rational && rational->decays()) return StructureKind::RationalPoles;
  if (gaussian_variance) return StructureKind::GaussianEven;
  if (side == Side::Positive) return StructureKind::OneSidedPositive;
  if (side == Side::Negative) return StructureKind::OneSidedNegative;
  if (even_real) return StructureKind::EvenReal;
  return StructureKind::Generic;
}

CharFn::CharFn(Evaluator evaluator, Structure structure, std::optional<double> mean, std::string label)
    : evaluator_(std::move(evaluator)),
      structure_(std::move(structure)),
      mean_(mean),
      label_(std::move(label)) {}

CharFn charfn_of(const DistributionSpec& spec) {
  validate(spec);
  struct Visitor {
    CharFn operator()(const NormalSym& d) const { return normal_cf(d); }
    CharFn operator()(const LaplaceSym& d) const { return laplace_cf(d); }
    CharFn operator()(const UniformSym& d) const { return uniform_cf(d); }
    CharFn operator()(const GammaDist& d) const { return gamma_cf(d.shape, d.scale, "gamma"); }
    CharFn operator()(const ExponentialDist& d) const {
      return gamma_cf(1.0, d.scale, "exponential");
    }
  };
  return std::visit(Visitor{}, spec);
}

CharFn cf_one() {
  Structure s;
  s.rational = RationalForm();
  s.gaussian_variance = 0.0;
  s.even_real = true;
  return CharFn([](double) { return cplx(1.0, 0.0); }, std::move(s), 0.0, "1");
}

CharFn cf_product(std::span<const CharFn> factors) {
  if (factors.empty()) return cf_one();
  if (factors.size() == 1) return factors.front();

  Structure s;
  bool all_rational = true;
  bool all_gaussian = true;
  bool all_even = true;
  bool all_mean = true;
  Side side = factors.front().structure().side;
  RationalForm rational;
  double variance = 0.0;
  double mean = 0.0;
  std::ostringstream label;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const CharFn& f = factors[i];
    const Structure& fs = f.structure();
    if (fs.rational) {
      rational = rational * *fs.rational;
    } else {
      all_rational = false;
    }
    if (fs.gaussian_variance) {
      variance += *fs.gaussian_variance;
    } else {
      all_gaussian = false;
    }
    all_even = all_even && fs.even_real;
    if (fs.side != side) side = Side::Both;
    if (f.known_mean()) {
      mean += *f.known_mean();
    } else {
      all_mean = false;
    }
    label << (i ? "*" : "") << f.label();
  }
  if (all_rational) s.rational = std::move(rational);
  if (all_gaussian) s.gaussian_variance = variance;
  s.even_real = all_even;
  s.side = side;

  std::vector<CharFn> copy(factors.begin(), factors.end());
  return CharFn(
      [copy = std::move(copy)](double t) {
        cplx value = 1.0;
        for (const auto& f : copy) value *= f(t);
        return value;
      },
      std::move(s), all_mean ? std::optional<double>(mean) : std::nullopt, label.str());
}

CharFn cf_power(const CharFn& f, int m) {
  if (m < 0) throw ValidationError("c.f. power must be non-negative");
  std::vector<CharFn> copies(static_cast<std::size_t>(m), f);
  CharFn out = cf_product(copies);
  if (m > 1) {
    return CharFn([f, m](double t) { return std::pow(f(t), m); }, out.structure(), out.known_mean(),
                  f.label() + "^" + std::to_string(m));
  }
  return out;
}

CharFn cf_negate(const CharFn& f) {
  Structure s = f.structure();
  if (s.rational) s.rational = s.rational->conjugated();
  if (s.side == Side::Positive) {
    s.side = Side::Negative;
  } else if (s.side == Side::Negative) {
    s.side = Side::Positive;
  }
  if (!s.even_real) {
    s.even_hilbert = nullptr;
    s.even_hilbert_slope.reset();
  }
  std::optional<double> mean;
  if (f.known_mean()) mean = -*f.known_mean();
  return CharFn([f](double t) { return std::conj(f(t)); }, std::move(s), mean, "neg(" + f.label() + ")");
}

CharFn pos_abs_cf(const CharFn& base) {
  const Structure& bs = base.structure();
  if (!bs.even_real) throw ValidationError("absolute-value c.f. requires an even real base");

  Structure s;
  s.side = Side::Positive;
  const std::string label = "abs(" + base.label() + ")";

  if (bs.rational && bs.rational->decays()) {
    const RationalForm parts = bs.rational->principal_parts([](cplx a) { return a.imag() < 0.0; });
    const RationalForm lower(2.0 * parts.constant(), parts.numerator(), parts.poles());
    s.rational = lower;
    const double mean = (lower.derivative(0.0) / kI).real();
    return CharFn([lower](double t) { return lower(t); }, std::move(s), mean, label);
  }
  if (bs.gaussian_variance) {
    const double v = *bs.gaussian_variance;
    const double scale = std::sqrt(0.5 * v);
    return CharFn(
        [v, scale](double t) {
          return cplx(std::exp(-0.5 * v * t * t), 2.0 / std::sqrt(std::numbers::pi) * dawson(scale * t));
        },
        std::move(s), std::sqrt(2.0 * v / std::numbers::pi), label);
  }
  if (bs.even_hilbert) {
    auto partner = bs.even_hilbert;
    const std::optional<double> mean = bs.even_hilbert_slope;
    return CharFn([base, partner](double t) { return cplx(base(t).real(), partner(t)); }, std::move(s),
                  mean, label);
  }
  // No closed form: the imaginary part is a numeric principal value.
  return CharFn(
      [base](double t) { return cplx(base(t).real(), hilbert_numeric_pv(base, t, 1e-10).value.real()); },
      std::move(s), std::nullopt, label);
}

CharFn neg_abs_cf(const CharFn& base) {
  CharFn pos = pos_abs_cf(base);
  CharFn neg = cf_negate(pos);
  return CharFn([pos](double t) { return std::conj(pos(t)); }, neg.structure(), neg.known_mean(),
                "negabs(" + base.label() + ")");
}

double cf_mean(const CharFn& f) {
  if (f.known_mean()) return *f.known_mean();
  const Structure& s = f.structure();
  if (s.even_real) return 0.0;
  cplx moment;
  if (s.rational) {
    moment = s.rational->derivative(0.0) / kI;
  } else {
    const double steps[] = {1e-2, 5e-3, 2.5e-3};
    std::vector<cplx> values;
    for (double h : steps) values.push_back((f(h) - f(-h)) / (2.0 * h * kI));
    moment = quad::richardson_even(values).value;
  }
  if (std::fabs(moment.imag()) > 1e-9 * std::max(1.0, std::fabs(moment.real())))
    throw NumericError("moment extraction failed", std::fabs(moment.imag()));
  return moment.real();
}

}  // namespace netrisk
