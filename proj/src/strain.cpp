#include "fsslab/strain.hpp"

#include <cmath>
#include <stdexcept>

namespace fss {

namespace {

// Parameters this close to zero collapse to the exact log branch instead of
// evaluating (lambda^n - 1)/n into catastrophic cancellation.
constexpr double kParamZero = 1e-12;

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("ScaleFunction: stretch must be positive");
}

}  // namespace

ScaleFunction ScaleFunction::doyle_ericksen(double n) {
  if (!std::isfinite(n))
    throw std::invalid_argument("doyle_ericksen: non-finite parameter");
  if (std::abs(n) < kParamZero) n = 0.0;
  return ScaleFunction(Family::DoyleEricksen, n, "de:" + std::to_string(n));
}

ScaleFunction ScaleFunction::bazant_itskov(double r) {
  if (!std::isfinite(r) || r < 0.0)
    throw std::invalid_argument("bazant_itskov: parameter must be >= 0");
  if (r < kParamZero) r = 0.0;
  return ScaleFunction(Family::BazantItskov, r, "bi:" + std::to_string(r));
}

double ScaleFunction::value(double lambda) const {
  check_lambda(lambda);
  if (param_ == 0.0) return std::log(lambda);
  if (family_ == Family::DoyleEricksen)
    return (std::pow(lambda, param_) - 1.0) / param_;
  return (std::pow(lambda, param_) - std::pow(lambda, -param_)) /
         (2.0 * param_);
}

double ScaleFunction::derivative(double lambda) const {
  check_lambda(lambda);
  if (param_ == 0.0) return 1.0 / lambda;
  if (family_ == Family::DoyleEricksen) return std::pow(lambda, param_ - 1.0);
  return 0.5 * (std::pow(lambda, param_ - 1.0) +
                std::pow(lambda, -param_ - 1.0));
}

ScaleFunction parse_scale_function(std::string_view name) {
  if (name == "hencky") return ScaleFunction::doyle_ericksen(0.0);
  if (name == "pelzer") return ScaleFunction::bazant_itskov(1.0);
  if (name == "mooney") return ScaleFunction::bazant_itskov(2.0);
  if (name == "green-lagrange" || name == "finger")
    return ScaleFunction::doyle_ericksen(2.0);
  if (name == "biot") return ScaleFunction::doyle_ericksen(1.0);
  if (name == "hill" || name == "swainger")
    return ScaleFunction::doyle_ericksen(-1.0);
  if (name == "karni-reiner" || name == "almansi")
    return ScaleFunction::doyle_ericksen(-2.0);

  auto parse_param = [&](std::string_view text) {
    try {
      size_t used = 0;
      const std::string s(text);
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_scale_function: bad parameter in '" +
                                  std::string(text) + "'");
    }
  };

  if (name.rfind("de:", 0) == 0)
    return ScaleFunction::doyle_ericksen(parse_param(name.substr(3)));
  if (name.rfind("bi:", 0) == 0)
    return ScaleFunction::bazant_itskov(parse_param(name.substr(3)));

  throw std::invalid_argument("parse_scale_function: unknown scale function '" +
                              std::string(name) + "'");
}

SymTensor2 strain_from_stretch(const ScaleFunction& f,
                               const SymTensor2& stretch) {
  if (!(stretch.det() > 0.0 && stretch.trace() > 0.0))
    throw std::domain_error(
        "strain_from_stretch: stretch must be positive definite");
  return apply_isotropic(stretch, [&](double l) { return f.value(l); });
}

bool is_symmetrically_physical(const ScaleFunction& f, int samples) {
  if (samples < 1)
    throw std::invalid_argument("is_symmetrically_physical: samples < 1");
  for (int i = 0; i < samples; ++i) {
    const double t = samples > 1 ? double(i) / double(samples - 1) : 0.5;
    const double lambda = std::exp(-2.0 + 4.0 * t);
    if (std::abs(f.value(1.0 / lambda) + f.value(lambda)) > 1e-10)
      return false;
  }
  return true;
}

}  // namespace fss
