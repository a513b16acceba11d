#pragma once

#include <string>
#include <string_view>

#include "fsslab/tensor.hpp"

namespace fss {

// Generating scale function of a Hill-family strain tensor: a monotone
// f with f(1) = 0 and f'(1) = 1, applied to the principal stretches.
//
// Two one-parameter families cover every measure shipped here:
//   Doyle-Ericksen  f^(n) = (lambda^n - 1)/n          (log lambda at n = 0)
//   Bazant-Itskov   f_r   = (lambda^r - lambda^-r)/2r (log lambda at r = 0)
// The classical named measures are aliases: Green-Lagrange/Finger = f^(2),
// Biot = f^(1), Hencky = f^(0), Hill/Swainger = f^(-1), Karni-Reiner/Almansi
// = f^(-2), Pelzer = f_1, Mooney = f_2.
class ScaleFunction {
 public:
  enum class Family { DoyleEricksen, BazantItskov };

  static ScaleFunction doyle_ericksen(double n);
  static ScaleFunction bazant_itskov(double r);  // requires r >= 0

  double value(double lambda) const;
  double derivative(double lambda) const;
  double operator()(double lambda) const { return value(lambda); }

  Family family() const { return family_; }
  double parameter() const { return param_; }
  const std::string& name() const { return name_; }

 private:
  ScaleFunction(Family family, double param, std::string name)
      : family_(family), param_(param), name_(std::move(name)) {}

  Family family_;
  double param_;
  std::string name_;
};

// Resolves a scale-function name: "hencky", "pelzer", "mooney",
// "green-lagrange", "finger", "biot", "hill", "swainger", "karni-reiner",
// "almansi", or the parametric forms "de:<n>" and "bi:<r>".
ScaleFunction parse_scale_function(std::string_view name);

// sum_i f(lambda_i) P_i on the eigenprojections of the stretch tensor;
// Lagrangian strain when given U, Eulerian when given V.
SymTensor2 strain_from_stretch(const ScaleFunction& f,
                               const SymTensor2& stretch);

// A measure is symmetrically physical when f(1/lambda) = -f(lambda); tested
// on a log-spaced grid of lambda in [e^-2, e^2] to 1e-10.
bool is_symmetrically_physical(const ScaleFunction& f, int samples = 64);

}  // namespace fss
