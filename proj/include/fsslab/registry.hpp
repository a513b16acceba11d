#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsslab/hyperelastic.hpp"
#include "fsslab/hypoelastic.hpp"

namespace fss {

// A constitutive model resolved from its command-line name.
struct ParsedModel {
  enum class Category { Hyperelastic, Hypoelastic };

  Category category = Category::Hyperelastic;
  HyperelasticModel hyper;
  RateKind rate;  // hypoelastic only
  std::string name;
};

// Model names:
//   hyperelastic: hlih-h, hlih-p, hlih-m, hlih:<scale-name>, ogden-a,
//                 ogden-b, obi:<r>, mr:<mu1>,<mu2>
//   hypoelastic:  hypo-zj, hypo-gn, hypo-gs, hypo-log, hypo-a, hypo-b
// mu and lambda set the Lame parameters; for mr:<mu1>,<mu2> the split is
// taken literally and mu is ignored.
ParsedModel parse_model(std::string_view name, double mu = 1.0,
                        double lambda = 0.0);

// "lfss", "rfss" or "simple-shear".
ShearMode parse_mode(std::string_view name);
std::string mode_name(ShearMode mode);

// Comma-separated model list (e.g. "hlih-h,ogden-a").
std::vector<std::string> split_model_list(std::string_view names);

}  // namespace fss
