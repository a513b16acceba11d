#include "fsslab/registry.hpp"

#include <stdexcept>

namespace fss {

namespace {

double parse_number(std::string_view text, const char* what) {
  try {
    size_t used = 0;
    const std::string s(text);
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + " in '" +
                                std::string(text) + "'");
  }
}

}  // namespace

ParsedModel parse_model(std::string_view name, double mu, double lambda) {
  ParsedModel pm;
  pm.name = std::string(name);

  auto hyper = [&](HyperelasticModel m) {
    pm.category = ParsedModel::Category::Hyperelastic;
    pm.hyper = std::move(m);
    return pm;
  };
  auto hypo = [&](RateKind r) {
    pm.category = ParsedModel::Category::Hypoelastic;
    pm.rate = r;
    return pm;
  };

  if (name == "hlih-h")
    return hyper(HyperelasticModel::hlih(parse_scale_function("hencky"), mu,
                                         lambda));
  if (name == "hlih-p")
    return hyper(HyperelasticModel::hlih(parse_scale_function("pelzer"), mu,
                                         lambda));
  if (name == "hlih-m")
    return hyper(HyperelasticModel::hlih(parse_scale_function("mooney"), mu,
                                         lambda));
  if (name.rfind("hlih:", 0) == 0)
    return hyper(HyperelasticModel::hlih(parse_scale_function(name.substr(5)),
                                         mu, lambda));
  if (name == "ogden-a") return hyper(HyperelasticModel::ogden_a(mu, lambda));
  if (name == "ogden-b") return hyper(HyperelasticModel::ogden_b(mu, lambda));
  if (name.rfind("obi:", 0) == 0) {
    const double r = parse_number(name.substr(4), "obi exponent");
    if (r < 0.0) throw std::invalid_argument("obi exponent must be >= 0");
    return hyper(HyperelasticModel::obi(r, mu, lambda));
  }
  if (name.rfind("mr:", 0) == 0) {
    const std::string_view rest = name.substr(3);
    const size_t comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("mr model needs 'mr:<mu1>,<mu2>'");
    const double mu1 = parse_number(rest.substr(0, comma), "mr mu1");
    const double mu2 = parse_number(rest.substr(comma + 1), "mr mu2");
    return hyper(HyperelasticModel::mooney_rivlin(mu1, mu2, lambda));
  }

  if (name == "hypo-zj") return hypo(RateKind::corotational(SpinKind::ZJ));
  if (name == "hypo-gn") return hypo(RateKind::corotational(SpinKind::GN));
  if (name == "hypo-gs") return hypo(RateKind::corotational(SpinKind::GS));
  if (name == "hypo-log") return hypo(RateKind::corotational(SpinKind::Log));
  if (name == "hypo-a") return hypo(RateKind::upper_oldroyd());
  if (name == "hypo-b") return hypo(RateKind::lower_oldroyd());

  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

ShearMode parse_mode(std::string_view name) {
  if (name == "lfss") return ShearMode::LFSS;
  if (name == "rfss") return ShearMode::RFSS;
  if (name == "simple-shear") return ShearMode::SimpleShear;
  throw std::invalid_argument("unknown mode '" + std::string(name) +
                              "' (expected lfss, rfss or simple-shear)");
}

std::string mode_name(ShearMode mode) {
  switch (mode) {
    case ShearMode::LFSS:
      return "lfss";
    case ShearMode::RFSS:
      return "rfss";
    case ShearMode::SimpleShear:
      return "simple-shear";
  }
  return "?";
}

std::vector<std::string> split_model_list(std::string_view names) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= names.size()) {
    const size_t comma = names.find(',', start);
    const std::string_view piece = comma == std::string_view::npos
                                       ? names.substr(start)
                                       : names.substr(start, comma - start);
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  // "mr:<mu1>,<mu2>" carries a comma of its own; stitch its halves back.
  for (size_t i = 0; i + 1 < out.size();) {
    if (out[i].rfind("mr:", 0) == 0 &&
        out[i].find(',') == std::string::npos) {
      out[i] += "," + out[i + 1];
      out.erase(out.begin() + ptrdiff_t(i) + 1);
    } else {
      ++i;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty model list");
  return out;
}

}  // namespace fss
