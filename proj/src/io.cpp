#include "gft/io.hpp"

#include <charconv>
#include <cmath>

#include "gft/error.hpp"

namespace gft {

namespace {

nlohmann::json pair(Complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

Complex complex_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::InvalidParams, "complex values are [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const PowerSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Complex c : s.coeffs()) coeffs.push_back(pair(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  std::vector<Complex> c;
  for (const auto& item : j.at("coeffs")) c.push_back(complex_from(item));
  if (static_cast<int>(c.size()) > order + 1) {
    throw Error(Errc::InvalidParams, "more coefficients than order + 1");
  }
  return PowerSeries(std::move(c), order);
}

nlohmann::json to_json(const ClassSpec& spec) {
  nlohmann::json j{{"tag", std::string(to_string(spec.tag))}};
  switch (spec.tag) {
    case ClassTag::StarlikeOrder:
    case ClassTag::ConvexOrder: j["alpha"] = spec.alpha; break;
    case ClassTag::JanowskiStarlike:
    case ClassTag::JanowskiConvex:
      j["A"] = pair(spec.A);
      j["B"] = pair(spec.B);
      if (spec.classical_range) j["classical_range"] = true;
      break;
    case ClassTag::GBeta: j["beta"] = spec.beta; break;
    case ClassTag::BoundaryRotation: j["k"] = spec.k; break;
    case ClassTag::UniversalLIF: j["gamma"] = spec.gamma; break;
    case ClassTag::LIFOrder: j["delta"] = spec.delta; break;
    case ClassTag::Univalent: break;
  }
  return j;
}

ClassSpec class_spec_from_json(const nlohmann::json& j) {
  const auto tag = class_tag_from_string(j.at("tag").get<std::string>());
  if (!tag) throw Error(Errc::InvalidParams, "unknown class tag " + j.at("tag").dump());
  ClassSpec s{.tag = *tag};
  s.alpha = j.value("alpha", 0.0);
  if (j.contains("A")) s.A = complex_from(j.at("A"));
  if (j.contains("B")) s.B = complex_from(j.at("B"));
  s.beta = j.value("beta", 0.0);
  s.k = j.value("k", 0.0);
  s.gamma = j.value("gamma", 0.0);
  s.delta = j.value("delta", 0.0);
  s.classical_range = j.value("classical_range", false);
  s.validate();
  return s;
}

nlohmann::json to_json(const RadiusReport& r) {
  const RadiusQuery& q = r.query;
  nlohmann::json j{
      {"theorem", std::string(to_string(q.theorem))},
      {"alpha", q.alpha},
      {"A", pair(q.A)},
      {"B", pair(q.B)},
      {"gamma", q.gamma},
      {"beta", q.beta},
      {"k", q.k},
      {"r_formula", r.r_formula},
      {"branch", std::string(to_string(r.branch))},
      {"r_estimate", r.r_estimate},
      {"margin", r.margin},
      {"worst_angle", r.worst_angle},
      {"pair_label", r.pair_label},
      {"grid", {{"n_theta", r.grid.n_theta}, {"n_radial", r.grid.n_radial}, {"r_cap", r.grid.r_cap}, {"tol", r.grid.tol}}},
      {"r_cap_effective", r.r_cap},
      {"saturated", r.saturated},
      {"order_N", r.order},
      {"seed", r.seed},
      {"sound", r.sound()},
  };
  j["failure_radius"] = r.failure_radius ? nlohmann::json(*r.failure_radius) : nlohmann::json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string report_csv_header() {
  return "theorem,alpha,A_re,A_im,B_re,B_im,gamma,beta,k,r_formula,r_estimate,margin,worst_angle,n_theta,order_N,seed";
}

std::string report_csv_row(const RadiusReport& r) {
  const RadiusQuery& q = r.query;
  std::string out(to_string(q.theorem));
  for (const double x : {q.alpha, q.A.real(), q.A.imag(), q.B.real(), q.B.imag(), q.gamma, q.beta, q.k, r.r_formula,
                         r.r_estimate, r.margin, r.worst_angle}) {
    out += ',';
    out += format_double(x);
  }
  out += ',' + std::to_string(r.grid.n_theta) + ',' + std::to_string(r.order) + ',' + std::to_string(r.seed);
  return out;
}

}  // namespace gft
