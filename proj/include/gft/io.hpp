#pragma once

// JSON and CSV encodings used by the command-line tool.
//   PowerSeries   {"order": N, "coeffs": [[re, im], ...]}
//   ClassSpec     {"tag": "...", "alpha": .., "A": [re, im], "B": [re, im],
//                  "beta": .., "k": .., "gamma": .., "delta": ..}  (irrelevant fields omitted)
//   RadiusReport  one object per pair; CSV rows use report_csv_header().

#include <string>

#include "vendor_json.hpp"

#include "gft/families.hpp"
#include "gft/series.hpp"
#include "gft/verify.hpp"

namespace gft {

nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassSpec& spec);
ClassSpec class_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RadiusReport& report);

/// theorem,alpha,A_re,A_im,B_re,B_im,gamma,beta,k,r_formula,r_estimate,margin,worst_angle,n_theta,order_N,seed
std::string report_csv_header();
std::string report_csv_row(const RadiusReport& report);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace gft
