#pragma once

#include <string>

#include "ellipsoid/semiaxes.hpp"

namespace ellipsoid {

// JSON schema (field names are part of the interface):
//   {"kind": "explicit",    "values": [1.0, 0.5, ...]}
//   {"kind": "finite_dim",  "d": 4, "value": 1.0}
//   {"kind": "exponential", "c": 1.0}
//   {"kind": "exp_n_log_n", "c": 1.0}
//   {"kind": "polynomial",  "c": 1.0, "alpha": 1.0}
//   {"kind": "poly_log",    "c": 1.0, "alpha": 1.0, "beta": 0.5}
//   {"kind": "double_exp",  "c0": 1.0, "c": 1.0, "alpha": 1.0}
//   {"kind": "sobolev_box", "lengths": [1.0, 1.0], "k": 1}
//   {"kind": "scaled",      "lambda": 2.0, "inner": {...}}
// Optional on any kind: "cap" (axis budget), "elasticity_index" (number or "inf").
SemiAxisModel model_from_json(const std::string& text);

std::string model_to_json(const SemiAxisModel& model);

// One-line descriptor, e.g. polynomial(c=1,alpha=2), for report headers.
std::string model_description(const SemiAxisModel& model);

}  // namespace ellipsoid
