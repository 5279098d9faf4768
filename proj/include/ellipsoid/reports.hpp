#pragma once

#include <string>
#include <vector>

#include "ellipsoid/asymptotics.hpp"
#include "ellipsoid/entropy.hpp"
#include "ellipsoid/integrals.hpp"
#include "ellipsoid/risk.hpp"
#include "ellipsoid/simulate.hpp"

namespace ellipsoid {

// Reports serialize every numeric field as the shortest decimal that
// round-trips to the same double, so emitted files re-parse losslessly.

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string dump() const;
  static Csv parse(const std::string& text);
};

std::string integral_to_json(const IntegralResult& r);
IntegralResult integral_from_json(const std::string& text);
Csv integrals_to_csv(const std::vector<IntegralResult>& rs);

std::string entropy_to_json(const EntropyBounds& b);
EntropyBounds entropy_from_json(const std::string& text);
Csv entropy_to_csv(const std::vector<EntropyBounds>& bs);

std::string pinsker_to_json(const PinskerSolution& s);
PinskerSolution pinsker_from_json(const std::string& text);
// Fixed columns: sigma, eps_sigma, R_L, bracket_low, b_sigma.
Csv risk_sweep_to_csv(const std::vector<PinskerSolution>& sols);

std::string mse_to_json(const MseEstimate& e);
MseEstimate mse_from_json(const std::string& text);

std::string sweep_to_json(const SweepReport& report);
Csv sweep_to_csv(const SweepReport& report);

}  // namespace ellipsoid
