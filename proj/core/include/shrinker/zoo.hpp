#pragma once

#include "shrinker/soliton.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shrinker {

using ParamMap = std::map<std::string, double>;

// Closed-form soliton data shipped with a zoo metric.
struct SolitonData {
  PotentialField f;
  double rho = 0.5;
};

struct ZooReference {
  std::string name;
  long chi = 0;
  long tau = 0;
  long b1 = 0;
  bool spin = true;
  bool simply_connected = true;
  bool einstein = false;
  bool kahler = false;
  bool compact = true;
  std::optional<double> volume; // closed form at the given parameters
  std::string note;
};

struct ZooBuild {
  ChartAtlas atlas;
  std::optional<SolitonData> soliton;
};

struct ZooParam {
  std::string key;
  double def = 1.0;
  std::string doc;
};

struct ZooEntry {
  std::string name;
  bool buildable = true;
  std::vector<ZooParam> params;
  std::string doc;
};

// Catalog order is fixed; names:
//   round_s4, fubini_study_cp2, product_s2xs2, flat_t4, gaussian_shrinker
// plus the existence-only records koiso_cao and wang_zhu.
const std::vector<ZooEntry>& zoo_entries();
const ZooEntry& zoo_entry(const std::string& name); // throws invalid_argument

// Builds the atlas (and soliton data where available) with defaults filled
// in for missing parameters.  Throws std::invalid_argument for unknown
// names, unknown parameter keys, or out-of-range values.
ZooBuild zoo_build(const std::string& name, const ParamMap& params = {});

ZooReference zoo_reference(const std::string& name, const ParamMap& params = {});

// Candidate assembled from the entry's soliton data.
// Throws std::invalid_argument when the entry ships none.
SolitonCandidate zoo_candidate(const std::string& name, const ParamMap& params = {});

} // namespace shrinker
