#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qha/decomposition.hpp"
#include "qha/typed.hpp"

namespace qha {

struct Config {
  Field field;
  Quiver quiver;
  Params params;
  std::optional<std::vector<int>> Lambda;
  Tuple orbit_seed;
  Group group = Group::B;
  std::optional<Partition> partition;
  nlohmann::json echo;  // the input as read

  Mode mode() const { return group == Group::S ? Mode::A : Mode::B; }
  AlgebraPtr algebra() const;
};

// Throws ConfigError naming the offending key.
Config parse_config(const nlohmann::json& j);
Config load_config(const std::string& path);

struct RunOptions {
  int max_len = 4;
  int max_ydeg = 2;
  int samples = 200;
  unsigned seed = 1;
  int workers = 1;
};

struct Report {
  std::string suite;
  nlohmann::json params;
  std::vector<CheckCase> cases;
  nlohmann::json extra;  // suite-specific records

  bool pass() const;
  int failures() const;
  void normalise();  // sort cases by name, then subject
  nlohmann::json to_json() const;
  std::string to_text() const;
};

Report run_validate(const Config& c, const RunOptions& o);
Report run_relations(const Config& c, const RunOptions& o);
Report run_pbw(const Config& c, const RunOptions& o);
Report run_decompose(const Config& c, const RunOptions& o);
Report run_typed(const Config& c, const RunOptions& o);
Report run_cyclo(const Config& c, const RunOptions& o);
Report run_orbits(const Config& c, const RunOptions& o);

struct ClassifyRequest {
  std::uint64_t characteristic = 17;
  long q = 2;
  long p = 0;
  std::vector<long> xs;
  HeckeMode mode = HeckeMode::B;
};
Report run_classify(const ClassifyRequest& r);

// Worker count from QHA_WORKERS, default 1.
int workers_from_env();

}  // namespace qha
