#ifndef FRACTEL_SCENARIO_HPP
#define FRACTEL_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fractel/telegraph.hpp"

namespace fractel {

enum class ExponentSpecKind { constant, affine, bump };
enum class ForcingSpecKind { zero, constant, file };
enum class InitialSpecKind { zero, sine, file };

struct ExponentSpec {
  ExponentSpecKind kind = ExponentSpecKind::constant;
  double a = 2.0;  // constant value / affine & bump base
  double b = 0.0;  // affine slope / bump amplitude
};

struct ForcingSpec {
  ForcingSpecKind kind = ForcingSpecKind::zero;
  double value = 0.0;
  std::string file;
};

struct InitialSpec {
  InitialSpecKind kind = InitialSpecKind::zero;
  int mode = 1;
  double amplitude = 1.0;
  std::string file;
};

/// Flat key=value scenario description. Parsing and canonical serialization
/// round-trip to an equivalent config.
struct ScenarioConfig {
  double L = 1.0;
  Eigen::Index N = 101;
  double T = 1.0;
  double dt = 0.0;  // 0 = stability-capped
  double epsilon = 1.0;
  double alpha = 0.75;
  double beta = 1.0;
  PsiKind psi_kind = PsiKind::identity;
  double psi_param = 0.0;
  ExponentSpec p;
  ForcingSpec g;
  InitialSpec u0;
  InitialSpec u1;
  std::uint64_t seed = 1;

  bool operator==(const ScenarioConfig& other) const;
};

/// Throws ScenarioParseError with the offending line/key in the message.
struct ScenarioParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);
std::string serialize_scenario(const ScenarioConfig& config);

/// Materializes grid, exponent field, forcing and initial data.
ProblemSetup build_setup(const ScenarioConfig& config);

struct BuiltinScenario {
  std::string name;
  std::string summary;
  ScenarioConfig config;
};

const std::vector<BuiltinScenario>& builtin_scenarios();
std::optional<ScenarioConfig> find_builtin(const std::string& name);

}  // namespace fractel

#endif
