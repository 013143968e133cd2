#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace psindex {

/// Numerical thresholds shared by the coefficient-function and symbol layers.
struct NumericPolicy {
  double prune_tol = 1e-14;        // amplitudes below this are dropped
  double inversion_floor = 1e-10;  // min |f| (or |det g|) for inversion
  double inverse_tol = 1e-13;      // residual target for grid inversion
  int band_cap = 96;               // largest bandwidth an inverse may use
  double condition_limit = 1e8;    // grid max of |g| |g^-1|
};

/// Run configuration for the command-line driver. Every field has a default;
/// `parse_config` accepts `key = value` lines and rejects unknown keys.
struct Config {
  int depth = 4;
  NumericPolicy numeric;
  double oracle_tol = 1e-8;
  std::vector<int> oracle_modes{8, 12, 16, 20};
  std::string q_mode = "canonical";  // "canonical" or a path to a .sym file
  std::string format = "kv";         // "kv" or "text"
  unsigned long long seed = 7;
};

Config parse_config(std::string_view text);

/// Applies PSINDEX_SEED from the environment, if set, on top of `config`.
void apply_environment(Config& config);

std::vector<int> parse_int_list(std::string_view text);

}  // namespace psindex
