#ifndef OMCHAIN_CONFIG_HPP
#define OMCHAIN_CONFIG_HPP

#include <string>
#include <vector>

#include "omchain/model.hpp"

namespace omchain
{

// JSON config schema (all rates in Hz, ordinary frequencies):
//
// {
//   "modes": {
//     "a": {"freq_hz": ..., "gamma_hz": ..., "kappa_out_hz": ..., "n_th": ...},
//     "b": {...}, "m": {...}, "c": {...}
//   },
//   "couplings": {"g_ab_hz": ..., "g_mb_hz": ..., "g_mc_hz": ...},
//   "drive": {"alpha": ...} | {"power_w": ...},
//   "detuning_hz": ...,
//   "temperature_k": ...          (optional)
// }
//
// "n_th" and "temperature_k" are optional; unknown keys are rejected with a
// ConfigError naming the offending path.

// Parses and validates a config file. Throws ConfigError with the file path
// and JSON pointer of the first problem encountered. Non-fatal issues (e.g.
// temperature_k overriding explicit n_th values) are appended to *warnings
// when it is non-null.
ChainParams load_config(const std::string &path,
                        std::vector<std::string> *warnings = nullptr);

// Same, from an in-memory JSON string.
ChainParams parse_config_text(const std::string &json_text,
                              std::vector<std::string> *warnings = nullptr);

// Serializes params back to the schema above (keys in schema order, so the
// output is byte-stable).
std::string config_text(const ChainParams &params);

} // namespace omchain

#endif // OMCHAIN_CONFIG_HPP
