#ifndef OMCHAIN_SWEEP_HPP
#define OMCHAIN_SWEEP_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "omchain/model.hpp"

namespace omchain
{

// Named sweep recipes. Each produces the data behind one standard figure of
// the study; "custom" takes caller-provided axes.
enum class Recipe
{
    coop_plane,        // E_N over the (C_ab, C_mc) cooperativity plane, sphere set
    magnon_scan,       // E_N vs magnon frequency for several drive strengths
    filter_scan,       // E_N vs filter center and bandwidth
    temperature_scan,  // E_N and fidelity vs uniform bath occupation
    efficiency_scan,   // fidelity vs optical port efficiency at fixed totals
    disk_plane,        // E_N and fidelity over the disk-set cooperativity plane
    benchmark,         // teleportation fidelity vs resource entanglement (TMS)
    steering_scan,     // steering both ways and E_N vs magnon-microwave cooperativity
    custom,
};

Recipe recipe_from_string(const std::string &name);  // throws ConfigError
std::string to_string(Recipe recipe);
std::vector<std::string> recipe_names();

// One swept parameter. "param" is a settable path; see parameter_paths().
struct SweepAxis
{
    std::string param;
    double min = 0.0;
    double max = 0.0;
    int points = 2;
    bool log_scale = false;
};

// Evaluation options shared by all grid points.
struct SweepOptions
{
    // Filter center; NaN = use the base detuning (the resonant sideband).
    double center_hz = std::numeric_limits<double>::quiet_NaN();
    double sigma_f_hz = 0.0;  // filter bandwidth; 0 = narrow-band limit
    double input_r = 0.0;     // squeezing of the teleported input state
    bool rotating_wave = true;
    bool with_fidelity = false;
    bool with_steering = false;
    bool with_boundary = false;  // add the analytic instability threshold column
    int jobs = 1;
};

struct SweepSpec
{
    Recipe recipe = Recipe::custom;
    ChainParams base;
    std::vector<SweepAxis> axes;  // 1 or 2 axes
    SweepOptions options;
};

// The default axes, base preset and options of a named recipe.
SweepSpec recipe_spec(Recipe recipe);
SweepSpec recipe_spec(Recipe recipe, const ChainParams &base);

// Applies one swept value to a working copy of the parameters/options.
// Settable paths cover every config field plus derived handles:
//   modes.{a,b,m,c}.{freq_hz,gamma_hz,kappa_out_hz,n_th}
//   couplings.{g_ab_hz,g_mb_hz,g_mc_hz}
//   drive.{alpha,power_w}   detuning_hz   temperature_k
//   derived.C_ab   (sets drive.alpha to realize the cooperativity)
//   derived.C_mb   derived.C_mc   (set the bare couplings)
//   derived.eta_a  derived.eta_c  (port efficiency at fixed total linewidth)
//   derived.n_th_uniform           (same occupation on all four baths)
//   filter.center_hz  filter.sigma_hz   input.r
// Throws ConfigError on an unknown path.
void apply_parameter(ChainParams &params, SweepOptions &options,
                     const std::string &path, double value);

// The list of settable paths above (for diagnostics and validation).
std::vector<std::string> parameter_paths();

// Column-labelled numeric table. Missing values (quantifiers at unstable
// grid points) are empty optionals; they serialize as empty CSV cells /
// JSON nulls. Boolean columns carry 0/1.
struct SweepTable
{
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
};

// Runs a sweep: expands the axes (outer axis first, grid order independent
// of the worker count), evaluates every grid point, and returns the table.
// Columns: one per axis, then "stable", "eta_minus", "log_negativity",
// then the optional quantifier columns requested by the recipe/options.
// Unstable points keep their row with stable = 0 and empty quantifiers.
SweepTable run_sweep(const SweepSpec &spec);

// Critical optomechanical cooperativity: for each c_mc, bisection on c_ab of
// the drift stability margin in the idealized cooperativity realization
// (fixed c_mb taken from the base parameters). rel_tol is the bisection
// width. Throws NumericalError if a bracket cannot be established.
struct BoundaryPoint
{
    double c_mc = 0.0;
    double c_ab_critical = 0.0;
};

std::vector<BoundaryPoint> stability_boundary(const ChainParams &base,
                                              const std::vector<double> &c_mc_values,
                                              double rel_tol = 1e-6);

} // namespace omchain

#endif // OMCHAIN_SWEEP_HPP
