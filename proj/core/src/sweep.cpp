#include "omchain/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "omchain/dynamics.hpp"
#include "omchain/entanglement.hpp"
#include "omchain/errors.hpp"
#include "omchain/scattering.hpp"
#include "omchain/teleport.hpp"

namespace omchain
{
namespace
{

struct RecipeName
{
    Recipe recipe;
    const char *name;
};

constexpr RecipeName recipe_names_table[] = {
    {Recipe::coop_plane, "coop_plane"},
    {Recipe::magnon_scan, "magnon_scan"},
    {Recipe::filter_scan, "filter_scan"},
    {Recipe::temperature_scan, "temperature_scan"},
    {Recipe::efficiency_scan, "efficiency_scan"},
    {Recipe::disk_plane, "disk_plane"},
    {Recipe::benchmark, "benchmark"},
    {Recipe::steering_scan, "steering_scan"},
    {Recipe::custom, "custom"},
};

std::vector<double> axis_values(const SweepAxis &axis)
{
    if (axis.points < 2)
    {
        throw ConfigError("axis '" + axis.param + "' needs at least 2 points");
    }
    if (axis.log_scale && !(axis.min > 0.0 && axis.max > 0.0))
    {
        throw ConfigError("axis '" + axis.param + "' is logarithmic but has "
                          "non-positive endpoints");
    }
    if (!(axis.min <= axis.max))
    {
        throw ConfigError("axis '" + axis.param + "' has min > max");
    }
    std::vector<double> values(static_cast<std::size_t>(axis.points));
    const double n = axis.points - 1;
    for (int k = 0; k < axis.points; ++k)
    {
        if (axis.log_scale)
        {
            values[static_cast<std::size_t>(k)] =
                axis.min * std::pow(axis.max / axis.min, k / n);
        }
        else
        {
            values[static_cast<std::size_t>(k)] =
                axis.min + (axis.max - axis.min) * (k / n);
        }
    }
    return values;
}

ModeSpec &mode_by_name(ChainParams &params, const std::string &name)
{
    if (name == "a") return params.a;
    if (name == "b") return params.b;
    if (name == "m") return params.m;
    if (name == "c") return params.c;
    throw ConfigError("unknown mode '" + name + "'");
}

void set_port_efficiency(ModeSpec &mode, double efficiency, const std::string &path)
{
    if (!(efficiency >= 0.0 && efficiency <= 1.0))
    {
        throw ConfigError(path + " must lie in [0, 1]");
    }
    // Redistributes the fixed total linewidth between the detected port and
    // the internal loss.
    const double total = mode.total_rate_hz();
    mode.kappa_out_hz = efficiency * total;
    mode.gamma_hz = (1.0 - efficiency) * total;
}

SweepTable benchmark_table(const SweepSpec &spec)
{
    // Teleportation fidelity against resource entanglement for two-mode
    // squeezed resources, at three input squeezing values, with both the
    // measurement-algebra fidelity and the Wigner-grid oracle.
    const std::vector<double> r_in_values = {0.0, 0.3, 0.6};
    std::vector<double> e_n_values(41);
    for (std::size_t k = 0; k < e_n_values.size(); ++k)
    {
        e_n_values[k] = 4.0 * static_cast<double>(k) / (e_n_values.size() - 1);
    }
    const std::vector<BenchmarkRow> rows = fidelity_vs_negativity_benchmark(
        r_in_values, e_n_values, /*with_oracle=*/true, spec.options.jobs);

    SweepTable table;
    table.columns = {"r_in", "E_N", "r_resource", "F_closed_form", "F_oracle"};
    table.rows.reserve(rows.size());
    for (const BenchmarkRow &row : rows)
    {
        table.rows.push_back({row.r_in, row.e_n, row.r_resource,
                              row.f_closed_form, row.f_oracle});
    }
    return table;
}

} // namespace

Recipe recipe_from_string(const std::string &name)
{
    for (const RecipeName &entry : recipe_names_table)
    {
        if (name == entry.name)
        {
            return entry.recipe;
        }
    }
    throw ConfigError("unknown recipe '" + name + "'");
}

std::string to_string(Recipe recipe)
{
    for (const RecipeName &entry : recipe_names_table)
    {
        if (recipe == entry.recipe)
        {
            return entry.name;
        }
    }
    return "custom";
}

std::vector<std::string> recipe_names()
{
    std::vector<std::string> names;
    for (const RecipeName &entry : recipe_names_table)
    {
        names.emplace_back(entry.name);
    }
    return names;
}

SweepSpec recipe_spec(Recipe recipe)
{
    ChainParams base = (recipe == Recipe::disk_plane) ? table2_preset() : table1_preset();
    if (recipe == Recipe::steering_scan || recipe == Recipe::temperature_scan)
    {
        // Steering and thermal robustness are studied under optimal
        // conditions: fully efficient ports (no internal loss on a or c).
        base.a.gamma_hz = 0.0;
        base.c.gamma_hz = 0.0;
    }
    return recipe_spec(recipe, base);
}

SweepSpec recipe_spec(Recipe recipe, const ChainParams &base)
{
    SweepSpec spec;
    spec.recipe = recipe;
    spec.base = base;

    switch (recipe)
    {
    case Recipe::coop_plane:
        spec.axes = {{"derived.C_ab", 0.1, 1e3, 61, true},
                     {"derived.C_mc", 0.1, 1e3, 61, true}};
        spec.options.with_boundary = true;
        break;
    case Recipe::magnon_scan:
        spec.axes = {{"drive.alpha", 14.0, 42.0, 3, false},
                     {"modes.m.freq_hz", 9.5e9, 10.5e9, 101, false}};
        break;
    case Recipe::filter_scan:
        spec.axes = {{"filter.sigma_hz", 1e3, 1e8, 11, true},
                     {"filter.center_hz", 9.2e9, 10.8e9, 41, false}};
        break;
    case Recipe::temperature_scan:
        spec.axes = {{"derived.n_th_uniform", 0.0, 300.0, 121, false}};
        spec.options.with_fidelity = true;
        break;
    case Recipe::efficiency_scan:
        spec.axes = {{"derived.eta_c", 0.35, 0.8, 3, false},
                     {"derived.eta_a", 0.5, 1.0, 51, false}};
        spec.options.with_fidelity = true;
        break;
    case Recipe::disk_plane:
        spec.axes = {{"derived.C_ab", 0.05, 5.0, 41, true},
                     {"derived.C_mc", 0.8, 80.0, 41, true}};
        spec.options.with_fidelity = true;
        spec.options.with_boundary = true;
        break;
    case Recipe::steering_scan:
        spec.axes = {{"derived.C_mc", 1.0, 1e3, 61, true}};
        spec.options.with_steering = true;
        break;
    case Recipe::benchmark:
    case Recipe::custom:
        break;
    }
    return spec;
}

void apply_parameter(ChainParams &params, SweepOptions &options,
                     const std::string &path, double value)
{
    // Raw config paths.
    if (path.rfind("modes.", 0) == 0)
    {
        const std::size_t dot = path.find('.', 6);
        if (dot != std::string::npos)
        {
            ModeSpec &mode = mode_by_name(params, path.substr(6, dot - 6));
            const std::string field = path.substr(dot + 1);
            if (field == "freq_hz") { mode.freq_hz = value; return; }
            if (field == "gamma_hz") { mode.gamma_hz = value; return; }
            if (field == "kappa_out_hz") { mode.kappa_out_hz = value; return; }
            if (field == "n_th") { mode.n_th = value; return; }
        }
        throw ConfigError("unknown parameter path '" + path + "'");
    }
    if (path == "couplings.g_ab_hz") { params.g_ab_hz = value; return; }
    if (path == "couplings.g_mb_hz") { params.g_mb_hz = value; return; }
    if (path == "couplings.g_mc_hz") { params.g_mc_hz = value; return; }
    if (path == "drive.alpha")
    {
        params.drive.alpha = value;
        params.drive.power_w.reset();
        return;
    }
    if (path == "drive.power_w")
    {
        params.drive.power_w = value;
        params.drive.alpha.reset();
        return;
    }
    if (path == "detuning_hz") { params.detuning_hz = value; return; }
    if (path == "temperature_k") { params.temperature_k = value; return; }

    // Derived handles: realize a requested dimensionless quantity by
    // adjusting the underlying drive or coupling at the current linewidths.
    if (path == "derived.C_ab")
    {
        if (!(params.g_ab_hz > 0.0))
        {
            throw ConfigError("derived.C_ab needs a nonzero bare coupling g_ab_hz");
        }
        if (!(value >= 0.0))
        {
            throw ConfigError("derived.C_ab must be non-negative");
        }
        const double g_eff = 0.5 * std::sqrt(value * params.a.total_rate_hz() *
                                             params.b.total_rate_hz());
        params.drive.alpha = g_eff / params.g_ab_hz;
        params.drive.power_w.reset();
        return;
    }
    if (path == "derived.C_mb")
    {
        if (!(value >= 0.0))
        {
            throw ConfigError("derived.C_mb must be non-negative");
        }
        params.g_mb_hz = 0.5 * std::sqrt(value * params.m.total_rate_hz() *
                                         params.b.total_rate_hz());
        return;
    }
    if (path == "derived.C_mc")
    {
        if (!(value >= 0.0))
        {
            throw ConfigError("derived.C_mc must be non-negative");
        }
        params.g_mc_hz = 0.5 * std::sqrt(value * params.m.total_rate_hz() *
                                         params.c.total_rate_hz());
        return;
    }
    if (path == "derived.eta_a")
    {
        set_port_efficiency(params.a, value, path);
        return;
    }
    if (path == "derived.eta_c")
    {
        set_port_efficiency(params.c, value, path);
        return;
    }
    if (path == "derived.n_th_uniform")
    {
        params.a.n_th = params.b.n_th = params.m.n_th = params.c.n_th = value;
        params.temperature_k.reset();
        return;
    }

    // Evaluation options.
    if (path == "filter.center_hz") { options.center_hz = value; return; }
    if (path == "filter.sigma_hz") { options.sigma_f_hz = value; return; }
    if (path == "input.r") { options.input_r = value; return; }

    throw ConfigError("unknown parameter path '" + path + "'");
}

std::vector<std::string> parameter_paths()
{
    std::vector<std::string> paths;
    for (const char *mode : {"a", "b", "m", "c"})
    {
        for (const char *field : {"freq_hz", "gamma_hz", "kappa_out_hz", "n_th"})
        {
            paths.push_back(std::string("modes.") + mode + "." + field);
        }
    }
    for (const char *path : {"couplings.g_ab_hz", "couplings.g_mb_hz", "couplings.g_mc_hz",
                             "drive.alpha", "drive.power_w", "detuning_hz", "temperature_k",
                             "derived.C_ab", "derived.C_mb", "derived.C_mc",
                             "derived.eta_a", "derived.eta_c", "derived.n_th_uniform",
                             "filter.center_hz", "filter.sigma_hz", "input.r"})
    {
        paths.emplace_back(path);
    }
    return paths;
}

SweepTable run_sweep(const SweepSpec &spec)
{
    if (spec.options.jobs < 1)
    {
        throw ConfigError("jobs must be at least 1");
    }
    if (spec.recipe == Recipe::benchmark)
    {
        return benchmark_table(spec);
    }
    if (spec.axes.empty() || spec.axes.size() > 2)
    {
        throw ConfigError("sweep needs 1 or 2 axes");
    }
    validate(spec.base);

    std::vector<std::vector<double>> grids;
    grids.reserve(spec.axes.size());
    std::size_t total = 1;
    for (const SweepAxis &axis : spec.axes)
    {
        grids.push_back(axis_values(axis));
        total *= grids.back().size();
    }

    SweepTable table;
    for (const SweepAxis &axis : spec.axes)
    {
        table.columns.push_back(axis.param);
    }
    table.columns.insert(table.columns.end(), {"stable", "eta_minus", "log_negativity"});
    if (spec.options.with_steering)
    {
        table.columns.insert(table.columns.end(), {"steering_a_to_c", "steering_c_to_a"});
    }
    if (spec.options.with_fidelity)
    {
        table.columns.push_back("fidelity");
    }
    if (spec.options.with_boundary)
    {
        table.columns.push_back("c_ab_boundary");
    }
    const std::size_t width = table.columns.size();
    table.rows.assign(total, std::vector<std::optional<double>>(width));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    const auto worker = [&]() {
        while (true)
        {
            const std::size_t index = next.fetch_add(1);
            if (index >= total)
            {
                return;
            }
            try
            {
                std::vector<double> coords(spec.axes.size());
                std::size_t remainder = index;
                for (std::size_t axis = spec.axes.size(); axis-- > 0;)
                {
                    const std::vector<double> &grid = grids[axis];
                    coords[axis] = grid[remainder % grid.size()];
                    remainder /= grid.size();
                }

                ChainParams params = spec.base;
                SweepOptions options = spec.options;
                for (std::size_t axis = 0; axis < spec.axes.size(); ++axis)
                {
                    apply_parameter(params, options, spec.axes[axis].param, coords[axis]);
                }

                std::vector<std::optional<double>> &row = table.rows[index];
                std::size_t col = 0;
                for (double coord : coords)
                {
                    row[col++] = coord;
                }

                const DriftModel model = build_drift(params, options.rotating_wave);
                const StabilityReport report = stability(model);
                row[col++] = report.stable ? 1.0 : 0.0;
                if (report.stable)
                {
                    const double center = std::isnan(options.center_hz)
                                              ? params.detuning_hz
                                              : options.center_hz;
                    const NoiseOccupations noise = NoiseOccupations::for_params(params);
                    const OutputCovariance cov =
                        filtered_covariance(model, noise, center, options.sigma_f_hz);
                    const BipartiteCov bip = reduce_bipartite(cov);
                    const NegativityResult neg = log_negativity(bip);
                    row[col++] = neg.eta_minus;
                    row[col++] = neg.log_negativity;
                    if (options.with_steering)
                    {
                        const SteeringResult steer = steering(bip);
                        row[col++] = steer.a_to_c;
                        row[col++] = steer.c_to_a;
                    }
                    if (options.with_fidelity)
                    {
                        const InputState input = options.input_r != 0.0
                                                     ? InputState::squeezed(options.input_r)
                                                     : InputState::coherent();
                        row[col++] = teleport_output(bip, input).fidelity;
                    }
                }
                else
                {
                    // Quantifiers stay empty: there is no steady state to
                    // report, and fabricating values would poison the maps.
                    col += 2;
                    if (options.with_steering)
                    {
                        col += 2;
                    }
                    if (options.with_fidelity)
                    {
                        col += 1;
                    }
                }
                if (options.with_boundary)
                {
                    const Cooperativities coops = cooperativities(params);
                    row[col++] = 1.0 + coops.c_mb / (1.0 + coops.c_mc);
                }
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    if (spec.options.jobs == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(spec.options.jobs));
        for (int t = 0; t < spec.options.jobs; ++t)
        {
            pool.emplace_back(worker);
        }
        for (std::thread &thread : pool)
        {
            thread.join();
        }
    }
    if (first_error)
    {
        std::rethrow_exception(first_error);
    }
    return table;
}

std::vector<BoundaryPoint> stability_boundary(const ChainParams &base,
                                              const std::vector<double> &c_mc_values,
                                              double rel_tol)
{
    if (!(rel_tol > 0.0))
    {
        throw ConfigError("stability boundary tolerance must be positive");
    }
    validate(base);
    const double c_mb = cooperativities(base).c_mb;

    // The critical cooperativity of the equal-linewidth chain does not
    // depend on the linewidth, while the stability margin scales with it.
    // Bisecting a realization with a generous linewidth therefore finds the
    // same boundary but keeps the margin far above the eigensolver noise
    // floor of the lab-frame drift (absolute, ~1e-5 rad/s).
    constexpr double boundary_rate_hz = 1e4;
    const auto margin_stable = [&](double c_ab, double c_mc) {
        const DriftModel model =
            build_drift(cooperativity_chain(c_ab, c_mb, c_mc, boundary_rate_hz));
        return stability(model).stable;
    };

    std::vector<BoundaryPoint> points;
    points.reserve(c_mc_values.size());
    for (const double c_mc : c_mc_values)
    {
        if (!(c_mc >= 0.0))
        {
            throw ConfigError("stability boundary needs non-negative C_mc values");
        }
        double lo = 1e-6;
        if (!margin_stable(lo, c_mc))
        {
            throw NumericalError("no stable bracket endpoint found for the "
                                 "stability boundary");
        }
        double hi = 2.0;
        int expansions = 0;
        while (margin_stable(hi, c_mc))
        {
            hi *= 2.0;
            if (++expansions > 60)
            {
                throw NumericalError("stability boundary bracket expansion failed "
                                     "(no unstable point below C_ab = 2^61)");
            }
        }
        while ((hi - lo) > rel_tol * hi)
        {
            const double mid = 0.5 * (lo + hi);
            if (margin_stable(mid, c_mc))
            {
                lo = mid;
            }
            else
            {
                hi = mid;
            }
        }
        points.push_back({c_mc, 0.5 * (lo + hi)});
    }
    return points;
}

} // namespace omchain
