// Command-line front end for the omchain library.
//
// Subcommands:
//   point      quantifiers of one operating point (entanglement, steering,
//              teleportation fidelity) at a chosen output sideband
//   sweep      named or custom parameter sweeps, CSV/JSON tables
//   stability  drift spectrum, stability margin and hybrid mode positions
//   benchmark  teleportation fidelity vs resource entanglement (two-mode
//              squeezed resources), closed form against the Wigner oracle
//   presets    list built-in parameter sets or dump one as a config file
//
// Exit codes: 0 success, 2 configuration/usage error, 3 numerical failure
// (unstable operating point, non-physical state, failed bracket, ...).
// Output is deterministic: re-running a command reproduces the bytes.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <omchain/omchain.hpp>

namespace
{

constexpr double two_pi = 6.283185307179586476925286766559;

struct CommonOptions
{
    std::string config_path;
    std::string preset_name;
    std::string out_path;
    std::string format = "csv";
    int jobs = 1;
};

// Filter / input options shared by point and sweep.
struct EvalOptions
{
    double center_hz = std::numeric_limits<double>::quiet_NaN();
    double sigma_f_hz = 0.0;
    double input_r = 0.0;
    bool no_rwa = false;
};

void add_common_flags(CLI::App *cmd, CommonOptions &opts, bool with_params)
{
    if (with_params)
    {
        CLI::Option *config =
            cmd->add_option("--config", opts.config_path, "JSON parameter file")
                ->check(CLI::ExistingFile);
        cmd->add_option("--preset", opts.preset_name,
                        "built-in parameter set (default: table1)")
            ->check(CLI::IsMember({"table1", "table2"}))
            ->excludes(config);
    }
    cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
    cmd->add_option("--format", opts.format, "output format (default: csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", opts.jobs, "worker threads (default: 1)")
        ->check(CLI::PositiveNumber);
}

void add_eval_flags(CLI::App *cmd, EvalOptions &opts)
{
    cmd->add_option("--center-hz", opts.center_hz,
                    "filter center frequency in Hz (default: the detuning, "
                    "i.e. the resonant output sideband)");
    cmd->add_option("--sigma-f-hz", opts.sigma_f_hz,
                    "Gaussian filter bandwidth in Hz (default: 0, narrow-band "
                    "limit)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--input-r", opts.input_r,
                    "squeezing parameter of the teleported input state "
                    "(default: 0, coherent input)");
    cmd->add_flag("--no-rwa", opts.no_rwa,
                  "retain the counter-rotating magnon coupling terms");
}

omchain::ChainParams base_params(const CommonOptions &opts)
{
    if (!opts.config_path.empty())
    {
        std::vector<std::string> warnings;
        const omchain::ChainParams params =
            omchain::load_config(opts.config_path, &warnings);
        for (const std::string &warning : warnings)
        {
            std::cerr << "warning: " << warning << '\n';
        }
        return params;
    }
    return omchain::preset(opts.preset_name.empty() ? "table1" : opts.preset_name);
}

void emit(const omchain::SweepTable &table, const CommonOptions &opts)
{
    std::ostringstream buffer;
    if (opts.format == "json")
    {
        omchain::write_json(table, buffer);
    }
    else
    {
        omchain::write_csv(table, buffer);
    }
    if (opts.out_path.empty())
    {
        std::cout << buffer.str();
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file)
    {
        throw omchain::ConfigError("cannot open output file '" + opts.out_path + "'");
    }
    file << buffer.str();
    if (!file)
    {
        throw omchain::ConfigError("failed writing output file '" + opts.out_path + "'");
    }
}

void write_text(const std::string &text, const CommonOptions &opts)
{
    if (opts.out_path.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file)
    {
        throw omchain::ConfigError("cannot open output file '" + opts.out_path + "'");
    }
    file << text;
    if (!file)
    {
        throw omchain::ConfigError("failed writing output file '" + opts.out_path + "'");
    }
}

omchain::SweepAxis parse_axis(const std::string &text)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true)
    {
        const std::size_t colon = text.find(':', start);
        if (colon == std::string::npos)
        {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }
    if (parts.size() != 5)
    {
        throw omchain::ConfigError(
            "axis spec '" + text + "' must be param:min:max:points:lin|log");
    }
    omchain::SweepAxis axis;
    axis.param = parts[0];
    try
    {
        axis.min = std::stod(parts[1]);
        axis.max = std::stod(parts[2]);
        axis.points = std::stoi(parts[3]);
    }
    catch (const std::exception &)
    {
        throw omchain::ConfigError("axis spec '" + text + "' has malformed numbers");
    }
    if (parts[4] == "lin")
    {
        axis.log_scale = false;
    }
    else if (parts[4] == "log")
    {
        axis.log_scale = true;
    }
    else
    {
        throw omchain::ConfigError("axis scale must be 'lin' or 'log', got '" +
                                   parts[4] + "'");
    }
    return axis;
}

int run_point(const CommonOptions &common, const EvalOptions &eval)
{
    const omchain::ChainParams params = base_params(common);
    const omchain::DriftModel model = omchain::build_drift(params, !eval.no_rwa);
    const omchain::StabilityReport report = omchain::stability(model);
    const double center =
        std::isnan(eval.center_hz) ? params.detuning_hz : eval.center_hz;

    omchain::SweepTable table;
    table.columns = {"center_hz",       "sigma_f_hz",      "stable",
                     "eta_minus",       "log_negativity",  "steering_a_to_c",
                     "steering_c_to_a", "fidelity"};
    std::vector<std::optional<double>> row(table.columns.size());
    row[0] = center;
    row[1] = eval.sigma_f_hz;
    row[2] = report.stable ? 1.0 : 0.0;
    if (report.stable)
    {
        const omchain::NoiseOccupations noise =
            omchain::NoiseOccupations::for_params(params);
        const omchain::OutputCovariance cov =
            omchain::filtered_covariance(model, noise, center, eval.sigma_f_hz);
        const omchain::BipartiteCov bip = omchain::reduce_bipartite(cov);
        const omchain::NegativityResult neg = omchain::log_negativity(bip);
        const omchain::SteeringResult steer = omchain::steering(bip);
        const omchain::InputState input =
            eval.input_r != 0.0 ? omchain::InputState::squeezed(eval.input_r)
                                : omchain::InputState::coherent();
        row[3] = neg.eta_minus;
        row[4] = neg.log_negativity;
        row[5] = steer.a_to_c;
        row[6] = steer.c_to_a;
        row[7] = omchain::teleport_output(bip, input).fidelity;
    }
    table.rows.push_back(std::move(row));
    emit(table, common);
    if (!report.stable)
    {
        throw omchain::NumericalError(
            "operating point is unstable (margin " +
            omchain::format_double(report.margin / two_pi) +
            " Hz); no steady state exists");
    }
    return 0;
}

int run_stability(const CommonOptions &common, bool no_rwa)
{
    const omchain::ChainParams params = base_params(common);
    const omchain::DriftModel model = omchain::build_drift(params, !no_rwa);
    const omchain::StabilityReport report = omchain::stability(model);
    std::array<std::complex<double>, 8> eigs = report.eigenvalues;
    std::sort(eigs.begin(), eigs.end(),
              [](const std::complex<double> &lhs, const std::complex<double> &rhs) {
                  if (lhs.real() != rhs.real())
                  {
                      return lhs.real() > rhs.real();
                  }
                  return lhs.imag() < rhs.imag();
              });
    const std::array<omchain::HybridMode, 3> hybrid =
        omchain::hybrid_mode_frequencies(params);

    omchain::SweepTable table;
    table.columns = {"stable", "margin_hz"};
    for (int k = 1; k <= 8; ++k)
    {
        table.columns.push_back("eig" + std::to_string(k) + "_re_hz");
        table.columns.push_back("eig" + std::to_string(k) + "_im_hz");
    }
    for (int k = 1; k <= 3; ++k)
    {
        table.columns.push_back("hybrid" + std::to_string(k) + "_freq_hz");
        table.columns.push_back("hybrid" + std::to_string(k) + "_width_hz");
    }
    std::vector<std::optional<double>> row;
    row.reserve(table.columns.size());
    row.emplace_back(report.stable ? 1.0 : 0.0);
    row.emplace_back(report.margin / two_pi);
    for (const std::complex<double> &eig : eigs)
    {
        row.emplace_back(eig.real() / two_pi);
        row.emplace_back(eig.imag() / two_pi);
    }
    for (const omchain::HybridMode &mode : hybrid)
    {
        row.emplace_back(mode.freq_hz);
        row.emplace_back(mode.linewidth_hz);
    }
    table.rows.push_back(std::move(row));
    emit(table, common);
    return 0;
}

int run_sweep_command(const CommonOptions &common, const EvalOptions &eval,
                      const std::string &recipe_name,
                      const std::vector<std::string> &axis_specs,
                      bool with_fidelity, bool with_steering)
{
    const omchain::Recipe recipe = omchain::recipe_from_string(recipe_name);
    omchain::SweepSpec spec;
    if (!common.config_path.empty() || !common.preset_name.empty())
    {
        spec = omchain::recipe_spec(recipe, base_params(common));
    }
    else
    {
        spec = omchain::recipe_spec(recipe);
    }
    if (!axis_specs.empty())
    {
        spec.axes.clear();
        for (const std::string &text : axis_specs)
        {
            spec.axes.push_back(parse_axis(text));
        }
    }
    if (!std::isnan(eval.center_hz))
    {
        spec.options.center_hz = eval.center_hz;
    }
    if (eval.sigma_f_hz != 0.0)
    {
        spec.options.sigma_f_hz = eval.sigma_f_hz;
    }
    if (eval.input_r != 0.0)
    {
        spec.options.input_r = eval.input_r;
    }
    if (eval.no_rwa)
    {
        spec.options.rotating_wave = false;
    }
    if (with_fidelity)
    {
        spec.options.with_fidelity = true;
    }
    if (with_steering)
    {
        spec.options.with_steering = true;
    }
    spec.options.jobs = common.jobs;
    emit(omchain::run_sweep(spec), common);
    return 0;
}

int run_benchmark(const CommonOptions &common)
{
    omchain::SweepSpec spec = omchain::recipe_spec(omchain::Recipe::benchmark);
    spec.options.jobs = common.jobs;
    emit(omchain::run_sweep(spec), common);
    return 0;
}

int run_presets(const CommonOptions &common)
{
    if (common.preset_name.empty())
    {
        write_text("table1\ntable2\n", common);
        return 0;
    }
    write_text(omchain::config_text(omchain::preset(common.preset_name)), common);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Steady-state output entanglement, Gaussian steering and "
                 "teleportation fidelity of a driven optical-phonon-magnon-"
                 "microwave chain"};
    app.require_subcommand(1);

    CommonOptions point_common;
    EvalOptions point_eval;
    CLI::App *point_cmd = app.add_subcommand(
        "point", "Evaluate one operating point (exit 3 if it is unstable)");
    add_common_flags(point_cmd, point_common, /*with_params=*/true);
    add_eval_flags(point_cmd, point_eval);

    CommonOptions sweep_common;
    EvalOptions sweep_eval;
    std::string recipe_name;
    std::vector<std::string> axis_specs;
    bool sweep_fidelity = false;
    bool sweep_steering = false;
    CLI::App *sweep_cmd =
        app.add_subcommand("sweep", "Run a named or custom parameter sweep");
    add_common_flags(sweep_cmd, sweep_common, /*with_params=*/true);
    add_eval_flags(sweep_cmd, sweep_eval);
    sweep_cmd->add_option("--recipe", recipe_name, "sweep recipe")
        ->required()
        ->check(CLI::IsMember(omchain::recipe_names()));
    sweep_cmd
        ->add_option("--axis", axis_specs,
                     "axis override 'param:min:max:points:lin|log' (repeat "
                     "for a second axis; replaces the recipe axes)")
        ->expected(1, 2);
    sweep_cmd->add_flag("--with-fidelity", sweep_fidelity,
                        "add the teleportation fidelity column");
    sweep_cmd->add_flag("--with-steering", sweep_steering,
                        "add the steering columns");

    CommonOptions stability_common;
    bool stability_no_rwa = false;
    CLI::App *stability_cmd = app.add_subcommand(
        "stability", "Report the drift spectrum, margin and hybrid modes");
    add_common_flags(stability_cmd, stability_common, /*with_params=*/true);
    stability_cmd->add_flag("--no-rwa", stability_no_rwa,
                            "retain the counter-rotating magnon coupling terms");

    CommonOptions benchmark_common;
    CLI::App *benchmark_cmd = app.add_subcommand(
        "benchmark",
        "Teleportation fidelity vs resource entanglement (closed form and "
        "Wigner-grid oracle)");
    add_common_flags(benchmark_cmd, benchmark_common, /*with_params=*/false);

    CommonOptions presets_common;
    CLI::App *presets_cmd = app.add_subcommand(
        "presets", "List built-in parameter sets, or dump one with --preset");
    presets_cmd
        ->add_option("--preset", presets_common.preset_name,
                     "parameter set to dump as a JSON config")
        ->check(CLI::IsMember({"table1", "table2"}));
    presets_cmd->add_option("--out", presets_common.out_path,
                            "output file (default: stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &error)
    {
        return app.exit(error);
    }
    catch (const CLI::CallForAllHelp &error)
    {
        return app.exit(error);
    }
    catch (const CLI::ParseError &error)
    {
        app.exit(error);
        return 2;
    }

    try
    {
        if (point_cmd->parsed())
        {
            return run_point(point_common, point_eval);
        }
        if (sweep_cmd->parsed())
        {
            return run_sweep_command(sweep_common, sweep_eval, recipe_name,
                                     axis_specs, sweep_fidelity, sweep_steering);
        }
        if (stability_cmd->parsed())
        {
            return run_stability(stability_common, stability_no_rwa);
        }
        if (benchmark_cmd->parsed())
        {
            return run_benchmark(benchmark_common);
        }
        if (presets_cmd->parsed())
        {
            return run_presets(presets_common);
        }
    }
    catch (const omchain::ConfigError &error)
    {
        std::cerr << "config error: " << error.what() << '\n';
        return 2;
    }
    catch (const omchain::NumericalError &error)
    {
        std::cerr << "numerical failure: " << error.what() << '\n';
        return 3;
    }
    catch (const std::exception &error)
    {
        std::cerr << "error: " << error.what() << '\n';
        return 3;
    }
    return 2;
}
