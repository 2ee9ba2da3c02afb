#include "omchain/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace omchain
{
namespace
{

using nlohmann::json;

double number_at(const json &node, const std::string &path)
{
    if (!node.is_number())
    {
        throw ConfigError(path + " must be a number");
    }
    return node.get<double>();
}

void reject_unknown_keys(const json &node, const std::string &path,
                         std::initializer_list<const char *> allowed)
{
    for (const auto &item : node.items())
    {
        bool known = false;
        for (const char *key : allowed)
        {
            if (item.key() == key)
            {
                known = true;
                break;
            }
        }
        if (!known)
        {
            throw ConfigError("unknown key " + path + "." + item.key());
        }
    }
}

ModeSpec parse_mode(const json &node, const std::string &path)
{
    if (!node.is_object())
    {
        throw ConfigError(path + " must be an object");
    }
    reject_unknown_keys(node, path, {"freq_hz", "gamma_hz", "kappa_out_hz", "n_th"});
    ModeSpec mode;
    if (!node.contains("freq_hz"))
    {
        throw ConfigError(path + ".freq_hz is required");
    }
    mode.freq_hz = number_at(node.at("freq_hz"), path + ".freq_hz");
    if (node.contains("gamma_hz"))
    {
        mode.gamma_hz = number_at(node.at("gamma_hz"), path + ".gamma_hz");
    }
    if (node.contains("kappa_out_hz"))
    {
        mode.kappa_out_hz = number_at(node.at("kappa_out_hz"), path + ".kappa_out_hz");
    }
    if (node.contains("n_th"))
    {
        mode.n_th = number_at(node.at("n_th"), path + ".n_th");
    }
    return mode;
}

ChainParams parse_config(const json &root, std::vector<std::string> *warnings)
{
    if (!root.is_object())
    {
        throw ConfigError("config root must be an object");
    }
    reject_unknown_keys(root, "config",
                        {"modes", "couplings", "drive", "detuning_hz", "temperature_k"});

    ChainParams params;

    if (!root.contains("modes"))
    {
        throw ConfigError("config.modes is required");
    }
    const json &modes = root.at("modes");
    if (!modes.is_object())
    {
        throw ConfigError("config.modes must be an object");
    }
    reject_unknown_keys(modes, "config.modes", {"a", "b", "m", "c"});
    for (const char *name : {"a", "b", "m", "c"})
    {
        if (!modes.contains(name))
        {
            throw ConfigError(std::string("config.modes.") + name + " is required");
        }
    }
    params.a = parse_mode(modes.at("a"), "config.modes.a");
    params.b = parse_mode(modes.at("b"), "config.modes.b");
    params.m = parse_mode(modes.at("m"), "config.modes.m");
    params.c = parse_mode(modes.at("c"), "config.modes.c");

    if (!root.contains("couplings"))
    {
        throw ConfigError("config.couplings is required");
    }
    const json &couplings = root.at("couplings");
    if (!couplings.is_object())
    {
        throw ConfigError("config.couplings must be an object");
    }
    reject_unknown_keys(couplings, "config.couplings", {"g_ab_hz", "g_mb_hz", "g_mc_hz"});
    for (const char *name : {"g_ab_hz", "g_mb_hz", "g_mc_hz"})
    {
        if (!couplings.contains(name))
        {
            throw ConfigError(std::string("config.couplings.") + name + " is required");
        }
    }
    params.g_ab_hz = number_at(couplings.at("g_ab_hz"), "config.couplings.g_ab_hz");
    params.g_mb_hz = number_at(couplings.at("g_mb_hz"), "config.couplings.g_mb_hz");
    params.g_mc_hz = number_at(couplings.at("g_mc_hz"), "config.couplings.g_mc_hz");

    if (!root.contains("drive"))
    {
        throw ConfigError("config.drive is required");
    }
    const json &drive = root.at("drive");
    if (!drive.is_object())
    {
        throw ConfigError("config.drive must be an object");
    }
    reject_unknown_keys(drive, "config.drive", {"power_w", "alpha"});
    if (drive.contains("power_w"))
    {
        params.drive.power_w = number_at(drive.at("power_w"), "config.drive.power_w");
    }
    if (drive.contains("alpha"))
    {
        params.drive.alpha = number_at(drive.at("alpha"), "config.drive.alpha");
    }

    if (!root.contains("detuning_hz"))
    {
        throw ConfigError("config.detuning_hz is required");
    }
    params.detuning_hz = number_at(root.at("detuning_hz"), "config.detuning_hz");

    if (root.contains("temperature_k"))
    {
        params.temperature_k = number_at(root.at("temperature_k"), "config.temperature_k");
        // Temperature takes precedence over any explicit occupations; record
        // a warning so the override is visible rather than silent.
        for (const char *name : {"a", "b", "m", "c"})
        {
            if (modes.at(name).contains("n_th") && warnings != nullptr)
            {
                warnings->push_back(
                    std::string("config.modes.") + name +
                    ".n_th is overridden by config.temperature_k (occupations "
                    "are recomputed from the Bose-Einstein distribution)");
            }
        }
    }

    validate(params);
    return params;
}

nlohmann::ordered_json mode_to_json(const ModeSpec &mode)
{
    nlohmann::ordered_json node = nlohmann::ordered_json::object();
    node["freq_hz"] = mode.freq_hz;
    node["gamma_hz"] = mode.gamma_hz;
    node["kappa_out_hz"] = mode.kappa_out_hz;
    if (mode.n_th != 0.0)
    {
        node["n_th"] = mode.n_th;
    }
    return node;
}

} // namespace

ChainParams load_config(const std::string &path, std::vector<std::string> *warnings)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try
    {
        return parse_config_text(buffer.str(), warnings);
    }
    catch (const ConfigError &err)
    {
        throw ConfigError(path + ": " + err.what());
    }
}

ChainParams parse_config_text(const std::string &json_text, std::vector<std::string> *warnings)
{
    json root;
    try
    {
        root = json::parse(json_text);
    }
    catch (const json::parse_error &err)
    {
        throw ConfigError(std::string("config is not valid JSON: ") + err.what());
    }
    return parse_config(root, warnings);
}

std::string config_text(const ChainParams &params)
{
    nlohmann::ordered_json root;
    nlohmann::ordered_json modes;
    modes["a"] = mode_to_json(params.a);
    modes["b"] = mode_to_json(params.b);
    modes["m"] = mode_to_json(params.m);
    modes["c"] = mode_to_json(params.c);
    root["modes"] = modes;

    nlohmann::ordered_json couplings;
    couplings["g_ab_hz"] = params.g_ab_hz;
    couplings["g_mb_hz"] = params.g_mb_hz;
    couplings["g_mc_hz"] = params.g_mc_hz;
    root["couplings"] = couplings;

    nlohmann::ordered_json drive = nlohmann::ordered_json::object();
    if (params.drive.power_w)
    {
        drive["power_w"] = *params.drive.power_w;
    }
    if (params.drive.alpha)
    {
        drive["alpha"] = *params.drive.alpha;
    }
    root["drive"] = drive;

    root["detuning_hz"] = params.detuning_hz;
    if (params.temperature_k)
    {
        root["temperature_k"] = *params.temperature_k;
    }
    return root.dump(2) + "\n";
}

} // namespace omchain
