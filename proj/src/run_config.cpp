#include "eee/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace eee {

namespace {

struct Cursor {
    std::string_view origin;
    int line = 0;
};

[[noreturn]] void fail(const Cursor& at, const std::string& message)
{
    throw std::invalid_argument(std::string(at.origin) + ":" + std::to_string(at.line) +
                                ": " + message);
}

std::string_view trim(std::string_view text)
{
    constexpr std::string_view whitespace = " \t\r\n\f\v";
    const auto begin = text.find_first_not_of(whitespace);
    if (begin == std::string_view::npos)
        return {};
    const auto end = text.find_last_not_of(whitespace);
    return text.substr(begin, end - begin + 1);
}

double parse_double(const Cursor& at, std::string_view key, std::string_view text)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(at, "key '" + std::string(key) + "' expects a number, got '" +
                     std::string(text) + "'");
    return value;
}

int parse_int(const Cursor& at, std::string_view key, std::string_view text)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(at, "key '" + std::string(key) + "' expects an integer, got '" +
                     std::string(text) + "'");
    return value;
}

std::uint64_t parse_seed(const Cursor& at, std::string_view key, std::string_view text)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(at, "key '" + std::string(key) + "' expects an unsigned integer, got '" +
                     std::string(text) + "'");
    return value;
}

std::vector<double> parse_list(const Cursor& at, std::string_view key, std::string_view text)
{
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        const std::string_view item = trim(text.substr(start, comma - start));
        if (item.empty())
            fail(at, "key '" + std::string(key) + "' has an empty list entry");
        values.push_back(parse_double(at, key, item));
        start = comma + 1;
        if (comma == text.size())
            break;
    }
    return values;
}

// Raw [noise] fields; resolved into a NoiseModel once the section is read.
struct NoiseSection {
    std::string model = "gaussian";
    double sigma2 = 1.0;
    std::optional<double> epsilon;
    std::optional<double> eta;
    Cursor at;
};

struct SweepSection {
    std::optional<SweepAxis> axis;
    std::vector<double> values;
    std::vector<EnumMethod> methods;
    int trials = 1000;
    std::uint64_t seed = 0;
    Cursor at;
};

NoiseModel resolve_noise(const NoiseSection& section)
{
    if (section.model == "gaussian") {
        if (section.epsilon || section.eta)
            fail(section.at, "keys 'epsilon'/'eta' are only valid for model = gaussian-mixture");
        return GaussianNoise{section.sigma2};
    }
    if (section.model == "gaussian-mixture") {
        GaussianMixtureNoise mixture;
        mixture.sigma2 = section.sigma2;
        mixture.epsilon = section.epsilon.value_or(0.0);
        mixture.eta = section.eta.value_or(1.0);
        return mixture;
    }
    fail(section.at, "key 'model' must be gaussian or gaussian-mixture, got '" +
                         section.model + "'");
}

} // namespace

RunConfig parse_run_config(std::string_view text, std::string_view origin)
{
    RunConfig config;
    NoiseSection noise;
    SweepSection sweep;
    bool has_sweep_section = false;

    std::string section;
    Cursor at{origin, 0};
    std::istringstream stream{std::string(text)};
    std::string raw_line;
    while (std::getline(stream, raw_line)) {
        ++at.line;
        const std::string_view line = trim(raw_line);
        if (line.empty() || line.front() == '#' || line.front() == ';')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(at, "malformed section header '" + std::string(line) + "'");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "scenario" && section != "noise" && section != "kernel" &&
                section != "sweep")
                fail(at, "unknown section '" + section + "'");
            if (section == "sweep") {
                has_sweep_section = true;
                sweep.at = at;
            }
            if (section == "noise")
                noise.at = at;
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(at, "expected 'key = value', got '" + std::string(line) + "'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            fail(at, "expected 'key = value', got '" + std::string(line) + "'");
        if (section.empty())
            fail(at, "key '" + key + "' appears before any [section]");

        if (section == "scenario") {
            auto& sc = config.scenario;
            if (key == "num_sensors") sc.num_sensors = parse_int(at, key, value);
            else if (key == "num_sources") sc.num_sources = parse_int(at, key, value);
            else if (key == "num_snapshots") sc.num_snapshots = parse_int(at, key, value);
            else if (key == "snr_db") sc.snr_db = parse_double(at, key, value);
            else if (key == "element_spacing") sc.element_spacing = parse_double(at, key, value);
            else if (key == "doas_deg") {
                sc.doas = parse_list(at, key, value);
                for (double& doa : sc.doas)
                    doa *= std::numbers::pi / 180.0;
            } else if (key == "source_powers") sc.source_powers = parse_list(at, key, value);
            else fail(at, "unknown key '" + key + "' in [scenario]");
        } else if (section == "noise") {
            if (key == "model") noise.model = std::string(value);
            else if (key == "sigma2") noise.sigma2 = parse_double(at, key, value);
            else if (key == "epsilon") noise.epsilon = parse_double(at, key, value);
            else if (key == "eta") noise.eta = parse_double(at, key, value);
            else fail(at, "unknown key '" + key + "' in [noise]");
        } else if (section == "kernel") {
            auto& kc = config.kernel;
            if (key == "type") {
                if (value != "gaussian")
                    fail(at, "key 'type' supports only 'gaussian', got '" +
                                 std::string(value) + "'");
                kc.kernel = KernelType::gaussian;
            } else if (key == "bandwidth") {
                if (value == "silverman")
                    kc.rule = BandwidthRule::silverman_window;
                else if (value == "silverman-global")
                    kc.rule = BandwidthRule::silverman_global;
                else {
                    kc.rule = BandwidthRule::fixed;
                    kc.fixed_h = parse_double(at, key, value);
                }
            } else if (key == "bandwidth_floor") {
                kc.bandwidth_floor = parse_double(at, key, value);
            } else fail(at, "unknown key '" + key + "' in [kernel]");
        } else { // sweep
            if (key == "axis") {
                const auto axis = parse_axis(value);
                if (!axis)
                    fail(at, "key 'axis' must be one of snapshots, snr-db, num-sources, "
                             "epsilon, eta; got '" + std::string(value) + "'");
                sweep.axis = *axis;
            } else if (key == "values") {
                sweep.values = parse_list(at, key, value);
            } else if (key == "methods") {
                sweep.methods.clear();
                std::size_t start = 0;
                const std::string list{value};
                while (start <= list.size()) {
                    std::size_t comma = list.find(',', start);
                    if (comma == std::string::npos)
                        comma = list.size();
                    const std::string_view item = trim(std::string_view(list).substr(start, comma - start));
                    const auto method = parse_method(item);
                    if (!method)
                        fail(at, "unknown method '" + std::string(item) +
                                     "' (expected eee-tail, eee-head, aic, mdl)");
                    sweep.methods.push_back(*method);
                    start = comma + 1;
                    if (comma == list.size())
                        break;
                }
            } else if (key == "trials") {
                sweep.trials = parse_int(at, key, value);
            } else if (key == "seed") {
                sweep.seed = parse_seed(at, key, value);
            } else fail(at, "unknown key '" + key + "' in [sweep]");
        }
    }

    config.scenario.noise = resolve_noise(noise);

    if (has_sweep_section) {
        if (!sweep.axis)
            fail(sweep.at, "section [sweep] is missing required key 'axis'");
        if (sweep.values.empty())
            fail(sweep.at, "section [sweep] is missing required key 'values'");
        SweepSpec spec;
        spec.base = config.scenario;
        spec.axis = *sweep.axis;
        spec.values = sweep.values;
        spec.methods = sweep.methods.empty()
                           ? std::vector<EnumMethod>{EnumMethod::eee_tail, EnumMethod::eee_head,
                                                     EnumMethod::aic, EnumMethod::mdl}
                           : sweep.methods;
        spec.trials_per_point = sweep.trials;
        spec.master_seed = sweep.seed;
        config.sweep = std::move(spec);
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path& file)
{
    std::ifstream stream(file);
    if (!stream)
        throw std::invalid_argument("cannot open config file '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_run_config(buffer.str(), file.string());
}

} // namespace eee
