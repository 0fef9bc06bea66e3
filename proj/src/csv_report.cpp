#include "eee/csv_report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eee {

namespace {

std::string format_number(const char* fmt, double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, fmt, value);
    return buffer;
}

std::string_view rule_name(BandwidthRule rule)
{
    switch (rule) {
    case BandwidthRule::silverman_window: return "silverman";
    case BandwidthRule::silverman_global: return "silverman-global";
    case BandwidthRule::fixed: return "fixed";
    }
    return "?";
}

} // namespace

std::string format_sweep_csv(SweepAxis axis, const std::vector<SweepPoint>& points)
{
    std::string out = "axis,axis_value,method,trials,p_detect,p_fa,p_missed,seed\n";
    for (const SweepPoint& point : points) {
        // Rows within a point ordered by method name.
        std::vector<const TrialBatchStats*> rows;
        rows.reserve(point.stats.size());
        for (const TrialBatchStats& s : point.stats)
            rows.push_back(&s);
        std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
            return method_name(a->method) < method_name(b->method);
        });
        for (const TrialBatchStats* s : rows) {
            out += axis_name(axis);
            out += ',';
            out += format_number("%.6g", point.axis_value);
            out += ',';
            out += method_name(s->method);
            out += ',';
            out += std::to_string(s->trials);
            out += ',';
            out += format_number("%.6f", s->p_detect);
            out += ',';
            out += format_number("%.6f", s->p_false_alarm);
            out += ',';
            out += format_number("%.6f", s->p_missed);
            out += ',';
            out += std::to_string(point.point_seed);
            out += '\n';
        }
    }
    return out;
}

std::string format_spectrum_csv(const std::vector<double>& eigenvalues,
                                const std::vector<double>& profile,
                                const std::vector<double>& differences)
{
    if (profile.size() != eigenvalues.size() || differences.size() + 1 != eigenvalues.size())
        throw std::invalid_argument("spectrum dump arrays have inconsistent lengths");
    std::string out = "index,eigenvalue,f,delta_f\n";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_number("%.12g", eigenvalues[i]);
        out += ',';
        out += format_number("%.12g", profile[i]);
        out += ',';
        if (i < differences.size())
            out += format_number("%.12g", differences[i]);
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text)
{
    std::filesystem::path temp = path;
    temp += ".tmp";
    {
        std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
        if (!stream)
            throw std::runtime_error("cannot write to '" + temp.string() + "'");
        stream.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!stream)
            throw std::runtime_error("short write to '" + temp.string() + "'");
    }
    std::filesystem::rename(temp, path);
}

std::string format_manifest(const RunManifest& manifest)
{
    std::string methods;
    std::vector<std::string_view> names;
    names.reserve(manifest.methods.size());
    for (EnumMethod m : manifest.methods)
        names.push_back(method_name(m));
    std::sort(names.begin(), names.end());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            methods += ',';
        methods += names[i];
    }

    std::string out;
    out += "tool=eee_bench " + std::string(tool_version) + "\n";
    out += "schema=" + std::string(schema_revision) + "\n";
    out += "config=" + manifest.config_path + "\n";
    out += "output=" + manifest.output_path + "\n";
    out += "axis=" + std::string(axis_name(manifest.axis)) + "\n";
    out += "points=" + std::to_string(manifest.points) + "\n";
    out += "methods=" + methods + "\n";
    out += "trials_per_point=" + std::to_string(manifest.trials_per_point) + "\n";
    out += "master_seed=" + std::to_string(manifest.master_seed) + "\n";
    out += "workers=" + std::to_string(manifest.workers) + "\n";
    out += "bandwidth=" + std::string(rule_name(manifest.bandwidth_rule)) + "\n";
    out += "emitted_rows=" + std::to_string(manifest.emitted_rows) + "\n";
    return out;
}

} // namespace eee
