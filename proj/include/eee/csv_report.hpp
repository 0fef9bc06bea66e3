#ifndef EEE_CSV_REPORT_HPP
#define EEE_CSV_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eee/experiments.hpp"
#include "eee/kernel_entropy.hpp"

namespace eee {

inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr std::string_view schema_revision = "1";

/// Sweep results as CSV text. Header
///   axis,axis_value,method,trials,p_detect,p_fa,p_missed,seed
/// UTF-8, LF endings, probabilities with 6 decimals, rows ordered by
/// (axis value position, method name).
std::string format_sweep_csv(SweepAxis axis, const std::vector<SweepPoint>& points);

/// Single-trial diagnostic dump: index,eigenvalue,f,delta_f (delta_f empty on
/// the last row).
std::string format_spectrum_csv(const std::vector<double>& eigenvalues,
                                const std::vector<double>& profile,
                                const std::vector<double>& differences);

/// Writes text to path via a sibling temp file and an atomic rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

struct RunManifest {
    std::string config_path;
    std::string output_path;
    SweepAxis axis = SweepAxis::snapshots;
    int points = 0;
    std::vector<EnumMethod> methods;
    int trials_per_point = 0;
    std::uint64_t master_seed = 0;
    int workers = 1;
    std::size_t emitted_rows = 0;
    BandwidthRule bandwidth_rule = BandwidthRule::silverman_window;
};

/// key=value lines, one per field, for diagnostics on stderr.
std::string format_manifest(const RunManifest& manifest);

} // namespace eee

#endif
