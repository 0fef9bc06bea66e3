#ifndef EEE_RUN_CONFIG_HPP
#define EEE_RUN_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "eee/experiments.hpp"

namespace eee {

/// Parsed experiment description. [scenario], [noise] and [kernel] sections
/// feed every subcommand; [sweep] is required only by `sweep`.
struct RunConfig {
    ScenarioConfig scenario;
    KernelConfig kernel;
    std::optional<SweepSpec> sweep; // base filled with scenario
};

/// Parses the key-value config grammar (see README). Unknown sections or keys
/// are errors; messages carry origin and line number plus the offending key.
/// Parsing does not validate cross-field invariants; call validate() on the
/// pieces before use.
RunConfig parse_run_config(std::string_view text, std::string_view origin);

RunConfig load_run_config(const std::filesystem::path& file);

} // namespace eee

#endif
