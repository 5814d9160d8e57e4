#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hposet/characterize.hpp"

namespace hposet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitDisagreement = 3;

enum class OutputFormat { text, json };

struct RunConfig {
    /// invariants | decompose | macwilliams | characterize | enumerator | isometries
    std::string command;
    std::string poset_path;
    std::optional<std::string> code_path;
    /// Field order for commands without a code; must match the code file otherwise.
    std::optional<unsigned> q;
    std::uint64_t budget_group = Budget{}.max_group;
    std::uint64_t budget_space = Budget{}.max_space;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = Budget{}.seed;
    /// isometries: print the group order instead of the elements.
    bool count = false;
};

struct RunResult {
    int exit_code;
    std::string output;
};

/// Runs one command; every error is turned into an exit code and a message in `output`.
RunResult run(const RunConfig& config);

}  // namespace hposet
