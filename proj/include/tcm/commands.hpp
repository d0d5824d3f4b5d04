#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tcm/config.hpp"

namespace tcm {

using FileList = std::vector<std::filesystem::path>;

// One CSV per (path, alpha, epsilon), one SVG per (path, epsilon) when
// emit_svg is set, plus run_info.txt. fig1 requires family PSI.
FileList cmd_fig1(const RunConfig& config);

// As fig1 for family PHI, plus intervals.csv listing the detected
// zero-concurrence windows of every curve.
FileList cmd_fig2(const RunConfig& config);

// Family taken from the config; output layout as fig1 (PSI) or fig2 (PHI).
FileList cmd_sweep(const RunConfig& config);

struct VerifyOptions {
    std::optional<RunConfig> config;  // alpha/epsilon/T grid override
    bool inject_hamiltonian_fault = false;
    bool include_published = false;  // also score the published closed forms
};

// Prints `suite_name,max_residual,threshold,PASS|FAIL` per suite. Returns 0
// iff every suite passes.
int cmd_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace tcm
