#pragma once

// Text configuration mirroring the CLI flags:
//
//   [detector.a] / [detector.b]   omega_t lambda width eta sigma alpha beta
//   [geometry]                    l_over_t t0_over_t theta placement
//   [sweep]                       preset axis min max steps observable models switching
//   [quadrature]                  abs_tol rel_tol max_subdivisions window
//
// alpha and beta take a real number or a [re, im] pair. Unknown keys are
// errors so typos do not silently fall back to defaults.

#include <string>

#include "udw/sweep.hpp"

namespace udw {

struct RunConfig {
    SweepPlan plan;
    QuadratureSpec spec;
};

/// With `allow_preset` false a preset key is ignored, so an explicit
/// command-line preset keeps precedence over the file.
void apply_config_text(RunConfig& cfg, const std::string& text, bool allow_preset = true);

/// Throws IoError when the file cannot be read.
void apply_config_file(RunConfig& cfg, const std::string& path, bool allow_preset = true);

}  // namespace udw
