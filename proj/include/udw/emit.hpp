#pragma once

#include <string>
#include <vector>

#include "udw/sweep.hpp"

namespace udw {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { csv, json };
Format format_from_string(const std::string& s);

/// Header plus one line per row; doubles printed with %.17g.
std::string to_csv(const std::vector<SweepRow>& rows);

/// {"meta": {"plan", "spec", "version"}, "rows": [...]}.
std::string to_json(const std::vector<SweepRow>& rows, const SweepPlan& plan, const QuadratureSpec& spec);

std::vector<SweepRow> rows_from_json(const std::string& text);

/// Writes to `path`, or stdout when path is "-" or empty. Throws IoError when
/// the file cannot be written and DomainError on an empty row set.
void emit(const std::vector<SweepRow>& rows, Format format, const std::string& path, const SweepPlan& plan,
          const QuadratureSpec& spec);

}  // namespace udw
