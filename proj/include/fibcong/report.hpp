#pragma once

#include <string>

#include "fibcong/verify.hpp"

namespace fibcong::report {

enum class Format { Text, Json, Csv };

Format format_from_string(const std::string& name);  // throws on unknown name

/// Serialize a report.  Wall-clock timing is deliberately left out so the
/// bytes do not depend on the worker count.
std::string emit(const verify::SweepReport& report, Format format);

/// Parse the JSON produced by emit(..., Format::Json) back into results;
/// used to guarantee the round trip loses nothing.
verify::SweepReport parse_json(const std::string& text);

}  // namespace fibcong::report
