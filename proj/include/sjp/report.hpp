#pragma once

#include <json.hpp>

#include <string>

namespace sjp {

// Reports are built as ordered JSON documents so that identical run
// configurations serialize byte-for-byte identically.
using Json = nlohmann::ordered_json;

enum class ReportFormat { Json, Markdown };

// Renders a report document. Json mode is `dump(2)` plus a trailing newline.
// Markdown mode renders each top-level key as a section: arrays of uniform
// objects become tables, nested objects become bullet lists, scalars become
// single bullets.
std::string render_report(const Json& doc, ReportFormat fmt);

}  // namespace sjp
