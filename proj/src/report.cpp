#include "sjp/report.hpp"

#include <sstream>

namespace sjp {
namespace {

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_table(std::ostringstream& out, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    cols.push_back(key);
  }
  out << '|';
  for (const auto& c : cols) out << ' ' << c << " |";
  out << "\n|";
  for (const auto& c : cols) out << ' ' << std::string(c.size(), '-') << " |";
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& c : cols)
      out << ' ' << (row.contains(c) ? scalar_str(row.at(c)) : "") << " |";
    out << '\n';
  }
}

bool is_uniform_object_array(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object()) return false;
    for (const auto& [key, cell] : row.items()) {
      (void)key;
      if (cell.is_structured()) return false;
    }
  }
  return true;
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v, int depth) {
  std::string indent(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    out << indent << "- " << key << ":\n";
    for (const auto& [k, inner] : v.items()) render_value(out, k, inner, depth + 1);
  } else if (v.is_array()) {
    out << indent << "- " << key << ": " << v.dump() << '\n';
  } else {
    out << indent << "- " << key << ": " << scalar_str(v) << '\n';
  }
}

}  // namespace

std::string render_report(const Json& doc, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) return doc.dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [key, value] : doc.items()) {
    if (is_uniform_object_array(value)) {
      out << "## " << key << "\n\n";
      render_table(out, value);
      out << '\n';
    } else if (value.is_object() || value.is_array()) {
      out << "## " << key << "\n\n";
      if (value.is_object()) {
        for (const auto& [k, inner] : value.items()) render_value(out, k, inner, 0);
      } else {
        for (const auto& item : value) out << "- " << scalar_str(item) << '\n';
      }
      out << '\n';
    } else {
      out << "- " << key << ": " << scalar_str(value) << '\n';
    }
  }
  return out.str();
}

}  // namespace sjp
