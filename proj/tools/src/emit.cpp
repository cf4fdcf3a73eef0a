#include "eggcli/emit.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace egg::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

namespace {

void write_json(const Json& v, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(key).dump();
        out += ": ";
        write_json(item, depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_json(v[i], depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const Json& value) {
  std::string out;
  write_json(value, 0, out);
  out += '\n';
  return out;
}

std::string scalar_text(const Json& value) {
  switch (value.type()) {
    case Json::value_t::number_float: return format_double(value.get<double>());
    case Json::value_t::string: return value.get<std::string>();
    case Json::value_t::null: return "";
    default: return value.dump();
  }
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string render_record(const Json& record, Format format) {
  if (format == Format::Json) return dump_json(record);
  std::string out;
  if (format == Format::Csv) {
    std::string header;
    std::string row;
    for (const auto& [key, item] : record.items()) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += csv_field(key);
      row += csv_field(scalar_text(item));
    }
    return header + '\n' + row + '\n';
  }
  if (format != Format::Text) throw std::logic_error("record cannot be rendered as SVG");
  std::size_t width = 0;
  for (const auto& [key, item] : record.items()) width = std::max(width, key.size());
  for (const auto& [key, item] : record.items()) {
    out += fmt::format("{:<{}}  {}\n", key, width, scalar_text(item));
  }
  return out;
}

}  // namespace egg::cli
