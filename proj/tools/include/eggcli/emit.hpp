#pragma once

#include <string>

#include <json.hpp>

namespace egg::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json, Svg };

/// 17 significant digits, shortest %g layout; "nan", "inf", "-inf" otherwise.
[[nodiscard]] std::string format_double(double v);

/// Pretty-printed JSON (two-space indent, insertion key order, trailing
/// newline). Floats are written with format_double; non-finite ones as null.
[[nodiscard]] std::string dump_json(const Json& value);

/// Scalar rendering shared by the text and CSV writers.
[[nodiscard]] std::string scalar_text(const Json& value);

/// A flat object as aligned "key value" lines, a one-row CSV, or JSON.
[[nodiscard]] std::string render_record(const Json& record, Format format);

/// Quotes a CSV field when it contains a comma, quote or newline.
[[nodiscard]] std::string csv_field(const std::string& field);

}  // namespace egg::cli
