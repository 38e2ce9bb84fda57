#include "hypdrum/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hypdrum {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string json_real(double x) { return std::isfinite(x) ? format_real(x) : "null"; }

std::string json_value(const Value& v) {
  struct Visitor {
    std::string operator()(double x) const { return json_real(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return quote(s); }
    std::string operator()(const std::vector<double>& xs) const {
      std::string out = "[";
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out += ", ";
        out += json_real(xs[k]);
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

std::string json_object(const Fields& fields, const std::string& indent) {
  if (fields.empty()) return "{}";
  std::string out = "{\n";
  for (std::size_t k = 0; k < fields.size(); ++k) {
    out += indent + "  " + quote(fields[k].first) + ": " + json_value(fields[k].second);
    out += k + 1 < fields.size() ? ",\n" : "\n";
  }
  return out + indent + "}";
}

std::string csv_value(const Value& v) {
  struct Visitor {
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<double>&) const {
      throw std::invalid_argument("to_csv: array values cannot be written as CSV cells");
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const OutputRecord& record) {
  std::string out = "{\n";
  out += "  \"command\": " + quote(record.command) + ",\n";
  out += "  \"inputs\": " + json_object(record.inputs, "  ") + ",\n";
  out += "  \"results\": " + json_object(record.results, "  ") + ",\n";
  out += "  \"meta\": " + json_object(record.meta, "  ") + "\n";
  return out + "}\n";
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<Value>>& rows) {
  std::string out;
  for (std::size_t k = 0; k < header.size(); ++k) out += (k ? "," : "") + header[k];
  out += "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw std::invalid_argument("to_csv: row width mismatch");
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + csv_value(row[k]);
    out += "\n";
  }
  return out;
}

}  // namespace hypdrum
