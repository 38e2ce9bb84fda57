#pragma once

// Machine-readable command output. Reals are always written with 17
// significant digits so that they read back to the same double.

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hypdrum {

inline constexpr const char* kToolVersion = "1.0.0";

using Value = std::variant<double, long long, bool, std::string, std::vector<double>>;
using Fields = std::vector<std::pair<std::string, Value>>;

struct OutputRecord {
  std::string command;
  Fields inputs;
  Fields results;
  Fields meta;
};

/// "%.17g"; non-finite values become "nan", "inf" or "-inf" (null in JSON).
std::string format_real(double x);

std::string to_json(const OutputRecord& record);

/// One header line and one row per entry; every row must match the header.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<Value>>& rows);

}  // namespace hypdrum
