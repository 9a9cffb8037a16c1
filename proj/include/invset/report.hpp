#pragma once

// Experiment reports: an ordered list of flat-ish JSON records plus a meta
// record, emitted as an aligned table, JSON lines, or CSV.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "invset/cosequence.hpp"
#include "invset/rational.hpp"
#include "invset/root_family.hpp"

namespace invset {

inline constexpr const char* kVersion = "0.1.0";

using Record = nlohmann::ordered_json;

enum class Format { Table, Records, Csv };

Format parse_format(const std::string& text);

struct Report {
  std::string experiment;
  Record meta;
  std::vector<Record> records;
  /// False when a checked invariant failed.
  bool ok = true;

  Report(std::string experiment, const AmbientConfig& config, std::uint64_t seed, std::uint64_t samples);

  /// Appends a record whose first field is "record": kind.
  Record& add(const std::string& kind);
};

/// {"exact": "p/q", "decimal": "0.xxxxxxxxxxxx"}
Record exact_field(const Rational& value);
/// {"approx": "0.xxxxxxxxxxxx"} for values with no exact form.
Record approx_field(double value);
/// {"estimate", "hits", "samples", "sigma"}; sigma is taken at `reference`.
Record empirical_field(const EmpiricalEstimate& e, double reference);
/// 12-digit fixed decimal.
std::string decimal12(double value);

void emit(const Report& report, Format format, std::ostream& out);

}  // namespace invset
