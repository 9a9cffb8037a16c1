#include "invset/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

#include "invset/errors.hpp"

namespace invset {

Format parse_format(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "records") return Format::Records;
  if (text == "csv") return Format::Csv;
  throw InvalidArgument("unknown format '" + text + "' (table, records, csv)");
}

Report::Report(std::string exp, const AmbientConfig& config, std::uint64_t seed, std::uint64_t samples)
    : experiment(std::move(exp)) {
  meta["record"] = "meta";
  meta["experiment"] = experiment;
  meta["version"] = kVersion;
  meta["n_tot"] = config.n_tot();
  meta["seed"] = seed;
  meta["samples"] = samples;
}

Record& Report::add(const std::string& kind) {
  Record r;
  r["record"] = kind;
  records.push_back(std::move(r));
  return records.back();
}

std::string decimal12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  std::string s = buf;
  if (s == "-0.000000000000") s.erase(0, 1);
  return s;
}

Record exact_field(const Rational& value) {
  Record r;
  r["exact"] = value.str();
  r["decimal"] = value.decimal(12);
  return r;
}

Record approx_field(double value) {
  Record r;
  r["approx"] = decimal12(value);
  return r;
}

Record empirical_field(const EmpiricalEstimate& e, double reference) {
  Record r;
  r["estimate"] = decimal12(e.estimate());
  r["hits"] = e.hits;
  r["samples"] = e.samples;
  r["sigma"] = decimal12(e.sigma(reference));
  return r;
}

namespace {

using Flat = std::vector<std::pair<std::string, std::string>>;

void flatten_into(const Record& value, const std::string& prefix, Flat& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) flatten_into(child, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (value.is_string()) {
    out.emplace_back(prefix, value.get<std::string>());
  } else if (value.is_null()) {
    out.emplace_back(prefix, "");
  } else {
    out.emplace_back(prefix, value.dump());
  }
}

Flat flatten(const Record& r) {
  Flat out;
  flatten_into(r, "", out);
  return out;
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s) w += (ch & 0xC0U) != 0x80U ? 1 : 0;
  return w;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> union_keys(const std::vector<Flat>& rows) {
  std::vector<std::string> keys;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
  }
  return keys;
}

std::string lookup(const Flat& row, const std::string& key) {
  for (const auto& [k, v] : row) {
    if (k == key) return v;
  }
  return "";
}

void emit_table_group(const std::vector<Flat>& rows, std::ostream& out) {
  std::vector<std::string> keys = union_keys(rows);
  keys.erase(std::remove(keys.begin(), keys.end(), std::string("record")), keys.end());
  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    width[c] = display_width(keys[c]);
    for (const auto& row : rows) width[c] = std::max(width[c], display_width(lookup(row, keys[c])));
  }
  auto line = [&](auto cell) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      const std::string s = cell(c);
      out << (c ? "  " : "") << s;
      if (c + 1 < keys.size()) out << std::string(width[c] - display_width(s), ' ');
    }
    out << '\n';
  };
  line([&](std::size_t c) { return keys[c]; });
  line([&](std::size_t c) { return std::string(width[c], '-'); });
  for (const auto& row : rows) line([&](std::size_t c) { return lookup(row, keys[c]); });
}

}  // namespace

void emit(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Records:
      out << report.meta.dump() << '\n';
      for (const auto& r : report.records) out << r.dump() << '\n';
      return;
    case Format::Csv: {
      std::vector<Flat> rows{flatten(report.meta)};
      for (const auto& r : report.records) rows.push_back(flatten(r));
      const auto keys = union_keys(rows);
      for (std::size_t c = 0; c < keys.size(); ++c) out << (c ? "," : "") << csv_escape(keys[c]);
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < keys.size(); ++c) out << (c ? "," : "") << csv_escape(lookup(row, keys[c]));
        out << '\n';
      }
      return;
    }
    case Format::Table: {
      out << "# " << report.experiment << "  version " << kVersion << "  n_tot " << report.meta["n_tot"].dump()
          << "  seed " << report.meta["seed"].dump() << "  samples " << report.meta["samples"].dump() << '\n';
      std::size_t i = 0;
      while (i < report.records.size()) {
        const std::string kind = report.records[i]["record"].get<std::string>();
        std::vector<Flat> group;
        while (i < report.records.size() && report.records[i]["record"].get<std::string>() == kind) {
          group.push_back(flatten(report.records[i]));
          ++i;
        }
        out << "\n[" << kind << "]\n";
        emit_table_group(group, out);
      }
      return;
    }
  }
}

}  // namespace invset
