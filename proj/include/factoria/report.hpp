#pragma once

// Rendering of verdicts, range reports and bench records as table, JSONL or
// CSV. Every record is first flattened into an ordered list of fields, so the
// three renderings always carry the same values in the same order.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "factoria/harness.hpp"
#include "factoria/theorems.hpp"

namespace factoria::report {

enum class OutputFormat { table, jsonl, csv };

constexpr std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::table: return "table";
    case OutputFormat::jsonl: return "jsonl";
    case OutputFormat::csv: return "csv";
  }
  return "unknown";
}

constexpr std::optional<OutputFormat> parse_format(std::string_view name) noexcept {
  for (auto f : {OutputFormat::table, OutputFormat::jsonl, OutputFormat::csv}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

using Value = std::variant<std::uint64_t, bool, std::string, std::vector<std::uint64_t>,
                           std::vector<Mismatch>>;

struct Field {
  std::string name;
  Value value;
};

using Record = std::vector<Field>;

struct CheckRecord {
  PrimalityVerdict verdict;
  bool raw;
  bool oracle_mismatch;
};

struct TwinRecord {
  TwinVerdict verdict;
  bool raw;
  bool oracle_mismatch;
};

inline Record to_record(const CheckRecord& r) {
  return {{"n", r.verdict.n},
          {"method", std::string(to_string(r.verdict.method))},
          {"raw", r.raw},
          {"is_prime", r.verdict.is_prime},
          {"witness", r.verdict.witness.value()},
          {"exception_applied", r.verdict.exception_applied},
          {"oracle_mismatch", r.oracle_mismatch}};
}

inline Record to_record(const TwinRecord& r) {
  return {{"n", r.verdict.n},
          {"method", std::string(to_string(r.verdict.method))},
          {"raw", r.raw},
          {"is_twin_pair", r.verdict.is_twin_pair},
          {"residue_mod_n", r.verdict.residue_mod_n.value()},
          {"residue_mod_n_plus_2", r.verdict.residue_mod_n_plus_2.value()},
          {"exception_applied", r.verdict.exception_applied},
          {"oracle_mismatch", r.oracle_mismatch}};
}

inline Record to_record(const RangeReport& r) {
  return {{"method", std::string(to_string(r.method))},
          {"raw", r.raw},
          {"lo", r.lo},
          {"hi", r.hi},
          {"checked", r.checked},
          {"mismatches", r.mismatches},
          {"expected_mismatches", r.expected_mismatches},
          {"conforms", r.conforms}};
}

inline Record to_record(const BenchRecord& r) {
  return {{"method", std::string(to_string(r.method))},
          {"n", r.n},
          {"elapsed_ns", static_cast<std::uint64_t>(r.elapsed.count())},
          {"multiplications", r.multiplications}};
}

/// Flat text form used by the table and CSV renderings. Mismatches are
/// written n:theorem:oracle with 1/0 verdicts, list items separated by ';'.
inline std::string to_text(const Value& value) {
  struct Visitor {
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(const std::vector<std::uint64_t>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i]);
      }
      return out;
    }
    std::string operator()(const std::vector<Mismatch>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i].n) + ':' + (v[i].theorem_verdict ? '1' : '0') + ':' +
               (v[i].oracle_verdict ? '1' : '0');
      }
      return out;
    }
  };
  return std::visit(Visitor{}, value);
}

inline nlohmann::ordered_json to_json(const Record& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& field : record) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::vector<Mismatch>>) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& m : v) {
              arr.push_back({{"n", m.n}, {"theorem", m.theorem_verdict}, {"oracle", m.oracle_verdict}});
            }
            obj[field.name] = std::move(arr);
          } else {
            obj[field.name] = v;
          }
        },
        field.value);
  }
  return obj;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

/// Writes records in the requested format. All records must share a layout.
inline void write(std::ostream& out, const std::vector<Record>& records, OutputFormat format) {
  if (format == OutputFormat::jsonl) {
    for (const auto& r : records) out << to_json(r).dump() << '\n';
    return;
  }
  if (records.empty() && format == OutputFormat::table) return;

  std::vector<std::string> header;
  if (!records.empty()) {
    for (const auto& f : records.front()) header.push_back(f.name);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records) {
    std::vector<std::string> row;
    for (const auto& f : r) row.push_back(to_text(f.value));
    rows.push_back(std::move(row));
  }

  if (format == OutputFormat::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << detail::csv_escape(cells[i]);
      }
      out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return;
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += cells[i];
      if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

template <typename T>
void write_one(std::ostream& out, const T& item, OutputFormat format) {
  write(out, {to_record(item)}, format);
}

}  // namespace factoria::report
