#pragma once

#include "addcomb/big_count.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace addcomb {

/// Report values are canonicalized to their wire text at construction:
/// floats as %.15g, counts as decimal strings, so the emitters are
/// byte-deterministic and parse -> emit round-trips are identical.
struct ReportValue {
    enum class Kind { Text, Number, Boolean };
    Kind kind = Kind::Text;
    std::string text;
};

std::string format_float(double v); // %.15g; inf/nan become quoted text

ReportValue rv_text(std::string s);
ReportValue rv_float(double v);
ReportValue rv_int(std::int64_t v);
ReportValue rv_count(const BigCount& v); // decimal string (quoted in JSON)
ReportValue rv_bool(bool v);

struct RunRecord {
    std::string key; // canonical instance key; records are sorted by it
    std::vector<std::pair<std::string, ReportValue>> fields;

    void add(std::string name, ReportValue v) { fields.emplace_back(std::move(name), std::move(v)); }
    const ReportValue* find(std::string_view name) const;
    bool failed() const; // any field named "pass" with value false
};

struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    std::string rng_id;
    std::string version;
    std::string timestamp; // excluded from the determinism contract
    std::vector<RunRecord> records;
    std::vector<std::pair<std::string, ReportValue>> aggregate;

    void sort_records(); // by key, then original order for duplicates
    std::int64_t failures() const;
};

/// Canonical JSON: stable field order, counts as decimal strings, floats
/// with 15 significant digits. Two emissions of equal reports are
/// byte-identical; the timestamp can be suppressed for comparisons.
std::string emit_json(const RunReport& report, bool include_timestamp = true);

/// Same numeric values as the JSON, one row per record; columns from the
/// first record's field names.
std::string emit_csv(const RunReport& report);

/// Parses JSON produced by emit_json, preserving raw number tokens, so that
/// parse -> emit reproduces the input bytes.
RunReport parse_json_report(std::string_view json);

std::string iso8601_utc_now();

} // namespace addcomb
