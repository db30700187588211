#include "addcomb/report.hpp"

#include "addcomb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace addcomb {

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

ReportValue rv_text(std::string s) { return {ReportValue::Kind::Text, std::move(s)}; }

ReportValue rv_float(double v) {
    if (std::isnan(v)) return rv_text("nan");
    if (std::isinf(v)) return rv_text(v > 0 ? "inf" : "-inf");
    return {ReportValue::Kind::Number, format_float(v)};
}

ReportValue rv_int(std::int64_t v) { return {ReportValue::Kind::Number, std::to_string(v)}; }

ReportValue rv_count(const BigCount& v) { return {ReportValue::Kind::Text, decimal_string(v)}; }

ReportValue rv_bool(bool v) { return {ReportValue::Kind::Boolean, v ? "true" : "false"}; }

const ReportValue* RunRecord::find(std::string_view name) const {
    for (const auto& [k, v] : fields)
        if (k == name) return &v;
    return nullptr;
}

bool RunRecord::failed() const {
    const ReportValue* v = find("pass");
    return v != nullptr && v->kind == ReportValue::Kind::Boolean && v->text == "false";
}

void RunReport::sort_records() {
    std::stable_sort(records.begin(), records.end(),
                     [](const RunRecord& a, const RunRecord& b) { return a.key < b.key; });
}

std::int64_t RunReport::failures() const {
    std::int64_t n = 0;
    for (const auto& r : records)
        if (r.failed()) ++n;
    return n;
}

namespace {

void json_escape(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

void emit_value(const ReportValue& v, std::string& out) {
    switch (v.kind) {
    case ReportValue::Kind::Text: json_escape(v.text, out); break;
    case ReportValue::Kind::Number: out += v.text; break;
    case ReportValue::Kind::Boolean: out += v.text; break;
    }
}

void emit_fields(const std::vector<std::pair<std::string, ReportValue>>& fields, std::string& out,
                 const char* indent) {
    out += "{";
    bool first = true;
    for (const auto& [k, v] : fields) {
        if (!first) out += ",";
        out += "\n";
        out += indent;
        json_escape(k, out);
        out += ": ";
        emit_value(v, out);
        first = false;
    }
    out += "\n";
    out += indent + 2; // drop two spaces for the closing brace
    out += "}";
}

} // namespace

std::string emit_json(const RunReport& report, bool include_timestamp) {
    std::string out;
    out += "{\n";
    out += "  \"command\": ";
    json_escape(report.command, out);
    out += ",\n  \"version\": ";
    json_escape(report.version, out);
    out += ",\n  \"rng\": ";
    json_escape(report.rng_id, out);
    out += ",\n  \"seed\": " + std::to_string(report.seed);
    if (include_timestamp) {
        out += ",\n  \"timestamp\": ";
        json_escape(report.timestamp, out);
    }
    out += ",\n  \"records\": [";
    bool first = true;
    for (const auto& r : report.records) {
        if (!first) out += ",";
        out += "\n    ";
        std::vector<std::pair<std::string, ReportValue>> fields;
        fields.emplace_back("instance", rv_text(r.key));
        fields.insert(fields.end(), r.fields.begin(), r.fields.end());
        emit_fields(fields, out, "      ");
        first = false;
    }
    out += report.records.empty() ? "]" : "\n  ]";
    out += ",\n  \"aggregate\": ";
    emit_fields(report.aggregate, out, "    ");
    out += "\n}\n";
    return out;
}

namespace {

void csv_cell(const std::string& s, std::string& out) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        out += s;
        return;
    }
    out += '"';
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

} // namespace

std::string emit_csv(const RunReport& report) {
    std::string out;
    if (report.records.empty()) return out;
    const auto& head = report.records.front();
    out += "instance";
    for (const auto& [k, v] : head.fields) {
        out += ',';
        csv_cell(k, out);
    }
    out += '\n';
    for (const auto& r : report.records) {
        csv_cell(r.key, out);
        for (const auto& [k, v] : head.fields) {
            out += ',';
            const ReportValue* cell = r.find(k);
            if (cell) csv_cell(cell->text, out);
        }
        out += '\n';
    }
    return out;
}

namespace {

// Minimal JSON reader for the fixed emit_json schema, keeping number tokens
// verbatim so re-emission is byte-identical.
struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw input_error("report parse error at offset " + std::to_string(pos) + ": " + why);
    }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\n' || s[pos] == '\t' || s[pos] == '\r'))
            ++pos;
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        return s[pos];
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string parse_string() {
        expect('"');
        std::string out;
        while (pos < s.size() && s[pos] != '"') {
            char c = s[pos++];
            if (c == '\\') {
                if (pos >= s.size()) fail("bad escape");
                char e = s[pos++];
                switch (e) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'u': {
                    if (pos + 4 > s.size()) fail("bad \\u escape");
                    out += static_cast<char>(std::stoi(std::string(s.substr(pos, 4)), nullptr, 16));
                    pos += 4;
                    break;
                }
                default: fail("bad escape");
                }
            } else {
                out += c;
            }
        }
        if (pos >= s.size()) fail("unterminated string");
        ++pos;
        return out;
    }
    ReportValue parse_value() {
        char c = peek();
        if (c == '"') return rv_text(parse_string());
        if (c == 't' || c == 'f') {
            const std::string_view kw = c == 't' ? "true" : "false";
            if (s.substr(pos, kw.size()) != kw) fail("bad literal");
            pos += kw.size();
            return rv_bool(c == 't');
        }
        // raw number token
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                                  s[pos] == '+' || s[pos] == '.' || s[pos] == 'e' || s[pos] == 'E'))
            ++pos;
        if (pos == start) fail("bad value");
        return {ReportValue::Kind::Number, std::string(s.substr(start, pos - start))};
    }
    std::vector<std::pair<std::string, ReportValue>> parse_object() {
        expect('{');
        std::vector<std::pair<std::string, ReportValue>> out;
        if (peek() == '}') {
            ++pos;
            return out;
        }
        for (;;) {
            std::string key = parse_string();
            expect(':');
            out.emplace_back(std::move(key), parse_value());
            char c = peek();
            if (c == ',') {
                ++pos;
                continue;
            }
            expect('}');
            break;
        }
        return out;
    }
};

} // namespace

RunReport parse_json_report(std::string_view json) {
    Parser p{json};
    RunReport rep;
    p.expect('{');
    for (;;) {
        std::string key = p.parse_string();
        p.expect(':');
        if (key == "command") {
            rep.command = p.parse_string();
        } else if (key == "version") {
            rep.version = p.parse_string();
        } else if (key == "rng") {
            rep.rng_id = p.parse_string();
        } else if (key == "seed") {
            rep.seed = std::stoull(p.parse_value().text);
        } else if (key == "timestamp") {
            rep.timestamp = p.parse_string();
        } else if (key == "aggregate") {
            rep.aggregate = p.parse_object();
        } else if (key == "records") {
            p.expect('[');
            if (p.peek() == ']') {
                ++p.pos;
            } else {
                for (;;) {
                    auto fields = p.parse_object();
                    RunRecord rec;
                    for (auto& [k, v] : fields) {
                        if (k == "instance")
                            rec.key = v.text;
                        else
                            rec.fields.emplace_back(std::move(k), std::move(v));
                    }
                    rep.records.push_back(std::move(rec));
                    if (p.peek() == ',') {
                        ++p.pos;
                        continue;
                    }
                    p.expect(']');
                    break;
                }
            }
        } else {
            p.fail("unknown key '" + key + "'");
        }
        if (p.peek() == ',') {
            ++p.pos;
            continue;
        }
        p.expect('}');
        break;
    }
    return rep;
}

std::string iso8601_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace addcomb
