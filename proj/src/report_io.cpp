#include "relspin/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace relspin {

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void JsonWriter::comma_and_newline() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!has_items_.empty()) {
        if (has_items_.back()) out_ += ',';
        has_items_.back() = true;
        out_ += '\n';
        indent();
    }
}

void JsonWriter::indent() {
    out_.append(2 * has_items_.size(), ' ');
}

void JsonWriter::begin_object() {
    comma_and_newline();
    out_ += '{';
    has_items_.push_back(false);
}

void JsonWriter::end_object() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) {
        out_ += '\n';
        indent();
    }
    out_ += '}';
}

void JsonWriter::begin_array() {
    comma_and_newline();
    out_ += '[';
    has_items_.push_back(false);
}

void JsonWriter::end_array() {
    const bool had = has_items_.back();
    has_items_.pop_back();
    if (had) {
        out_ += '\n';
        indent();
    }
    out_ += ']';
}

namespace {
std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}
}  // namespace

void JsonWriter::key(const std::string& k) {
    comma_and_newline();
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\": ";
    pending_key_ = true;
}

void JsonWriter::value(const std::string& s) {
    comma_and_newline();
    out_ += '"';
    out_ += json_escape(s);
    out_ += '"';
}

void JsonWriter::value(const char* s) { value(std::string(s)); }

void JsonWriter::value(double x) {
    comma_and_newline();
    out_ += format_double(x);
}

void JsonWriter::value(long long n) {
    comma_and_newline();
    out_ += std::to_string(n);
}

void JsonWriter::value(bool b) {
    comma_and_newline();
    out_ += b ? "true" : "false";
}

void JsonWriter::null_value() {
    comma_and_newline();
    out_ += "null";
}

void write_report(JsonWriter& w, const CheckReport& r) {
    w.begin_object();
    w.key("check");
    w.value(r.check);
    w.key("tolerance");
    w.value(r.tolerance);
    w.key("max_residual");
    w.value(r.max_residual);
    w.key("passed");
    w.value(r.passed);
    w.key("samples");
    w.begin_array();
    for (const auto& s : r.samples) {
        w.begin_object();
        w.key("inputs");
        w.begin_object();
        for (const auto& [name, values] : s.inputs) {
            w.key(name);
            if (values.size() == 1) {
                w.value(values[0]);
            } else {
                w.begin_array();
                for (double v : values) w.value(v);
                w.end_array();
            }
        }
        w.end_object();
        w.key("residual");
        w.value(s.residual);
        w.end_object();
    }
    w.end_array();
    w.key("metadata");
    w.begin_object();
    for (const auto& [k, v] : r.metadata) {
        w.key(k);
        w.value(v);
    }
    w.end_object();
    w.end_object();
}

std::string report_to_json(const CheckReport& r) {
    JsonWriter w;
    write_report(w, r);
    std::string out = w.str();
    out += '\n';
    return out;
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace relspin
