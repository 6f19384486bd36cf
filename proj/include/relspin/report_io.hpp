#pragma once

#include <string>
#include <vector>

#include "relspin/check_report.hpp"

namespace relspin {

/// Shortest text for a double carrying 17 significant digits, so report
/// bytes are reproducible run to run. Non-finite values map to null.
std::string format_double(double x);

/**
 * Minimal streaming JSON writer with deterministic float formatting and
 * two-space indentation. Reports are emitted through this rather than a
 * DOM library so the byte layout is pinned.
 */
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& k);
    void value(const std::string& s);
    void value(const char* s);
    void value(double x);
    void value(long long n);
    void value(bool b);
    void null_value();

    const std::string& str() const { return out_; }

private:
    void comma_and_newline();
    void indent();
    std::string out_;
    std::vector<bool> has_items_;
    bool pending_key_ = false;
};

void write_report(JsonWriter& w, const CheckReport& r);

/// Single report as a standalone JSON document.
std::string report_to_json(const CheckReport& r);

/// RFC 4180 field quoting.
std::string csv_escape(const std::string& field);

}  // namespace relspin
