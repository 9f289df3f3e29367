#pragma once

// Minimal deterministic JSON emitter (internal). Field order is exactly
// the call order; doubles use "%.12g" with negative zero scrubbed, so a
// given report renders to identical bytes on every run and platform.

#include "zdg/errors.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace zdg::detail {

inline std::string json_double(double value) {
    if (!std::isfinite(value)) {
        throw error("json: non-finite number");
    }
    if (value == 0.0) return "0"; // collapses -0 as well
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
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
                out.push_back(c);
            }
        }
    }
    return out;
}

// Comma-aware appender: value/key calls insert separators as needed.
class JsonWriter {
public:
    std::string& str() { return out_; }

    JsonWriter& object_begin() { return token("{", Open::yes); }
    JsonWriter& object_end() { return close("}"); }
    JsonWriter& array_begin() { return token("[", Open::yes); }
    JsonWriter& array_end() { return close("]"); }

    JsonWriter& key(const std::string& name) {
        separate();
        out_ += '"';
        out_ += json_escape(name);
        out_ += "\":";
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(const std::string& s) {
        return raw('"' + json_escape(s) + '"');
    }
    JsonWriter& value(const char* s) { return value(std::string(s)); }
    JsonWriter& value(double v) { return raw(json_double(v)); }
    JsonWriter& value(bool b) { return raw(b ? "true" : "false"); }
    JsonWriter& value(std::int64_t v) { return raw(std::to_string(v)); }
    JsonWriter& value(std::uint64_t v) { return raw(std::to_string(v)); }
    JsonWriter& value(std::int32_t v) {
        return value(static_cast<std::int64_t>(v));
    }

private:
    enum class Open { no, yes };

    void separate() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!out_.empty()) {
            const char last = out_.back();
            if (last != '{' && last != '[') out_ += ',';
        }
    }

    JsonWriter& raw(const std::string& text) {
        separate();
        out_ += text;
        return *this;
    }

    JsonWriter& token(const char* t, Open) {
        separate();
        out_ += t;
        return *this;
    }

    JsonWriter& close(const char* t) {
        pending_value_ = false;
        out_ += t;
        return *this;
    }

    std::string out_;
    bool pending_value_ = false;
};

} // namespace zdg::detail
