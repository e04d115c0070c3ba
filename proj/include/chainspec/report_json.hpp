#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace chainspec {

using json = nlohmann::ordered_json;

namespace detail {

inline void append_escaped(const std::string& s, std::string& out) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

inline void append_double(double v, std::string& out) {
    if (!std::isfinite(v)) {
        out += "null"; // JSON has no inf/nan; reports never produce them
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    out += buf;
    // Keep a float-typed value recognizable as such after re-parsing
    // (also keeps "-0" from collapsing to integer 0 on the next cycle).
    if (out.find_first_of(".eE", out.size() - std::char_traits<char>::length(buf)) == std::string::npos)
        out += ".0";
}

} // namespace detail

// Deterministic serialization: insertion-ordered keys, 2-space indent,
// floats printed with %.15g.  A report dumped, parsed and dumped again
// reproduces the same bytes.
inline void dump_stable(const json& j, std::string& out, int depth = 0) {
    auto indent = [&](int d) { out.append(static_cast<std::size_t>(d) * 2, ' '); };
    switch (j.type()) {
        case json::value_t::null: out += "null"; break;
        case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case json::value_t::number_integer: out += std::to_string(j.get<long long>()); break;
        case json::value_t::number_unsigned: out += std::to_string(j.get<unsigned long long>()); break;
        case json::value_t::number_float: detail::append_double(j.get<double>(), out); break;
        case json::value_t::string: detail::append_escaped(j.get_ref<const std::string&>(), out); break;
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                indent(depth + 1);
                dump_stable(j[i], out, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            indent(depth);
            out += ']';
            break;
        }
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                indent(depth + 1);
                detail::append_escaped(it.key(), out);
                out += ": ";
                dump_stable(it.value(), out, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            indent(depth);
            out += '}';
            break;
        }
        default: out += "null";
    }
}

inline std::string dump_stable(const json& j) {
    std::string out;
    dump_stable(j, out);
    out += '\n';
    return out;
}

} // namespace chainspec
