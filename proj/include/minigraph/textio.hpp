#pragma once

// Text helpers shared by the file formats: shortest round-trip decimal
// printing, strict parsing, and flat `key = value` config files.

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace minigraph {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace textio {

// Shortest decimal string that parses back to the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw usage_error("bad real number: '" + std::string(s) + "'");
    return v;
}

inline long parse_int(std::string_view s) {
    long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw usage_error("bad integer: '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return std::string(s.substr(a, b - a));
}

// Flat `key = value` text. Lines starting with '#' and blank lines ignored.
struct KeyValueFile {
    std::map<std::string, std::string> entries;

    static KeyValueFile parse(std::string_view text) {
        KeyValueFile kv;
        size_t pos = 0;
        int lineno = 0;
        while (pos <= text.size()) {
            size_t eol = text.find('\n', pos);
            std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
            ++lineno;
            pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw usage_error("config line " + std::to_string(lineno) + ": expected 'key = value'");
            kv.entries[trim(std::string_view(t).substr(0, eq))] =
                trim(std::string_view(t).substr(eq + 1));
        }
        return kv;
    }

    std::optional<std::string> get(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        return it->second;
    }
    double get_double(const std::string& key, double dflt) const {
        auto v = get(key);
        return v ? parse_double(*v) : dflt;
    }
    long get_int(const std::string& key, long dflt) const {
        auto v = get(key);
        return v ? parse_int(*v) : dflt;
    }
    bool get_bool(const std::string& key, bool dflt) const {
        auto v = get(key);
        if (!v) return dflt;
        if (*v == "true" || *v == "on" || *v == "1") return true;
        if (*v == "false" || *v == "off" || *v == "0") return false;
        throw usage_error("config key '" + key + "': expected boolean, got '" + *v + "'");
    }
};

} // namespace textio
} // namespace minigraph
