#pragma once

// Curated orbit table for the exceptional types. The text format is
// documented at the top of data/exceptional_orbits.txt.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilcontact/error.hpp"
#include "nilcontact/exceptional_table_data.hpp"
#include "nilcontact/lie_core.hpp"

namespace nilcontact {

struct ExceptionalEntry {
    SimpleType type;
    std::string key;
    std::string bala_carter;
    int dimension = -1;
    std::optional<bool> is_richardson;
    std::optional<bool> admits_symplectic_resolution;
    /// Markings (1-based) whose Richardson orbit is this one.
    std::vector<std::vector<int>> richardson_of;
    std::optional<int> springer_degree;
    std::string provenance;
};

class ExceptionalTable {
public:
    ExceptionalTable() = default;
    ExceptionalTable(std::string version, std::vector<ExceptionalEntry> entries)
        : version_(std::move(version)), entries_(std::move(entries)) {}

    const std::string& version() const noexcept { return version_; }
    const std::vector<ExceptionalEntry>& entries() const noexcept { return entries_; }

    /// Lookup by key or Bala-Carter label.
    const ExceptionalEntry* find(SimpleType t, const std::string& key) const {
        for (const auto& e : entries_)
            if (e.type == t && e.key == key) return &e;
        for (const auto& e : entries_)
            if (e.type == t && !e.bala_carter.empty() && e.bala_carter == key) return &e;
        return nullptr;
    }

    std::vector<const ExceptionalEntry*> entries_for(SimpleType t) const {
        std::vector<const ExceptionalEntry*> out;
        for (const auto& e : entries_)
            if (e.type == t) out.push_back(&e);
        return out;
    }

    /// The entry listing `marking` among its inducing parabolics, if curated.
    const ExceptionalEntry* richardson_of(SimpleType t, const std::vector<int>& marking) const {
        for (const auto& e : entries_)
            if (e.type == t && std::find(e.richardson_of.begin(), e.richardson_of.end(), marking) != e.richardson_of.end())
                return &e;
        return nullptr;
    }

private:
    std::string version_;
    std::vector<ExceptionalEntry> entries_;
};

namespace detail {

inline std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline bool parse_bool_field(const std::string& v, int line) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": expected true/false, got '" + v + "'");
}

inline int parse_int_field(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        const int x = std::stoi(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": expected integer, got '" + v + "'");
}

/// "{1,3}" -> {1,3}; "{}" -> {}
inline std::vector<int> parse_marking_set(const std::string& s, int line) {
    const std::string t = strip(s);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": bad marking '" + s + "'");
    std::vector<int> out;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ','))
        if (!strip(item).empty()) out.push_back(parse_int_field(strip(item), line));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline ExceptionalTable parse_exceptional_table(const std::string& text) {
    std::string version;
    std::vector<ExceptionalEntry> entries;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    auto finish = [&](int at) {
        if (entries.empty()) return;
        const auto& e = entries.back();
        if (e.dimension < 0 || e.dimension % 2 != 0)
            throw Error(ErrorKind::TableFormat, "record ending at line " + std::to_string(at) +
                                                    ": missing or odd dimension for " + e.type.name() + ":" + e.key);
        if (e.provenance.empty())
            throw Error(ErrorKind::TableFormat, "record " + e.type.name() + ":" + e.key + " has no provenance");
    };
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = detail::strip(raw);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            finish(line);
            if (s.back() != ']') throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": unterminated header");
            const std::string body = s.substr(1, s.size() - 2);
            const auto colon = body.find(':');
            if (colon == std::string::npos)
                throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": header needs TYPE:KEY");
            ExceptionalEntry e;
            try {
                e.type = parse_simple_type(body.substr(0, colon));
            } catch (const Error& err) {
                throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": " + err.what());
            }
            e.key = body.substr(colon + 1);
            entries.push_back(std::move(e));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": expected field = value");
        const std::string field = detail::strip(s.substr(0, eq));
        const std::string value = detail::strip(s.substr(eq + 1));
        if (entries.empty()) {
            if (field != "version") throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": field outside record");
            version = value;
            continue;
        }
        auto& e = entries.back();
        if (field == "dimension") e.dimension = detail::parse_int_field(value, line);
        else if (field == "bala_carter") e.bala_carter = value;
        else if (field == "is_richardson") e.is_richardson = detail::parse_bool_field(value, line);
        else if (field == "admits_symplectic_resolution") e.admits_symplectic_resolution = detail::parse_bool_field(value, line);
        else if (field == "springer_degree") e.springer_degree = detail::parse_int_field(value, line);
        else if (field == "provenance") e.provenance = value;
        else if (field == "richardson_of") {
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ';')) e.richardson_of.push_back(detail::parse_marking_set(item, line));
        } else
            throw Error(ErrorKind::TableFormat, "line " + std::to_string(line) + ": unknown field '" + field + "'");
    }
    finish(line);
    if (version.empty()) throw Error(ErrorKind::TableFormat, "table has no version line");
    return {version, std::move(entries)};
}

/// The table shipped with the library, parsed once.
inline const ExceptionalTable& default_exceptional_table() {
    static const ExceptionalTable table = parse_exceptional_table(kExceptionalTableText);
    return table;
}

} // namespace nilcontact
