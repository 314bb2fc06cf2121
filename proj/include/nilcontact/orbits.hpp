#pragma once

// Nilpotent orbit labels, validity rules, dimensions, and the
// per-orbit record used by the resolution reports.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nilcontact/error.hpp"
#include "nilcontact/exceptional_table.hpp"
#include "nilcontact/lie_core.hpp"
#include "nilcontact/partitions.hpp"

namespace nilcontact {

inline bool is_classical(Family f) { return f == Family::A || f == Family::B || f == Family::C || f == Family::D; }

/// Size of the natural matrix representation of a classical type.
inline int natural_dimension(SimpleType t) {
    switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C:
    case Family::D: return 2 * t.rank;
    default: throw Error(ErrorKind::UnsupportedType, t.name() + " has no classical partition labels");
    }
}

/// Type D very even partitions name two orbits, tagged I and II.
enum class VeryEvenTag { None, I, II };

struct OrbitLabel {
    SimpleType simple_type;
    std::variant<Partition, std::string> label;
    VeryEvenTag tag = VeryEvenTag::None;

    bool is_partition() const { return std::holds_alternative<Partition>(label); }
    const Partition& partition() const { return std::get<Partition>(label); }
    const std::string& key() const { return std::get<std::string>(label); }

    /// Body of the grammar form after "TYPE:", e.g. "2,1,1", "dim8", "2,2,2,2/II".
    std::string body() const {
        if (!is_partition()) return key();
        std::string s = join_parts(partition());
        if (tag == VeryEvenTag::I) s += "/I";
        if (tag == VeryEvenTag::II) s += "/II";
        return s;
    }

    std::string text() const { return simple_type.name() + ":" + body(); }

    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

using RawOrbit = std::variant<Partition, std::string>;

/// Partition-type rules, with a fixed parity and the "odd multiplicity forbidden" test.
inline bool satisfies_parity_rule(Family f, const Partition& lambda) {
    if (f == Family::A) return true;
    const int forbidden_parity = (f == Family::C) ? 1 : 0;  // C: odd parts paired; B, D: even parts paired
    std::map<int, int> mult;
    for (int p : lambda) ++mult[p];
    for (const auto& [part, m] : mult)
        if (part % 2 == forbidden_parity && m % 2 != 0) return false;
    return true;
}

inline bool is_very_even(Family f, const Partition& lambda) {
    if (f != Family::D || lambda.empty()) return false;
    std::map<int, int> mult;
    for (int p : lambda) ++mult[p];
    return std::all_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.first % 2 == 0 && kv.second % 2 == 0; });
}

inline OrbitLabel validate_orbit(SimpleType t, const RawOrbit& raw, VeryEvenTag tag = VeryEvenTag::None,
                                 const ExceptionalTable& table = default_exceptional_table()) {
    if (!valid_rank(t.family, t.rank)) throw Error(ErrorKind::InvalidRank, "invalid type " + t.name());
    if (is_classical(t.family)) {
        if (!std::holds_alternative<Partition>(raw))
            throw Error(ErrorKind::InvalidPartition, "type " + t.name() + " orbits are labelled by partitions");
        Partition lambda = canonical_partition(std::get<Partition>(raw));
        const int n = natural_dimension(t);
        if (total(lambda) != n)
            throw Error(ErrorKind::InvalidPartition,
                        "partition " + join_parts(lambda) + " does not sum to " + std::to_string(n) + " for " + t.name());
        if (!satisfies_parity_rule(t.family, lambda))
            throw Error(ErrorKind::InvalidPartition,
                        "partition " + join_parts(lambda) + " violates the multiplicity rule of type " + t.name());
        const bool very_even = is_very_even(t.family, lambda);
        if (very_even && tag == VeryEvenTag::None)
            throw Error(ErrorKind::InvalidPartition, "very even partition " + join_parts(lambda) + " needs a /I or /II tag");
        if (!very_even && tag != VeryEvenTag::None)
            throw Error(ErrorKind::InvalidPartition, "only very even type D partitions take a /I or /II tag");
        return {t, std::move(lambda), tag};
    }
    if (!std::holds_alternative<std::string>(raw))
        throw Error(ErrorKind::UnknownExceptionalKey, "type " + t.name() + " orbits are labelled by table keys");
    const auto* entry = table.find(t, std::get<std::string>(raw));
    if (!entry) throw Error(ErrorKind::UnknownExceptionalKey, "no orbit '" + std::get<std::string>(raw) + "' for " + t.name());
    return {t, entry->key, VeryEvenTag::None};
}

/// Parses "A3:2,1,1", "D4:2,2,2,2/II", "G2:dim8".
inline OrbitLabel parse_orbit(const std::string& text, const ExceptionalTable& table = default_exceptional_table()) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "orbit '" + text + "' must look like TYPE:parts or TYPE:key");
    const SimpleType t = parse_simple_type(text.substr(0, colon));
    std::string body = text.substr(colon + 1);
    if (body.empty()) throw Error(ErrorKind::ParseError, "orbit '" + text + "' has an empty label");
    if (!is_classical(t.family)) return validate_orbit(t, body, VeryEvenTag::None, table);

    VeryEvenTag tag = VeryEvenTag::None;
    if (const auto slash = body.find('/'); slash != std::string::npos) {
        const std::string suffix = body.substr(slash + 1);
        if (suffix == "I") tag = VeryEvenTag::I;
        else if (suffix == "II") tag = VeryEvenTag::II;
        else throw Error(ErrorKind::ParseError, "bad very-even tag '" + suffix + "'");
        body = body.substr(0, slash);
    }
    Partition parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 4)
            throw Error(ErrorKind::ParseError, "bad part '" + item + "' in '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    if (!body.empty() && body.back() == ',') throw Error(ErrorKind::ParseError, "trailing comma in '" + text + "'");
    return validate_orbit(t, parts, tag, table);
}

inline int orbit_dimension(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    const SimpleType t = o.simple_type;
    if (!o.is_partition()) {
        const auto* e = table.find(t, o.key());
        if (!e) throw Error(ErrorKind::UnknownExceptionalKey, "no orbit '" + o.key() + "' for " + t.name());
        return e->dimension;
    }
    const Partition& lambda = o.partition();
    const Partition dual = dual_partition(lambda);
    int sum_sq = 0;
    for (int d : dual) sum_sq += d * d;
    const int odd = static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [](int p) { return p % 2 != 0; }));
    const int n = t.rank;
    int twice_centralizer = 0;
    int dim_g = 0;
    switch (t.family) {
    case Family::A: {
        const int N = n + 1;
        return N * N - sum_sq;
    }
    case Family::B: dim_g = 2 * n * n + n; twice_centralizer = sum_sq - odd; break;
    case Family::C: dim_g = 2 * n * n + n; twice_centralizer = sum_sq + odd; break;
    case Family::D: dim_g = 2 * n * n - n; twice_centralizer = sum_sq - odd; break;
    default: throw Error(ErrorKind::UnsupportedType, "unexpected partition label for " + t.name());
    }
    if (twice_centralizer % 2 != 0) throw Error(ErrorKind::InvalidPartition, "odd centralizer count for " + o.text());
    const int dim = dim_g - twice_centralizer / 2;
    if (dim % 2 != 0) throw Error(ErrorKind::InvalidPartition, "odd orbit dimension for " + o.text());
    return dim;
}

inline bool is_zero_orbit(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    return orbit_dimension(o, table) == 0;
}

/// 2h^vee - 2.
inline int minimal_orbit_dimension(SimpleType t) { return 2 * dual_coxeter_number(t) - 2; }

inline bool is_minimal_orbit(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    const int dim = orbit_dimension(o, table);
    if (dim == 0) throw Error(ErrorKind::ZeroOrbit, "the zero orbit has no projectivisation");
    return dim == minimal_orbit_dimension(o.simple_type);
}

/// Regular (principal) orbit: dimension dim g - rank.
inline bool is_regular_orbit(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    const auto rs = root_system(o.simple_type);
    return orbit_dimension(o, table) == rs->algebra_dimension() - rs->rank();
}

struct SingularityFlags {
    bool projectively_normal = true;
    bool rational_gorenstein = true;
};

struct OrbitRecord {
    OrbitLabel label;
    int dim_orbit = 0;
    bool is_minimal = false;
    bool is_zero = false;
    /// (dim O - 2) / 2, the half-dimension of the contact distribution.
    int contact_n = 0;
    /// The normalization of the projectivised closure is smooth.
    bool proj_normalization_smooth = false;
    SingularityFlags singularity_flags;
};

inline OrbitRecord make_orbit_record(const OrbitLabel& o, const ExceptionalTable& table = default_exceptional_table()) {
    OrbitRecord r;
    r.label = o;
    r.dim_orbit = orbit_dimension(o, table);
    r.is_zero = r.dim_orbit == 0;
    if (!r.is_zero) {
        r.is_minimal = r.dim_orbit == minimal_orbit_dimension(o.simple_type);
        r.contact_n = (r.dim_orbit - 2) / 2;
        r.proj_normalization_smooth =
            r.is_minimal || (o.simple_type.family == Family::G && r.dim_orbit == 8);
    }
    return r;
}

/// Every orbit of a type: all valid partitions (both tags for very even ones)
/// or every curated exceptional key.
inline std::vector<OrbitLabel> enumerate_orbits(SimpleType t, const ExceptionalTable& table = default_exceptional_table()) {
    std::vector<OrbitLabel> out;
    if (!is_classical(t.family)) {
        for (const auto* e : table.entries_for(t)) out.push_back({t, e->key, VeryEvenTag::None});
        return out;
    }
    for (const auto& lambda : partitions_of(natural_dimension(t))) {
        if (!satisfies_parity_rule(t.family, lambda)) continue;
        if (is_very_even(t.family, lambda)) {
            out.push_back({t, lambda, VeryEvenTag::I});
            out.push_back({t, lambda, VeryEvenTag::II});
        } else {
            out.push_back({t, lambda, VeryEvenTag::None});
        }
    }
    return out;
}

/// Largest partition of the given type dominated by lambda (the B-, C- or
/// D-collapse). Repeatedly lowers the last occurrence of an offending part q
/// and raises the first later part smaller than q - 1.
inline Partition collapse(Family f, Partition lambda) {
    if (f == Family::A) return lambda;
    const int forbidden_parity = (f == Family::C) ? 1 : 0;
    for (;;) {
        std::map<int, int, std::greater<>> mult;
        for (int p : lambda) ++mult[p];
        std::optional<int> bad;
        for (const auto& [part, m] : mult)
            if (part % 2 == forbidden_parity && m % 2 != 0) {
                bad = part;
                break;
            }
        if (!bad) break;
        const int q = *bad;
        std::size_t last = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i)
            if (lambda[i] == q) last = i;
        lambda[last] -= 1;
        std::size_t j = last + 1;
        while (j < lambda.size() && lambda[j] >= q - 1) ++j;
        if (j == lambda.size()) lambda.push_back(0);
        lambda[j] += 1;
        lambda = canonical_partition(lambda);
    }
    return lambda;
}

} // namespace nilcontact
