#pragma once

// Fixture file formats. Character tables and group descriptions are JSON
// documents; cyclotomic values use the E(N) text syntax and power-map indices
// are 1-based in files. Parsing problems throw TableParseError; semantic
// problems surface through CharacterTable::validate.

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurpow/character_table.hpp"
#include "schurpow/dixon.hpp"
#include "schurpow/group.hpp"

namespace schurpow {

struct TableParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw TableParseError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline Cyclotomic parse_table_value(const nlohmann::json& v) {
    if (v.is_number_integer()) return Cyclotomic::integer(v.get<long long>());
    if (v.is_string()) {
        try {
            return Cyclotomic::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw TableParseError(std::string("bad cyclotomic value: ") + e.what());
        }
    }
    throw TableParseError("character values must be integers or E(N) strings");
}

inline CharacterTable character_table_from_json(const nlohmann::json& j) {
    CharacterTable t;
    try {
        t.name = j.at("group_name").get<std::string>();
        t.order = j.at("order").get<long long>();
        if (j.contains("provenance")) t.provenance = j.at("provenance").get<std::string>();
        for (const auto& c : j.at("classes")) {
            ClassInfo info;
            info.label = c.at("label").get<std::string>();
            info.element_order = c.at("element_order").get<long long>();
            info.size = c.at("size").get<long long>();
            t.classes.push_back(std::move(info));
        }
        if (j.contains("power_maps"))
            for (const auto& [key, val] : j.at("power_maps").items()) {
                long long m = std::stoll(key);
                std::vector<std::size_t> pm;
                for (const auto& idx : val) {
                    long long one_based = idx.get<long long>();
                    if (one_based < 1 || one_based > static_cast<long long>(t.classes.size()))
                        throw TableParseError("power map index out of range");
                    pm.push_back(static_cast<std::size_t>(one_based - 1));
                }
                t.prime_power_maps[m] = std::move(pm);
            }
        for (const auto& row : j.at("irreducibles")) {
            std::vector<Cyclotomic> values;
            for (const auto& v : row) values.push_back(parse_table_value(v));
            t.irreducibles.push_back(std::move(values));
        }
    } catch (const TableParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw TableParseError(std::string("bad character-table document: ") + e.what());
    }
    return t;
}

/// Parses a table file without validating it.
inline CharacterTable read_character_table(const std::string& path) {
    return character_table_from_json(read_json_file(path));
}

/// Parses and validates; throws TableParseError or TableValidationError.
inline CharacterTable load_character_table(const std::string& path) {
    CharacterTable t = read_character_table(path);
    t.validate_or_throw();
    return t;
}

inline nlohmann::json character_table_to_json(const CharacterTable& t) {
    nlohmann::ordered_json j;
    j["group_name"] = t.name;
    j["order"] = t.order;
    if (!t.provenance.empty()) j["provenance"] = t.provenance;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& c : t.classes)
        j["classes"].push_back({{"label", c.label}, {"element_order", c.element_order}, {"size", c.size}});
    nlohmann::ordered_json pm = nlohmann::ordered_json::object();
    for (const auto& [m, map] : t.prime_power_maps) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t idx : map) arr.push_back(idx + 1);
        pm[std::to_string(m)] = std::move(arr);
    }
    j["power_maps"] = std::move(pm);
    j["irreducibles"] = nlohmann::ordered_json::array();
    for (const auto& row : t.irreducibles) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& v : row) arr.push_back(v.to_string());
        j["irreducibles"].push_back(std::move(arr));
    }
    return j;
}

inline void write_character_table(const CharacterTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << character_table_to_json(t).dump(1) << "\n";
}

/// Group description: permutation generators in cycle notation, or square
/// matrix generators over "gf q" / "cyc N".
struct GroupSpec {
    std::string name;
    std::string provenance;
    std::string kind;  // "permutation" or "matrix"
    int degree = 0;
    std::string field;
    int dim = 0;
    std::vector<std::string> perm_generators;
    std::vector<std::vector<nlohmann::json>> matrix_generators;
};

inline GroupSpec group_spec_from_json(const nlohmann::json& j) {
    GroupSpec s;
    try {
        s.name = j.at("group_name").get<std::string>();
        if (j.contains("provenance")) s.provenance = j.at("provenance").get<std::string>();
        s.kind = j.at("kind").get<std::string>();
        if (s.kind == "permutation") {
            s.degree = j.at("degree").get<int>();
            for (const auto& g : j.at("generators")) s.perm_generators.push_back(g.get<std::string>());
        } else if (s.kind == "matrix") {
            s.field = j.at("field").get<std::string>();
            s.dim = j.at("dim").get<int>();
            for (const auto& g : j.at("generators")) {
                std::vector<nlohmann::json> entries;
                for (const auto& e : g) entries.push_back(e);
                if (entries.size() != static_cast<std::size_t>(s.dim) * static_cast<std::size_t>(s.dim))
                    throw TableParseError("matrix generator entry count mismatch");
                s.matrix_generators.push_back(std::move(entries));
            }
        } else {
            throw TableParseError("group kind must be 'permutation' or 'matrix'");
        }
    } catch (const TableParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw TableParseError(std::string("bad group document: ") + e.what());
    }
    return s;
}

inline GroupSpec read_group_spec(const std::string& path) { return group_spec_from_json(read_json_file(path)); }

/// Enumerates the group described by a GroupSpec.
inline EnumeratedGroup build_group(const GroupSpec& s, std::size_t cap = kDefaultGroupCap) {
    if (s.kind == "permutation") {
        PermutationOps ops{s.degree};
        std::vector<Permutation> gens;
        for (const auto& text : s.perm_generators) gens.push_back(Permutation::from_cycles(text, s.degree));
        return EnumeratedGroup::enumerate(s.name, ops, gens, cap);
    }
    std::istringstream fs(s.field);
    std::string tag;
    long long param = 0;
    fs >> tag >> param;
    if (tag == "gf") {
        FqMatrixOps ops{std::make_shared<SmallField>(param), s.dim};
        std::vector<FqMatrix> gens;
        for (const auto& entries : s.matrix_generators) {
            FqMatrix m;
            m.dim = s.dim;
            for (const auto& e : entries) {
                if (!e.is_number_integer()) throw TableParseError("gf matrix entries must be integers");
                long long v = e.get<long long>();
                if (!ops.field->valid(v)) throw TableParseError("gf matrix entry out of range");
                m.entries.push_back(static_cast<int>(v));
            }
            gens.push_back(std::move(m));
        }
        return EnumeratedGroup::enumerate(s.name, ops, gens, cap);
    }
    if (tag == "cyc") {
        CycMatrixOps ops{s.dim};
        std::vector<CycMatrix> gens;
        for (const auto& entries : s.matrix_generators) {
            CycMatrix m;
            m.dim = s.dim;
            for (const auto& e : entries) m.entries.push_back(parse_table_value(e));
            gens.push_back(std::move(m));
        }
        return EnumeratedGroup::enumerate(s.name, ops, gens, cap);
    }
    throw TableParseError("unknown matrix field tag '" + s.field + "' (expected 'gf q' or 'cyc N')");
}

/// Loads a character table from either a table file or a group file (in which
/// case the table is computed from the generators).
inline CharacterTable acquire_character_table(const std::string& path, std::size_t cap = kDefaultGroupCap) {
    nlohmann::json j = read_json_file(path);
    if (j.contains("irreducibles")) {
        CharacterTable t = character_table_from_json(j);
        t.validate_or_throw();
        return t;
    }
    if (j.contains("generators")) {
        GroupSpec spec = group_spec_from_json(j);
        EnumeratedGroup g = build_group(spec, cap);
        ConjugacyClasses cc = conjugacy_classes(g);
        CharacterTable t = compute_character_table(g, cc);
        if (!spec.provenance.empty()) t.provenance = spec.provenance;
        return t;
    }
    throw TableParseError("'" + path + "' is neither a character-table nor a group file");
}

}  // namespace schurpow
