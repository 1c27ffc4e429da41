#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "snaqa/core.hpp"

namespace snaqa {

enum class PropKind { asserted, inferred };

enum class Datatype { string, integer, real, datetime };

inline std::optional<Datatype> datatype_from_name(std::string_view s) {
    if (s == "string") return Datatype::string;
    if (s == "int") return Datatype::integer;
    if (s == "float") return Datatype::real;
    if (s == "datetime") return Datatype::datetime;
    return std::nullopt;
}

inline const char* to_string(Datatype d) {
    switch (d) {
    case Datatype::string: return "string";
    case Datatype::integer: return "int";
    case Datatype::real: return "float";
    case Datatype::datetime: return "datetime";
    }
    return "?";
}

inline bool value_matches(Datatype d, const Value& v) {
    switch (d) {
    case Datatype::string: return v.kind() == Value::Kind::string;
    case Datatype::integer: return v.kind() == Value::Kind::integer;
    case Datatype::real: return v.kind() == Value::Kind::real;
    case Datatype::datetime: return v.kind() == Value::Kind::datetime;
    }
    return false;
}

/// Declared signature of one property: name, asserted/inferred flavour, the
/// class it hangs off, and a range that is either a class or a datatype.
struct PropertySig {
    std::string name;
    PropKind kind = PropKind::asserted;
    std::string domain_class;
    std::variant<std::string, Datatype> range;

    bool range_is_class() const { return std::holds_alternative<std::string>(range); }
    const std::string& range_class() const { return std::get<std::string>(range); }
    Datatype range_datatype() const { return std::get<Datatype>(range); }
};

/// Class taxonomy plus property signatures. Subclass reasoning here is plain
/// transitive closure over the declared parent edges; nothing OWL-ish beyond
/// that.
class Schema {
public:
    void add_class(const std::string& name, const std::string& parent = "") {
        if (name.empty()) throw schema_error("class name must be non-empty");
        auto [it, fresh] = classes_.try_emplace(name, parent);
        if (!fresh) throw schema_error("duplicate class declaration: " + name);
        (void)it;
    }

    void add_property(PropertySig sig) {
        if (sig.name == "isA")
            throw schema_error("'isA' is reserved for class membership");
        if (!properties_.emplace(sig.name, sig).second)
            throw schema_error("duplicate property name: " + sig.name);
    }

    void add_alias(const std::string& alt, const std::string& canonical) {
        if (properties_.count(alt))
            throw schema_error("alias shadows a declared property: " + alt);
        if (!aliases_.emplace(alt, canonical).second)
            throw schema_error("duplicate alias: " + alt);
    }

    /// Resolves references and rejects subclass cycles. Call once after the
    /// declarations; load_schema does this for you.
    void finalize() const {
        for (const auto& [name, parent] : classes_) {
            if (!parent.empty() && !classes_.count(parent))
                throw schema_error("unknown parent class '" + parent + "' of class " + name);
        }
        for (const auto& [name, sig] : properties_) {
            if (!classes_.count(sig.domain_class))
                throw schema_error("unknown domain class '" + sig.domain_class + "' of property " + name);
            if (sig.range_is_class() && !classes_.count(sig.range_class()))
                throw schema_error("unknown range class '" + sig.range_class() + "' of property " + name);
        }
        for (const auto& [alt, canonical] : aliases_) {
            if (!properties_.count(canonical))
                throw schema_error("alias '" + alt + "' points at unknown property " + canonical);
        }
        // cycle check by walking parent chains
        for (const auto& [name, parent] : classes_) {
            (void)parent;
            std::set<std::string> seen{name};
            std::string cur = name;
            while (true) {
                const std::string& up = classes_.at(cur);
                if (up.empty()) break;
                if (!seen.insert(up).second)
                    throw schema_error("subclass cycle through class " + up);
                cur = up;
            }
        }
    }

    bool has_class(const std::string& name) const { return classes_.count(name) != 0; }

    /// Canonical property name (aliases resolved), or empty if unknown.
    std::string resolve_property(const std::string& name) const {
        if (properties_.count(name)) return name;
        auto it = aliases_.find(name);
        if (it != aliases_.end()) return it->second;
        return {};
    }

    const PropertySig* find_property(const std::string& name) const {
        std::string canonical = resolve_property(name);
        if (canonical.empty()) return nullptr;
        return &properties_.at(canonical);
    }

    bool is_subclass_of(const std::string& cls, const std::string& ancestor) const {
        std::string cur = cls;
        while (true) {
            if (cur == ancestor) return true;
            auto it = classes_.find(cur);
            if (it == classes_.end() || it->second.empty()) return false;
            cur = it->second;
        }
    }

    /// The class together with every descendant, sorted by name.
    std::vector<std::string> subclasses_of(const std::string& cls) const {
        std::vector<std::string> out;
        for (const auto& [name, parent] : classes_) {
            (void)parent;
            if (is_subclass_of(name, cls)) out.push_back(name);
        }
        return out; // classes_ is an ordered map, so already sorted
    }

    std::size_t class_count() const { return classes_.size(); }
    std::size_t property_count() const { return properties_.size(); }

    const std::map<std::string, std::string>& classes() const { return classes_; }
    const std::map<std::string, PropertySig>& properties() const { return properties_; }
    const std::map<std::string, std::string>& aliases() const { return aliases_; }

private:
    std::map<std::string, std::string> classes_; // name -> parent ("" for roots)
    std::map<std::string, PropertySig> properties_;
    std::map<std::string, std::string> aliases_; // alt -> canonical
};

/// Parses the line-oriented schema text:
///
///   class <Name> [< <Parent>]
///   prop <name> <asserted|inferred> <DomainClass> <RangeClassOrDatatype>
///   alias <altName> <canonicalName>
///
/// '#' starts a comment; blank lines are ignored. Datatypes are spelled
/// string|int|float|datetime.
inline Schema load_schema(std::string_view text) {
    Schema schema;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        auto fail = [&](const std::string& msg) -> schema_error {
            return schema_error(msg + " (line " + std::to_string(lineno) + ")");
        };
        if (head == "class") {
            std::string name, arrow, parent;
            if (!(ls >> name)) throw fail("class: missing name");
            if (ls >> arrow) {
                if (arrow != "<" || !(ls >> parent)) throw fail("class: expected '< Parent'");
            }
            schema.add_class(name, parent);
        } else if (head == "prop") {
            std::string name, kind, domain, range;
            if (!(ls >> name >> kind >> domain >> range)) throw fail("prop: expected name kind domain range");
            PropertySig sig;
            sig.name = name;
            if (kind == "asserted") sig.kind = PropKind::asserted;
            else if (kind == "inferred") sig.kind = PropKind::inferred;
            else throw fail("prop: kind must be asserted|inferred");
            sig.domain_class = domain;
            if (auto dt = datatype_from_name(range)) sig.range = *dt;
            else sig.range = range;
            schema.add_property(std::move(sig));
        } else if (head == "alias") {
            std::string alt, canonical;
            if (!(ls >> alt >> canonical)) throw fail("alias: expected alt canonical");
            schema.add_alias(alt, canonical);
        } else {
            throw fail("unknown directive '" + head + "'");
        }
        std::string extra;
        if (ls >> extra) throw fail("trailing tokens after declaration");
    }
    schema.finalize();
    return schema;
}

} // namespace snaqa
