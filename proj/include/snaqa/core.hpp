#pragma once

#include <compare>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace snaqa {

/// Base class for every error the library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class schema_error : public error {
public:
    using error::error;
};

class kb_error : public error {
public:
    using error::error;
};

/// Parse failure with 1-based source coordinates.
class parse_error : public error {
public:
    parse_error(std::string msg, int line, int column)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class survey_error : public error {
public:
    using error::error;
};

class validation_error : public error {
public:
    using error::error;
};

namespace detail {

inline bool valid_id_char(unsigned char c) {
    return c > 0x20 && c != 0x7f;
}

} // namespace detail

/// Opaque individual identifier. Two ids denote the same individual iff the
/// strings are equal (unique-name assumption). Names must be non-empty and
/// free of whitespace/control bytes.
class EntityId {
public:
    EntityId() = default;

    explicit EntityId(std::string name) : name_(std::move(name)) {
        if (name_.empty())
            throw std::invalid_argument("entity id must be non-empty");
        for (unsigned char c : name_)
            if (!detail::valid_id_char(c))
                throw std::invalid_argument("entity id contains whitespace or control byte: '" + name_ + "'");
    }

    const std::string& str() const noexcept { return name_; }
    bool empty() const noexcept { return name_.empty(); }

    friend auto operator<=>(const EntityId&, const EntityId&) = default;

private:
    std::string name_;
};

/// Calendar timestamp kept as its textual (ISO-8601 style) form; ordering is
/// lexicographic, which matches chronological order for uniform formatting.
struct DateTime {
    std::string text;

    friend auto operator<=>(const DateTime&, const DateTime&) = default;
};

/// A typed object position of a fact: an entity reference or one of the four
/// literal datatypes the schema language knows about.
class Value {
public:
    enum class Kind { entity, string, integer, real, datetime };

    Value() : v_(std::string{}) {}

    static Value entity(EntityId id) { return Value(std::move(id)); }
    static Value entity(std::string name) { return Value(EntityId(std::move(name))); }
    static Value str(std::string s) { return Value(std::move(s), tag_string{}); }
    static Value integer(std::int64_t i) { return Value(i); }
    static Value real(double d) { return Value(d); }
    static Value datetime(std::string iso) { return Value(DateTime{std::move(iso)}); }
    static Value datetime(DateTime dt) { return Value(std::move(dt)); }

    Kind kind() const noexcept { return static_cast<Kind>(v_.index()); }
    bool is_entity() const noexcept { return kind() == Kind::entity; }

    const EntityId& as_entity() const { return std::get<EntityId>(v_); }
    const std::string& as_string() const { return std::get<std::string>(v_); }
    std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
    double as_real() const { return std::get<double>(v_); }
    const DateTime& as_datetime() const { return std::get<DateTime>(v_); }

    /// Unambiguous single-token rendering used by the fact dump and by
    /// internal keys: entities print bare, strings quoted, datetimes with a
    /// leading '@', floats always with '.' or exponent.
    std::string encode() const;

    friend auto operator<=>(const Value&, const Value&) = default;

private:
    struct tag_string {};
    explicit Value(EntityId id) : v_(std::move(id)) {}
    Value(std::string s, tag_string) : v_(std::move(s)) {}
    explicit Value(std::int64_t i) : v_(i) {}
    explicit Value(double d) : v_(d) {}
    explicit Value(DateTime dt) : v_(std::move(dt)) {}

    std::variant<EntityId, std::string, std::int64_t, double, DateTime> v_;
};

inline const char* to_string(Value::Kind k) {
    switch (k) {
    case Value::Kind::entity: return "entity";
    case Value::Kind::string: return "string";
    case Value::Kind::integer: return "int";
    case Value::Kind::real: return "float";
    case Value::Kind::datetime: return "datetime";
    }
    return "?";
}

namespace detail {

/// Percent-escapes everything outside [A-Za-z0-9_.-]. Injective, reversible,
/// and the output is always a valid EntityId fragment.
inline std::string escape_component(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
            c == '_' || c == '.' || c == '-') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

inline std::string quote_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

inline std::string format_double(double d, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, d);
    return buf;
}

} // namespace detail

/// Shortest faithful rendering (round-trips the double).
inline std::string format_full(double d) {
    std::string s = detail::format_double(d, "%.17g");
    // prefer the shorter form when it already round-trips
    for (int prec = 1; prec <= 16; ++prec) {
        char fmt[8];
        std::snprintf(fmt, sizeof fmt, "%%.%dg", prec);
        std::string cand = detail::format_double(d, fmt);
        if (std::stod(cand) == d) return cand;
    }
    return s;
}

/// Report rendering: 9 significant digits.
inline std::string format_sig9(double d) {
    return detail::format_double(d, "%.9g");
}

/// The double nearest to the 9-significant-digit decimal rendering; reports
/// store this so that textual and numeric forms agree byte-for-byte.
inline double round_sig9(double d) {
    return std::stod(format_sig9(d));
}

inline std::string Value::encode() const {
    switch (kind()) {
    case Kind::entity: return as_entity().str();
    case Kind::string: return detail::quote_string(as_string());
    case Kind::integer: return std::to_string(as_integer());
    case Kind::real: {
        std::string s = format_full(as_real());
        if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
        return s;
    }
    case Kind::datetime: return "@" + as_datetime().text;
    }
    return "?";
}

} // namespace snaqa

template <>
struct std::hash<snaqa::EntityId> {
    std::size_t operator()(const snaqa::EntityId& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};
