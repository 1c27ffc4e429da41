#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "snaqa/core.hpp"
#include "snaqa/schema.hpp"

namespace snaqa {

inline constexpr const char* kMakeThing = "makeOWLThing";
inline constexpr const char* kDifferentFrom = "differentFrom";

struct Term {
    bool is_variable = false;
    std::string var;
    Value value;

    static Term variable(std::string name) {
        Term t;
        t.is_variable = true;
        t.var = std::move(name);
        return t;
    }
    static Term constant(Value v) {
        Term t;
        t.value = std::move(v);
        return t;
    }
};

struct RuleAtom {
    enum class Kind { class_atom, property_atom, builtin };
    Kind kind = Kind::class_atom;
    std::string name;
    std::vector<Term> terms;

    bool is_builtin(const char* builtin) const { return kind == Kind::builtin && name == builtin; }
};

struct Rule {
    std::string id;
    std::vector<RuleAtom> antecedent;
    std::vector<RuleAtom> consequent;
};

struct RuleSet {
    std::vector<Rule> rules;
};

struct Diagnostic {
    std::string rule_id;
    std::string message;
};

namespace detail {

// Rule-language tokenizer. '#' comments run to end of line; whitespace and
// newlines are insignificant.
class RuleLexer {
public:
    enum class Tok { ident, variable, string, number, lparen, rparen, comma, caret, arrow, colon, end };

    struct Token {
        Tok kind = Tok::end;
        std::string text;
        bool is_float = false;
        int line = 1, col = 1;
    };

    explicit RuleLexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::end;
            return;
        }
        char c = src_[pos_];
        if (c == '(') { tok_.kind = Tok::lparen; bump(); return; }
        if (c == ')') { tok_.kind = Tok::rparen; bump(); return; }
        if (c == ',') { tok_.kind = Tok::comma; bump(); return; }
        if (c == '^') { tok_.kind = Tok::caret; bump(); return; }
        if (c == ':') { tok_.kind = Tok::colon; bump(); return; }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            tok_.kind = Tok::arrow;
            bump();
            bump();
            return;
        }
        if (c == '?') {
            bump();
            if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
                throw parse_error("variable name must start with a letter", tok_.line, tok_.col);
            tok_.kind = Tok::variable;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                tok_.text.push_back(src_[pos_]);
                bump();
            }
            return;
        }
        if (c == '"') {
            bump();
            tok_.kind = Tok::string;
            while (true) {
                if (pos_ >= src_.size()) throw parse_error("unterminated string literal", tok_.line, tok_.col);
                char d = src_[pos_];
                bump();
                if (d == '"') break;
                if (d == '\\') {
                    if (pos_ >= src_.size()) throw parse_error("unterminated escape", line_, col_);
                    char e = src_[pos_];
                    bump();
                    switch (e) {
                    case 'n': tok_.text.push_back('\n'); break;
                    case 't': tok_.text.push_back('\t'); break;
                    case '"': tok_.text.push_back('"'); break;
                    case '\\': tok_.text.push_back('\\'); break;
                    default: throw parse_error("unknown escape sequence", line_, col_);
                    }
                } else {
                    tok_.text.push_back(d);
                }
            }
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            ((c == '-' || c == '+') && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            tok_.kind = Tok::number;
            if (c == '-' || c == '+') {
                tok_.text.push_back(c);
                bump();
            }
            bool seen_dot = false, seen_exp = false;
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    tok_.text.push_back(d);
                    bump();
                } else if (d == '.' && !seen_dot && !seen_exp) {
                    seen_dot = true;
                    tok_.is_float = true;
                    tok_.text.push_back(d);
                    bump();
                } else if ((d == 'e' || d == 'E') && !seen_exp) {
                    seen_exp = true;
                    tok_.is_float = true;
                    tok_.text.push_back(d);
                    bump();
                    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                        tok_.text.push_back(src_[pos_]);
                        bump();
                    }
                } else {
                    break;
                }
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Tok::ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                    src_[pos_] == '-')) {
                // '-' only stays inside an identifier when not starting "->"
                if (src_[pos_] == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') break;
                tok_.text.push_back(src_[pos_]);
                bump();
            }
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

} // namespace detail

/// Parses rule text:
///
///   rule  := name ":" atoms "->" atoms
///   atoms := atom ("^" atom)*
///   atom  := Ident "(" term ("," term)* ")"
///   term  := "?"Ident | Ident | string | number
///
/// Atom names starting with an upper-case letter are class atoms (arity 1),
/// lower-case names are property atoms (arity 2). makeOWLThing and
/// differentFrom are builtins; a "swrlx:" prefix is accepted and stripped.
inline RuleSet parse_ruleset(std::string_view text) {
    using Lex = detail::RuleLexer;
    Lex lex(text);
    RuleSet rs;

    auto expect = [&](Lex::Tok kind, const char* what) -> Lex::Token {
        Lex::Token t = lex.next();
        if (t.kind != kind) throw parse_error(std::string("expected ") + what, t.line, t.col);
        return t;
    };

    auto parse_term = [&]() -> Term {
        Lex::Token t = lex.next();
        switch (t.kind) {
        case Lex::Tok::variable: return Term::variable(t.text);
        case Lex::Tok::ident: return Term::constant(Value::entity(t.text));
        case Lex::Tok::string: return Term::constant(Value::str(t.text));
        case Lex::Tok::number:
            return Term::constant(t.is_float ? Value::real(std::stod(t.text))
                                             : Value::integer(std::stoll(t.text)));
        default: throw parse_error("expected a term", t.line, t.col);
        }
    };

    auto parse_atom = [&]() -> RuleAtom {
        Lex::Token name = expect(Lex::Tok::ident, "atom name");
        std::string atom_name = name.text;
        if (lex.peek().kind == Lex::Tok::colon) {
            lex.next();
            Lex::Token part = expect(Lex::Tok::ident, "name after prefix");
            if (atom_name != "swrlx")
                throw parse_error("unknown prefix '" + atom_name + ":'", name.line, name.col);
            atom_name = part.text;
        }
        RuleAtom atom;
        atom.name = atom_name;
        expect(Lex::Tok::lparen, "'('");
        atom.terms.push_back(parse_term());
        while (lex.peek().kind == Lex::Tok::comma) {
            lex.next();
            atom.terms.push_back(parse_term());
        }
        expect(Lex::Tok::rparen, "')'");

        if (atom_name == kMakeThing || atom_name == kDifferentFrom) {
            atom.kind = RuleAtom::Kind::builtin;
            if (atom_name == kDifferentFrom && atom.terms.size() != 2)
                throw parse_error("differentFrom takes exactly 2 arguments", name.line, name.col);
            if (atom_name == kMakeThing) {
                if (atom.terms.size() < 2)
                    throw parse_error("makeOWLThing takes at least 2 arguments", name.line, name.col);
                if (!atom.terms[0].is_variable)
                    throw parse_error("makeOWLThing output must be a variable", name.line, name.col);
            }
        } else if (std::isupper(static_cast<unsigned char>(atom_name[0]))) {
            atom.kind = RuleAtom::Kind::class_atom;
            if (atom.terms.size() != 1)
                throw parse_error("class atom '" + atom_name + "' takes exactly 1 argument", name.line,
                                  name.col);
        } else {
            atom.kind = RuleAtom::Kind::property_atom;
            if (atom.terms.size() != 2)
                throw parse_error("property atom '" + atom_name + "' takes exactly 2 arguments",
                                  name.line, name.col);
        }
        return atom;
    };

    auto parse_atoms = [&]() -> std::vector<RuleAtom> {
        std::vector<RuleAtom> atoms;
        atoms.push_back(parse_atom());
        while (lex.peek().kind == Lex::Tok::caret) {
            lex.next();
            atoms.push_back(parse_atom());
        }
        return atoms;
    };

    while (lex.peek().kind != Lex::Tok::end) {
        Rule rule;
        Lex::Token name = expect(Lex::Tok::ident, "rule name");
        rule.id = name.text;
        expect(Lex::Tok::colon, "':' after rule name");
        rule.antecedent = parse_atoms();
        expect(Lex::Tok::arrow, "'->'");
        rule.consequent = parse_atoms();
        rs.rules.push_back(std::move(rule));
    }
    return rs;
}

/// Static checks: name resolution against the schema, variable safety,
/// builtin argument binding, and creation-stratification (a class asserted
/// only on skolem-minted individuals may not feed the antecedent of a rule
/// that itself mints individuals; guarantees termination).
inline std::vector<Diagnostic> validate_rules(const RuleSet& rs, const Schema& schema) {
    std::vector<Diagnostic> diags;
    auto diag = [&](const std::string& rule, const std::string& msg) {
        diags.push_back({rule, msg});
    };

    std::set<std::string> ids;
    for (const auto& r : rs.rules)
        if (!ids.insert(r.id).second) diag(r.id, "duplicate rule id");

    // classes asserted exclusively on makeOWLThing outputs, ruleset-wide
    std::set<std::string> created_only;
    {
        std::set<std::string> created, plain;
        for (const auto& r : rs.rules) {
            std::set<std::string> outs;
            for (const auto& a : r.antecedent)
                if (a.is_builtin(kMakeThing) && a.terms[0].is_variable) outs.insert(a.terms[0].var);
            for (const auto& a : r.consequent)
                if (a.kind == RuleAtom::Kind::class_atom && a.terms[0].is_variable)
                    (outs.count(a.terms[0].var) ? created : plain).insert(a.name);
        }
        for (const auto& c : created)
            if (!plain.count(c)) created_only.insert(c);
    }

    for (const auto& r : rs.rules) {
        std::set<std::string> bound;
        bool mints = false;
        for (const auto& a : r.antecedent) {
            if (a.kind == RuleAtom::Kind::builtin) {
                if (a.is_builtin(kMakeThing)) mints = true;
                continue;
            }
            for (const auto& t : a.terms)
                if (t.is_variable) bound.insert(t.var);
        }

        for (const auto& a : r.antecedent) {
            switch (a.kind) {
            case RuleAtom::Kind::class_atom:
                if (!schema.has_class(a.name)) diag(r.id, "unknown class: " + a.name);
                if (mints && schema.has_class(a.name)) {
                    for (const auto& sub : schema.subclasses_of(a.name))
                        if (created_only.count(sub))
                            diag(r.id, "not creation-stratified: class " + sub +
                                           " exists only on created individuals but feeds a creating rule");
                }
                break;
            case RuleAtom::Kind::property_atom:
                if (schema.resolve_property(a.name).empty())
                    diag(r.id, "unknown property: " + a.name);
                break;
            case RuleAtom::Kind::builtin: {
                bool first = true;
                for (const auto& t : a.terms) {
                    bool is_output = a.is_builtin(kMakeThing) && first;
                    if (t.is_variable && !is_output && !bound.count(t.var))
                        diag(r.id, "builtin argument ?" + t.var + " is not bound by the antecedent");
                    first = false;
                }
                if (a.is_builtin(kMakeThing)) {
                    const Term& out = a.terms[0];
                    if (out.is_variable && bound.count(out.var))
                        diag(r.id, "makeOWLThing output ?" + out.var + " is bound elsewhere in the antecedent");
                }
                break;
            }
            }
        }

        // makeOWLThing outputs must be pairwise distinct
        std::set<std::string> outs;
        for (const auto& a : r.antecedent)
            if (a.is_builtin(kMakeThing) && a.terms[0].is_variable)
                if (!outs.insert(a.terms[0].var).second)
                    diag(r.id, "makeOWLThing output ?" + a.terms[0].var + " minted twice");

        std::set<std::string> safe = bound;
        safe.insert(outs.begin(), outs.end());

        for (const auto& a : r.consequent) {
            if (a.kind == RuleAtom::Kind::builtin) {
                diag(r.id, "builtins may not appear in a consequent");
                continue;
            }
            if (a.kind == RuleAtom::Kind::class_atom && !schema.has_class(a.name))
                diag(r.id, "unknown class: " + a.name);
            if (a.kind == RuleAtom::Kind::property_atom && schema.resolve_property(a.name).empty())
                diag(r.id, "unknown property: " + a.name);
            for (const auto& t : a.terms)
                if (t.is_variable && !safe.count(t.var))
                    diag(r.id, "consequent variable ?" + t.var + " is not bound by the antecedent");
        }
    }
    return diags;
}

} // namespace snaqa
