#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "snaqa/core.hpp"
#include "snaqa/schema.hpp"

namespace snaqa {

/// Reserved predicate for class membership facts.
inline constexpr const char* kIsA = "isA";

struct Provenance {
    bool asserted = true;
    std::string rule_id; // set iff inferred

    static Provenance make_asserted() { return {true, {}}; }
    static Provenance inferred(std::string rule) { return {false, std::move(rule)}; }

    std::string describe() const { return asserted ? "asserted" : "inferred:" + rule_id; }

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Fact {
    EntityId subject;
    std::string predicate;
    Value object;
    Provenance provenance;
};

/// One term of a triple pattern: a named variable or a constant value.
/// Predicate positions bind variables to string values holding the name.
class PTerm {
public:
    static PTerm var(std::string name) {
        PTerm t;
        t.var_ = std::move(name);
        return t;
    }
    static PTerm val(Value v) {
        PTerm t;
        t.value_ = std::move(v);
        return t;
    }
    static PTerm ent(std::string name) { return val(Value::entity(std::move(name))); }

    bool is_var() const { return !var_.empty(); }
    const std::string& var_name() const { return var_; }
    const Value& value() const { return value_; }

private:
    std::string var_;
    Value value_;
};

struct TriplePattern {
    PTerm subject;
    PTerm predicate;
    PTerm object;
};

using Binding = std::map<std::string, Value>;

/// Schema-validated fact store with provenance, pattern queries and
/// deterministic skolem minting. Facts are append-only; once saturation has
/// run the store is treated as immutable and may be read concurrently.
class KnowledgeBase {
public:
    explicit KnowledgeBase(Schema schema) : schema_(std::move(schema)) { schema_.finalize(); }

    const Schema& schema() const { return schema_; }

    /// Inserts the fact unless the (subject, predicate, object) triple is
    /// already present (provenance does not participate in identity).
    /// Returns true when the store changed. Throws kb_error on schema
    /// violations: unknown predicate/class, datatype mismatch, literal in an
    /// object-property position.
    bool assert_fact(Fact f) {
        validate(f);
        std::string key = fact_key(f.subject.str(), f.predicate, f.object);
        if (keys_.count(key)) return false;
        std::uint32_t idx = static_cast<std::uint32_t>(facts_.size());
        keys_.insert(std::move(key));
        by_pred_[f.predicate].push_back(idx);
        by_pred_subj_[join(f.predicate, f.subject.str())].push_back(idx);
        by_pred_obj_[join(f.predicate, f.object.encode())].push_back(idx);
        facts_.push_back(std::move(f));
        return true;
    }

    bool add(const std::string& s, const std::string& p, Value o) {
        return assert_fact({EntityId(s), p, std::move(o), Provenance::make_asserted()});
    }
    bool add(const EntityId& s, const std::string& p, Value o) {
        return assert_fact({s, p, std::move(o), Provenance::make_asserted()});
    }
    bool add_inferred(const EntityId& s, const std::string& p, Value o, const std::string& rule) {
        return assert_fact({s, p, std::move(o), Provenance::inferred(rule)});
    }

    bool contains(const EntityId& s, const std::string& p, const Value& o) const {
        return keys_.count(fact_key(s.str(), canonical_predicate(p), o)) != 0;
    }

    const std::vector<Fact>& facts() const { return facts_; }
    std::size_t size() const { return facts_.size(); }
    const Fact& fact(std::uint32_t idx) const { return facts_[idx]; }

    // --- index access (insertion order, deterministic) ---

    const std::vector<std::uint32_t>* idx_pred(const std::string& pred) const {
        return lookup(by_pred_, canonical_predicate(pred));
    }
    const std::vector<std::uint32_t>* idx_pred_subj(const std::string& pred, const std::string& subj) const {
        return lookup(by_pred_subj_, join(canonical_predicate(pred), subj));
    }
    const std::vector<std::uint32_t>* idx_pred_obj(const std::string& pred, const Value& obj) const {
        return lookup(by_pred_obj_, join(canonical_predicate(pred), obj.encode()));
    }

    /// Objects o with (subj, pred, o), insertion order.
    std::vector<Value> objects_of(const std::string& pred, const EntityId& subj) const {
        std::vector<Value> out;
        if (const auto* v = idx_pred_subj(pred, subj.str()))
            for (auto i : *v) out.push_back(facts_[i].object);
        return out;
    }

    /// Subjects s with (s, pred, obj), insertion order.
    std::vector<EntityId> subjects_of(const std::string& pred, const Value& obj) const {
        std::vector<EntityId> out;
        if (const auto* v = idx_pred_obj(pred, obj))
            for (auto i : *v) out.push_back(facts_[i].subject);
        return out;
    }

    bool has_type(const EntityId& e, const std::string& cls) const {
        return contains(e, kIsA, Value::entity(cls));
    }

    /// Instances of the class and of every subclass.
    std::set<EntityId> class_instances(const std::string& cls) const {
        if (!schema_.has_class(cls)) throw kb_error("unknown class: " + cls);
        std::set<EntityId> out;
        for (const auto& sub : schema_.subclasses_of(cls))
            if (const auto* v = idx_pred_obj(kIsA, Value::entity(sub)))
                for (auto i : *v) out.insert(facts_[i].subject);
        return out;
    }

    /// Conjunctive pattern query. Returns every binding satisfying all
    /// templates simultaneously, sorted by the bound values so the order is
    /// reproducible. Unknown constants simply yield no results.
    std::vector<Binding> query(std::span<const TriplePattern> patterns) const {
        std::vector<Binding> out;
        Binding binding;
        match_from(patterns, 0, binding, out);
        std::sort(out.begin(), out.end(),
                  [](const Binding& a, const Binding& b) { return binding_key(a) < binding_key(b); });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<Binding> query(std::initializer_list<TriplePattern> patterns) const {
        return query(std::span<const TriplePattern>(patterns.begin(), patterns.size()));
    }

    /// Deterministic skolem id for (rule_id, var_name, args): the same key
    /// always mints the same id, distinct keys mint distinct ids, and the id
    /// spells the key out (percent-escaped components, args joined by ',').
    EntityId skolem(const std::string& rule_id, const std::string& var_name,
                    std::span<const Value> args) const {
        if (args.empty()) throw kb_error("skolem requires at least one argument");
        std::string id = detail::escape_component(rule_id);
        id += '/';
        id += detail::escape_component(var_name);
        id += '/';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) id += ',';
            id += skolem_arg(args[i]);
        }
        return EntityId(std::move(id));
    }

    EntityId skolem(const std::string& rule_id, const std::string& var_name,
                    std::initializer_list<Value> args) const {
        return skolem(rule_id, var_name, std::span<const Value>(args.begin(), args.size()));
    }

    /// One fact per line, sorted: `<subject> <predicate> <object> # <provenance>`.
    std::string dump() const {
        std::vector<std::string> lines;
        lines.reserve(facts_.size());
        for (const auto& f : facts_)
            lines.push_back(f.subject.str() + " " + f.predicate + " " + f.object.encode() +
                            " # " + f.provenance.describe());
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (auto& l : lines) {
            out += l;
            out += '\n';
        }
        return out;
    }

private:
    static std::string join(const std::string& a, const std::string& b) {
        std::string k = a;
        k += '\x1f';
        k += b;
        return k;
    }
    static std::string fact_key(const std::string& s, const std::string& p, const Value& o) {
        return join(join(s, p), o.encode());
    }

    static const std::vector<std::uint32_t>* lookup(
        const std::unordered_map<std::string, std::vector<std::uint32_t>>& m, const std::string& k) {
        auto it = m.find(k);
        return it == m.end() ? nullptr : &it->second;
    }

    std::string canonical_predicate(const std::string& p) const {
        if (p == kIsA) return p;
        std::string c = schema_.resolve_property(p);
        return c.empty() ? p : c;
    }

    void validate(Fact& f) const {
        if (f.predicate == kIsA) {
            if (!f.object.is_entity() || !schema_.has_class(f.object.as_entity().str()))
                throw kb_error("isA object must name a schema class: " + f.object.encode());
            return;
        }
        std::string canonical = schema_.resolve_property(f.predicate);
        if (canonical.empty()) throw kb_error("unknown predicate: " + f.predicate);
        f.predicate = canonical;
        const PropertySig& sig = *schema_.find_property(canonical);
        if (sig.range_is_class()) {
            if (!f.object.is_entity())
                throw kb_error("range violation: property " + canonical + " expects an individual, got " +
                               to_string(f.object.kind()));
        } else if (!value_matches(sig.range_datatype(), f.object)) {
            throw kb_error("datatype mismatch: property " + canonical + " expects " +
                           to_string(sig.range_datatype()) + ", got " + to_string(f.object.kind()));
        }
    }

    static std::string skolem_arg(const Value& v) {
        switch (v.kind()) {
        case Value::Kind::entity: return detail::escape_component(v.as_entity().str());
        case Value::Kind::integer: return "int~" + std::to_string(v.as_integer());
        case Value::Kind::string: return "str~" + detail::escape_component(v.as_string());
        case Value::Kind::real: return "flt~" + detail::escape_component(format_full(v.as_real()));
        case Value::Kind::datetime: return "dtm~" + detail::escape_component(v.as_datetime().text);
        }
        return "?";
    }

    static std::string binding_key(const Binding& b) {
        std::string k;
        for (const auto& [name, value] : b) {
            k += name;
            k += '=';
            k += value.encode();
            k += ';';
        }
        return k;
    }

    // Pattern evaluation: left-to-right backtracking join over the index
    // structures; candidate enumeration follows insertion order.
    void match_from(std::span<const TriplePattern> pats, std::size_t at, Binding& binding,
                    std::vector<Binding>& out) const {
        if (at == pats.size()) {
            out.push_back(binding);
            return;
        }
        TriplePattern tp = pats[at];
        if (!tp.predicate.is_var()) {
            // constant predicates normalise to their canonical string form
            const Value& pvc = tp.predicate.value();
            std::string name;
            if (pvc.is_entity()) name = pvc.as_entity().str();
            else if (pvc.kind() == Value::Kind::string) name = pvc.as_string();
            else return;
            tp.predicate = PTerm::val(Value::str(canonical_predicate(name)));
        }

        auto resolved = [&](const PTerm& t, Value& v) -> bool {
            if (!t.is_var()) {
                v = t.value();
                return true;
            }
            auto it = binding.find(t.var_name());
            if (it == binding.end()) return false;
            v = it->second;
            return true;
        };

        Value sv, pv, ov;
        bool sb = resolved(tp.subject, sv);
        bool pb = resolved(tp.predicate, pv);
        bool ob = resolved(tp.object, ov);

        const std::vector<std::uint32_t>* candidates = nullptr;
        std::vector<std::uint32_t> scratch;
        if (pb) {
            if (pv.kind() != Value::Kind::string) return;
            const std::string& pred = pv.as_string();
            if (sb) {
                if (!sv.is_entity()) return;
                candidates = lookup(by_pred_subj_, join(pred, sv.as_entity().str()));
            } else if (ob) {
                candidates = lookup(by_pred_obj_, join(pred, ov.encode()));
            } else {
                candidates = lookup(by_pred_, pred);
            }
            if (!candidates) return;
        } else {
            scratch.resize(facts_.size());
            for (std::uint32_t i = 0; i < facts_.size(); ++i) scratch[i] = i;
            candidates = &scratch;
        }

        for (auto i : *candidates) {
            const Fact& f = facts_[i];
            Binding saved = binding;
            bool ok = unify(tp.subject, Value::entity(f.subject), binding) &&
                      unify(tp.predicate, Value::str(f.predicate), binding) &&
                      unify(tp.object, f.object, binding);
            if (ok) match_from(pats, at + 1, binding, out);
            binding = std::move(saved);
        }
    }

    static bool unify(const PTerm& t, const Value& v, Binding& binding) {
        if (!t.is_var()) return t.value() == v;
        auto [it, fresh] = binding.try_emplace(t.var_name(), v);
        return fresh || it->second == v;
    }

    Schema schema_;
    std::vector<Fact> facts_;
    std::unordered_set<std::string> keys_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> by_pred_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> by_pred_subj_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> by_pred_obj_;
};

} // namespace snaqa
