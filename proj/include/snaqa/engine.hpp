#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "snaqa/kb.hpp"
#include "snaqa/rules.hpp"

namespace snaqa {

struct SaturateOptions {
    /// Guard against non-stratified rulesets that escaped validation; a
    /// stratified ruleset converges in a handful of rounds.
    int max_rounds = 10000;
};

struct SaturateStats {
    int rounds = 0;
    std::size_t facts_added = 0;
};

namespace detail {

// Rule compiled against a schema: variables are numbered, class atoms carry
// their subclass closure, property names are canonical, and every
// makeOWLThing carries the skolem-argument recipe (explicit arguments plus
// the remaining antecedent variables in name order, so each distinct firing
// mints its own individual).
struct CompiledRule {
    struct CTerm {
        int slot = -1; // >= 0 selects a variable slot
        Value constant;
    };
    struct Atom {
        bool is_class = false;
        std::string name; // class name or canonical property
        CTerm a, b;       // class atoms use only `a`
        std::vector<std::string> closure;       // class atoms: sorted subclass closure
        std::set<std::string> closure_set;
    };
    struct Filter { // differentFrom
        CTerm a, b;
    };
    struct Mint {
        int out_slot = -1;
        std::string var_name;
        std::vector<CTerm> explicit_args; // from the builtin, output excluded
        std::vector<int> extension_slots; // remaining bound vars, name order
    };
    struct HeadAtom {
        bool is_class = false;
        std::string name;
        CTerm a, b;
    };

    std::string id;
    int n_slots = 0;
    std::vector<std::string> slot_names;
    std::vector<Atom> body;
    std::vector<Filter> filters;
    std::vector<Mint> mints;
    std::vector<HeadAtom> head;
};

inline CompiledRule compile_rule(const Rule& rule, const Schema& schema) {
    CompiledRule cr;
    cr.id = rule.id;

    std::map<std::string, int> slot_of;
    auto slot = [&](const std::string& var) {
        auto [it, fresh] = slot_of.try_emplace(var, cr.n_slots);
        if (fresh) {
            ++cr.n_slots;
            cr.slot_names.push_back(var);
        }
        return it->second;
    };
    auto cterm = [&](const Term& t) {
        CompiledRule::CTerm c;
        if (t.is_variable) c.slot = slot(t.var);
        else c.constant = t.value;
        return c;
    };

    std::set<std::string> output_vars;
    for (const auto& a : rule.antecedent)
        if (a.is_builtin(kMakeThing)) output_vars.insert(a.terms[0].var);

    std::set<std::string> body_vars;
    for (const auto& a : rule.antecedent) {
        if (a.kind == RuleAtom::Kind::builtin) continue;
        for (const auto& t : a.terms)
            if (t.is_variable) body_vars.insert(t.var);
    }

    for (const auto& a : rule.antecedent) {
        switch (a.kind) {
        case RuleAtom::Kind::class_atom: {
            CompiledRule::Atom atom;
            atom.is_class = true;
            atom.name = a.name;
            atom.a = cterm(a.terms[0]);
            atom.closure = schema.subclasses_of(a.name);
            atom.closure_set.insert(atom.closure.begin(), atom.closure.end());
            cr.body.push_back(std::move(atom));
            break;
        }
        case RuleAtom::Kind::property_atom: {
            CompiledRule::Atom atom;
            atom.name = schema.resolve_property(a.name);
            if (atom.name.empty()) throw validation_error(rule.id + ": unknown property " + a.name);
            atom.a = cterm(a.terms[0]);
            atom.b = cterm(a.terms[1]);
            cr.body.push_back(std::move(atom));
            break;
        }
        case RuleAtom::Kind::builtin:
            if (a.is_builtin(kDifferentFrom)) {
                cr.filters.push_back({cterm(a.terms[0]), cterm(a.terms[1])});
            } else {
                CompiledRule::Mint m;
                m.out_slot = slot(a.terms[0].var);
                m.var_name = a.terms[0].var;
                std::set<std::string> in_args;
                for (std::size_t i = 1; i < a.terms.size(); ++i) {
                    m.explicit_args.push_back(cterm(a.terms[i]));
                    if (a.terms[i].is_variable) in_args.insert(a.terms[i].var);
                }
                for (const auto& v : body_vars) // std::set: already name-ordered
                    if (!in_args.count(v) && !output_vars.count(v))
                        m.extension_slots.push_back(slot(v));
                cr.mints.push_back(std::move(m));
            }
            break;
        }
    }

    for (const auto& a : rule.consequent) {
        CompiledRule::HeadAtom h;
        if (a.kind == RuleAtom::Kind::class_atom) {
            h.is_class = true;
            h.name = a.name;
            h.a = cterm(a.terms[0]);
        } else {
            h.name = schema.resolve_property(a.name);
            if (h.name.empty()) throw validation_error(rule.id + ": unknown property " + a.name);
            h.a = cterm(a.terms[0]);
            h.b = cterm(a.terms[1]);
        }
        cr.head.push_back(std::move(h));
    }
    return cr;
}

// New facts produced this round, indexed by predicate for delta joins.
struct Delta {
    std::map<std::string, std::vector<std::uint32_t>> by_pred;
    bool empty() const { return by_pred.empty(); }
    void add(const KnowledgeBase& kb, std::uint32_t idx) {
        by_pred[kb.fact(idx).predicate].push_back(idx);
    }
};

class RuleEvaluator {
public:
    RuleEvaluator(const KnowledgeBase& kb, const CompiledRule& rule) : kb_(kb), rule_(rule) {}

    /// Joins the body with `delta_atom` (when >= 0) restricted to delta
    /// facts, runs the filters, mints skolems and instantiates the head.
    /// Emits every candidate fact (including ones already present) to `sink`.
    template <class Sink>
    void run(int delta_atom, const Delta* delta, Sink&& sink) {
        slots_.assign(rule_.n_slots, std::nullopt);
        order_ = plan(delta_atom);
        emit_ = [&](const Fact& f) { sink(f); };
        join(0, delta_atom, delta);
    }

private:
    using Slots = std::vector<std::optional<Value>>;

    // Greedy join order: the delta atom first, then repeatedly the atom with
    // the smallest candidate estimate — atoms touching a bound variable or a
    // constant come out as 0, otherwise the relevant index size. Ties keep
    // the written order, so the plan is deterministic; the result does not
    // depend on it either way.
    std::vector<int> plan(int delta_atom) const {
        std::vector<int> order;
        std::vector<bool> used(rule_.body.size(), false);
        std::vector<bool> bound(rule_.n_slots, false);
        auto mark = [&](const CompiledRule::Atom& a) {
            if (a.a.slot >= 0) bound[a.a.slot] = true;
            if (!a.is_class && a.b.slot >= 0) bound[a.b.slot] = true;
        };
        auto is_bound = [&](const CompiledRule::CTerm& t) { return t.slot < 0 || bound[t.slot]; };
        auto estimate = [&](const CompiledRule::Atom& a) -> std::size_t {
            if (is_bound(a.a) || (!a.is_class && is_bound(a.b))) return 0;
            if (a.is_class) {
                std::size_t total = 0;
                for (const auto& cls : a.closure)
                    if (const auto* v = kb_.idx_pred_obj(kIsA, Value::entity(cls))) total += v->size();
                return total;
            }
            const auto* v = kb_.idx_pred(a.name);
            return v ? v->size() : 0;
        };
        if (delta_atom >= 0) {
            order.push_back(delta_atom);
            used[delta_atom] = true;
            mark(rule_.body[delta_atom]);
        }
        while (order.size() < rule_.body.size()) {
            int best = -1;
            std::size_t best_cost = 0;
            for (int i = 0; i < static_cast<int>(rule_.body.size()); ++i) {
                if (used[i]) continue;
                std::size_t cost = estimate(rule_.body[i]);
                if (best < 0 || cost < best_cost) {
                    best = i;
                    best_cost = cost;
                }
            }
            order.push_back(best);
            used[best] = true;
            mark(rule_.body[best]);
        }
        return order;
    }

    std::optional<Value> resolve(const CompiledRule::CTerm& t) const {
        if (t.slot < 0) return t.constant;
        return slots_[t.slot];
    }

    bool bind(const CompiledRule::CTerm& t, const Value& v, std::vector<int>& trail) {
        if (t.slot < 0) return t.constant == v;
        if (slots_[t.slot]) return *slots_[t.slot] == v;
        slots_[t.slot] = v;
        trail.push_back(t.slot);
        return true;
    }

    void undo(const std::vector<int>& trail) {
        for (int s : trail) slots_[s].reset();
    }

    void join(std::size_t depth, int delta_atom, const Delta* delta) {
        if (depth == order_.size()) {
            finish();
            return;
        }
        int ai = order_[depth];
        const auto& atom = rule_.body[ai];
        bool from_delta = (ai == delta_atom);

        auto try_fact = [&](const Fact& f) {
            std::vector<int> trail;
            bool ok;
            if (atom.is_class) {
                ok = f.predicate == kIsA && f.object.is_entity() &&
                     atom.closure_set.count(f.object.as_entity().str()) &&
                     bind(atom.a, Value::entity(f.subject), trail);
            } else {
                ok = f.predicate == atom.name && bind(atom.a, Value::entity(f.subject), trail) &&
                     bind(atom.b, f.object, trail);
            }
            if (ok) join(depth + 1, delta_atom, delta);
            undo(trail);
        };

        if (from_delta) {
            const std::string& pred = atom.is_class ? kIsA : atom.name;
            auto it = delta->by_pred.find(pred);
            if (it == delta->by_pred.end()) return;
            for (auto idx : it->second) try_fact(kb_.fact(idx));
            return;
        }

        if (atom.is_class) {
            auto sv = resolve(atom.a);
            if (sv) {
                if (!sv->is_entity()) return;
                for (const auto& cls : atom.closure)
                    if (kb_.contains(sv->as_entity(), kIsA, Value::entity(cls))) {
                        join(depth + 1, delta_atom, delta);
                        return; // one type suffices; no bindings were added
                    }
                return;
            }
            for (const auto& cls : atom.closure)
                if (const auto* v = kb_.idx_pred_obj(kIsA, Value::entity(cls)))
                    for (auto idx : *v) try_fact(kb_.fact(idx));
            return;
        }

        auto sv = resolve(atom.a);
        auto ov = resolve(atom.b);
        const std::vector<std::uint32_t>* candidates = nullptr;
        if (sv && !sv->is_entity()) return;
        if (sv && ov) {
            if (kb_.contains(sv->as_entity(), atom.name, *ov)) join(depth + 1, delta_atom, delta);
            return;
        } else if (sv) {
            candidates = kb_.idx_pred_subj(atom.name, sv->as_entity().str());
        } else if (ov) {
            candidates = kb_.idx_pred_obj(atom.name, *ov);
        } else {
            candidates = kb_.idx_pred(atom.name);
        }
        if (!candidates) return;
        for (auto idx : *candidates) try_fact(kb_.fact(idx));
    }

    void finish() {
        for (const auto& f : rule_.filters) {
            auto a = resolve(f.a), b = resolve(f.b);
            if (!a || !b || *a == *b) return;
        }
        std::vector<int> minted;
        bool ok = true;
        for (const auto& m : rule_.mints) {
            std::vector<Value> args;
            args.reserve(m.explicit_args.size() + m.extension_slots.size());
            for (const auto& t : m.explicit_args) {
                auto v = resolve(t);
                if (!v) { ok = false; break; }
                args.push_back(*v);
            }
            if (!ok) break;
            for (int s : m.extension_slots) {
                args.push_back(*slots_[s]); // body variables are all bound once the join completes
            }
            slots_[m.out_slot] = Value::entity(kb_.skolem(rule_.id, m.var_name, args));
            minted.push_back(m.out_slot);
        }
        if (ok) {
            for (const auto& h : rule_.head) {
                auto subj = resolve(h.a);
                if (!subj || !subj->is_entity())
                    throw kb_error(rule_.id + ": consequent subject is not an individual");
                Fact f;
                f.subject = subj->as_entity();
                f.provenance = Provenance::inferred(rule_.id);
                if (h.is_class) {
                    f.predicate = kIsA;
                    f.object = Value::entity(h.name);
                } else {
                    auto obj = resolve(h.b);
                    if (!obj) throw kb_error(rule_.id + ": consequent object is unbound");
                    f.predicate = h.name;
                    f.object = *obj;
                }
                emit_(f);
            }
        }
        for (int s : minted) slots_[s].reset();
    }

    const KnowledgeBase& kb_;
    const CompiledRule& rule_;
    Slots slots_;
    std::vector<int> order_;
    std::function<void(const Fact&)> emit_;
};

inline std::string fact_identity(const Fact& f) {
    std::string k = f.subject.str();
    k += '\x1f';
    k += f.predicate;
    k += '\x1f';
    k += f.object.encode();
    return k;
}

} // namespace detail

/// Evaluates one rule against the whole store and returns the facts it would
/// add (deduplicated, not already present). The knowledge base is untouched.
inline std::vector<Fact> apply_rule(const KnowledgeBase& kb, const Rule& rule) {
    detail::CompiledRule cr = detail::compile_rule(rule, kb.schema());
    std::vector<Fact> out;
    std::unordered_set<std::string> seen;
    detail::RuleEvaluator ev(kb, cr);
    ev.run(-1, nullptr, [&](const Fact& f) {
        if (kb.contains(f.subject, f.predicate, f.object)) return;
        if (seen.insert(detail::fact_identity(f)).second) out.push_back(f);
    });
    return out;
}

/// Runs the ruleset to fixpoint with semi-naive (delta-driven) evaluation.
/// The result equals naive iteration; a second call adds nothing. Throws
/// `error` when max_rounds is exceeded, which signals a non-stratified
/// ruleset slipped past validation.
inline SaturateStats saturate(KnowledgeBase& kb, const RuleSet& ruleset, SaturateOptions opts = {}) {
    std::vector<detail::CompiledRule> compiled;
    compiled.reserve(ruleset.rules.size());
    for (const auto& r : ruleset.rules) compiled.push_back(detail::compile_rule(r, kb.schema()));

    SaturateStats stats;
    detail::Delta delta;

    auto insert_batch = [&](const std::vector<Fact>& batch) {
        detail::Delta next;
        for (const auto& f : batch) {
            std::uint32_t idx = static_cast<std::uint32_t>(kb.size());
            if (kb.assert_fact(f)) {
                next.add(kb, idx);
                ++stats.facts_added;
            }
        }
        delta = std::move(next);
    };

    // first round: full evaluation of every rule
    {
        std::vector<Fact> batch;
        std::unordered_set<std::string> seen;
        for (const auto& cr : compiled) {
            detail::RuleEvaluator ev(kb, cr);
            ev.run(-1, nullptr, [&](const Fact& f) {
                if (kb.contains(f.subject, f.predicate, f.object)) return;
                if (seen.insert(detail::fact_identity(f)).second) batch.push_back(f);
            });
        }
        ++stats.rounds;
        insert_batch(batch);
    }

    while (!delta.empty()) {
        if (stats.rounds >= opts.max_rounds)
            throw error("saturation exceeded " + std::to_string(opts.max_rounds) +
                        " rounds; ruleset is not creation-stratified");
        std::vector<Fact> batch;
        std::unordered_set<std::string> seen;
        for (const auto& cr : compiled) {
            for (int ai = 0; ai < static_cast<int>(cr.body.size()); ++ai) {
                detail::RuleEvaluator ev(kb, cr);
                ev.run(ai, &delta, [&](const Fact& f) {
                    if (kb.contains(f.subject, f.predicate, f.object)) return;
                    if (seen.insert(detail::fact_identity(f)).second) batch.push_back(f);
                });
            }
        }
        ++stats.rounds;
        insert_batch(batch);
    }
    return stats;
}

} // namespace snaqa
