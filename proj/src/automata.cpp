#include "stickermc/automata.hpp"

#include <algorithm>

namespace stickermc {

namespace {

std::string single_literal_name(const std::string& prop, bool value) {
    if (value) return prop;
    if (prop == "p") return "r";
    if (prop == "q") return "s";
    return "!" + prop;
}

void add_transition(FormulaFsa& a, std::size_t from, const Letter& l, std::size_t to) {
    if (const Letter* existing = a.find_letter(l.name)) {
        if (existing->condition != l.condition)
            throw std::invalid_argument("letter name '" + l.name +
                                        "' collides with a reserved negation name");
    } else {
        a.alphabet.push_back(l);
    }
    a.transitions[{from, l.name}].insert(to);
}

void sort_alphabet(FormulaFsa& a) {
    std::sort(a.alphabet.begin(), a.alphabet.end());
}

}  // namespace

Letter letter_for(const Condition& c) {
    if (c.size() == 1) {
        const auto& [prop, value] = *c.begin();
        return Letter{single_literal_name(prop, value), c};
    }
    if (c == Condition{{"p", false}, {"q", false}}) return Letter{"u", c};
    std::string name;
    for (const auto& [prop, value] : c) {
        if (!name.empty()) name += "&";
        name += single_literal_name(prop, value);
    }
    return Letter{name, c};
}

Letter letter_for(const Literal& l) { return letter_for(Condition{{l.prop, !l.negated}}); }

FormulaFsa build_formula_fsa(const LtlObligation& g) {
    FormulaFsa a;
    const Letter lp = letter_for(g.atom_p);
    const Letter lnp = letter_for(negate(g.atom_p));
    switch (g.kind) {
        case LtlKind::Until: {
            // a0 loops on p until q moves to the accepting a1, which then
            // absorbs every valuation (p or not-p covers all of them).
            const Letter lq = letter_for(*g.atom_q);
            a.name = "A(" + render_obligation(g) + ")";
            a.states = {"a0", "a1"};
            a.initial = 0;
            a.accepting = {1};
            add_transition(a, 0, lp, 0);
            add_transition(a, 0, lq, 1);
            add_transition(a, 1, lp, 1);
            add_transition(a, 1, lnp, 1);
            break;
        }
        case LtlKind::Phi1: {
            // Complement of Until(!p', !q') for Phi1(p', q'): wait on s
            // (= q' holds), witness u (= both atoms hold), close on the
            // first failure of q', then absorb.
            const Letter ls = letter_for(*g.atom_q);
            const Letter lq = letter_for(negate(*g.atom_q));
            Condition both = ls.condition;
            bool contradictory = false;
            for (const auto& [prop, v] : lp.condition) {
                auto it = both.find(prop);
                if (it != both.end() && it->second != v) contradictory = true;
                both[prop] = v;
            }
            a.name = "A(" + render_obligation(g) + ")";
            a.states = {"s0", "s1", "s2"};
            a.initial = 0;
            a.accepting = {0, 1, 2};
            add_transition(a, 0, ls, 0);
            add_transition(a, 1, ls, 1);
            add_transition(a, 1, lq, 2);
            add_transition(a, 2, ls, 2);
            add_transition(a, 2, lq, 2);
            if (!contradictory) {
                // A contradictory conjunction never fires; its transition
                // and letter are omitted.
                const Letter lu = letter_for(both);
                add_transition(a, 0, lu, 1);
                add_transition(a, 2, lu, 2);
            }
            break;
        }
        case LtlKind::Finally: {
            a.name = "A(" + render_obligation(g) + ")";
            a.states = {"f0", "f1"};
            a.initial = 0;
            a.accepting = {1};
            add_transition(a, 0, lnp, 0);
            add_transition(a, 0, lp, 1);
            add_transition(a, 1, lp, 1);
            add_transition(a, 1, lnp, 1);
            break;
        }
        case LtlKind::Globally: {
            a.name = "A(" + render_obligation(g) + ")";
            a.states = {"g0"};
            a.initial = 0;
            a.accepting = {0};
            add_transition(a, 0, lp, 0);
            break;
        }
        case LtlKind::Next: {
            a.name = "A(" + render_obligation(g) + ")";
            a.states = {"x0", "x1", "x2"};
            a.initial = 0;
            a.accepting = {2};
            add_transition(a, 0, lp, 1);
            add_transition(a, 0, lnp, 1);
            add_transition(a, 1, lp, 2);
            add_transition(a, 2, lp, 2);
            add_transition(a, 2, lnp, 2);
            break;
        }
    }
    sort_alphabet(a);
    check_formula_fsa(a);
    return a;
}

FormulaFsa phi1_compact_fsa() {
    FormulaFsa a;
    a.name = "A1";
    a.states = {"s0", "s1", "s2"};
    a.initial = 0;
    a.accepting = {2};
    const Letter ls = letter_for(Condition{{"q", false}});
    const Letter lu = letter_for(Condition{{"p", false}, {"q", false}});
    const Letter lq = letter_for(Condition{{"q", true}});
    add_transition(a, 0, ls, 0);
    add_transition(a, 0, lu, 1);
    add_transition(a, 0, ls, 2);
    add_transition(a, 1, ls, 1);
    add_transition(a, 1, lq, 2);
    sort_alphabet(a);
    check_formula_fsa(a);
    return a;
}

FormulaFsa relabel(const FormulaFsa& a, const std::map<std::string, Letter>& substitution) {
    for (const auto& [from, to] : substitution)
        if (!a.find_letter(from))
            throw std::invalid_argument("substitution key '" + from + "' not in alphabet");
    FormulaFsa out;
    out.name = a.name;
    out.states = a.states;
    out.initial = a.initial;
    out.accepting = a.accepting;
    std::set<std::string> images;
    for (const Letter& l : a.alphabet) {
        auto it = substitution.find(l.name);
        const Letter& img = it == substitution.end() ? l : it->second;
        if (!images.insert(img.name).second)
            throw std::invalid_argument("relabel images collide on '" + img.name + "'");
        out.alphabet.push_back(img);
    }
    for (const auto& [key, tos] : a.transitions) {
        auto it = substitution.find(key.second);
        const std::string& name = it == substitution.end() ? key.second : it->second.name;
        out.transitions[{key.first, name}].insert(tos.begin(), tos.end());
    }
    std::sort(out.alphabet.begin(), out.alphabet.end());
    check_formula_fsa(out);
    return out;
}

bool fsa_accepts(const FormulaFsa& a, const Word& w) {
    std::set<std::size_t> cur{a.initial};
    for (const Letter& l : w) {
        if (!a.find_letter(l.name))
            throw std::invalid_argument("letter '" + l.name + "' not in alphabet");
        std::set<std::size_t> nxt;
        for (std::size_t q : cur) {
            auto tos = a.next(q, l.name);
            nxt.insert(tos.begin(), tos.end());
        }
        cur = std::move(nxt);
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(),
                       [&](std::size_t q) { return a.accepting.count(q) != 0; });
}

bool accepts_trace(const FormulaFsa& a, std::span<const Valuation> vs) {
    std::set<std::size_t> cur{a.initial};
    for (const Valuation& v : vs) {
        std::set<std::size_t> nxt;
        for (const Letter& l : a.alphabet) {
            if (!v.satisfies(l.condition)) continue;
            for (std::size_t q : cur) {
                auto tos = a.next(q, l.name);
                nxt.insert(tos.begin(), tos.end());
            }
        }
        cur = std::move(nxt);
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(),
                       [&](std::size_t q) { return a.accepting.count(q) != 0; });
}

bool accepts_run(const FormulaFsa& a, const RunPath& path, const SystemModel& m) {
    std::vector<Valuation> vs;
    vs.reserve(path.size());
    for (StateId s : path.states) vs.push_back(m.label(s));
    return accepts_trace(a, vs);
}

}  // namespace stickermc
