#include "stickermc/model.hpp"

#include <algorithm>
#include <tuple>

namespace stickermc {

bool SystemModel::has_state(StateId s) const {
    return std::binary_search(states.begin(), states.end(), s);
}

const Valuation& SystemModel::label(StateId s) const {
    auto it = labeling.find(s);
    if (it == labeling.end())
        throw std::invalid_argument("state " + std::to_string(s) + " has no labeling");
    return it->second;
}

std::vector<StateId> SystemModel::successors(StateId s) const {
    std::vector<StateId> out;
    for (auto it = edges.lower_bound({s, 0}); it != edges.end() && it->first == s; ++it)
        out.push_back(it->second);
    return out;  // set iteration order is already ascending
}

std::set<std::string> SystemModel::propositions() const {
    std::set<std::string> props;
    for (const auto& [state, v] : labeling)
        for (const auto& [prop, val] : v.values()) props.insert(prop);
    return props;
}

std::vector<Violation> validate_model(const SystemModel& m) {
    std::vector<Violation> out;
    if (m.states.empty()) out.push_back({"model has no states"});
    if (!m.states.empty() && !m.has_state(m.initial))
        out.push_back({"initial state " + std::to_string(m.initial) + " is not a declared state"});
    for (const auto& [from, to] : m.edges) {
        if (!m.has_state(from))
            out.push_back({"edge " + std::to_string(from) + " -> " + std::to_string(to) +
                           " leaves undeclared state " + std::to_string(from)});
        if (!m.has_state(to))
            out.push_back({"edge " + std::to_string(from) + " -> " + std::to_string(to) +
                           " enters undeclared state " + std::to_string(to)});
    }
    const auto props = m.propositions();
    for (StateId s : m.states) {
        auto it = m.labeling.find(s);
        if (it == m.labeling.end()) {
            out.push_back({"state " + std::to_string(s) + " has no labeling"});
            continue;
        }
        for (const auto& prop : props)
            if (!it->second.has(prop))
                out.push_back({"labeling of state " + std::to_string(s) +
                               " does not assign proposition '" + prop + "'"});
    }
    for (const auto& [s, v] : m.labeling)
        if (!m.has_state(s))
            out.push_back({"labeling mentions undeclared state " + std::to_string(s)});
    return out;
}

RunPath make_run_path(const SystemModel& m, std::vector<StateId> states) {
    if (states.empty()) throw std::invalid_argument("run path must be non-empty");
    if (states.front() != m.initial)
        throw std::invalid_argument("run path must start at the initial state " +
                                    std::to_string(m.initial));
    for (std::size_t i = 0; i + 1 < states.size(); ++i)
        if (!m.edges.count({states[i], states[i + 1]}))
            throw std::invalid_argument("run path uses non-edge " + std::to_string(states[i]) +
                                        " -> " + std::to_string(states[i + 1]));
    return RunPath{std::move(states)};
}

std::vector<Letter> emittable_letters(const Valuation& v, const std::vector<Letter>& alphabet) {
    std::vector<Letter> out;
    for (const Letter& l : alphabet)
        if (v.satisfies(l.condition)) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t FormulaFsa::state_index(const std::string& state_name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == state_name) return i;
    throw std::invalid_argument("automaton has no state '" + state_name + "'");
}

const Letter* FormulaFsa::find_letter(const std::string& letter_name) const {
    for (const Letter& l : alphabet)
        if (l.name == letter_name) return &l;
    return nullptr;
}

std::set<std::size_t> FormulaFsa::next(std::size_t from, const std::string& letter_name) const {
    auto it = transitions.find({from, letter_name});
    if (it == transitions.end()) return {};
    return it->second;
}

std::vector<std::tuple<std::size_t, std::string, std::size_t>> FormulaFsa::transition_list()
    const {
    std::vector<std::tuple<std::size_t, std::string, std::size_t>> out;
    for (const auto& [key, tos] : transitions)
        for (std::size_t to : tos) out.emplace_back(key.first, key.second, to);
    std::sort(out.begin(), out.end());
    return out;
}

void check_formula_fsa(const FormulaFsa& a) {
    if (a.states.empty()) throw std::invalid_argument("automaton has no states");
    std::set<std::string> names(a.states.begin(), a.states.end());
    if (names.size() != a.states.size())
        throw std::invalid_argument("automaton state names are not unique");
    if (a.initial >= a.states.size()) throw std::invalid_argument("initial state out of range");
    for (std::size_t f : a.accepting)
        if (f >= a.states.size()) throw std::invalid_argument("accepting state out of range");
    std::set<std::string> letter_names;
    for (const Letter& l : a.alphabet) {
        if (l.name.empty()) throw std::invalid_argument("letter with empty name");
        if (!letter_names.insert(l.name).second)
            throw std::invalid_argument("duplicate letter '" + l.name + "' in alphabet");
    }
    for (const auto& [key, tos] : a.transitions) {
        if (key.first >= a.states.size())
            throw std::invalid_argument("transition from unknown state index");
        if (!letter_names.count(key.second))
            throw std::invalid_argument("transition on letter '" + key.second +
                                        "' not in alphabet");
        for (std::size_t to : tos)
            if (to >= a.states.size())
                throw std::invalid_argument("transition to unknown state index");
    }
}

bool valid_bases(const std::string& seq) {
    for (char c : seq)
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T') return false;
    return true;
}

}  // namespace stickermc
