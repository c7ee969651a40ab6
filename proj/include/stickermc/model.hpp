#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stickermc {

using StateId = std::uint32_t;

/// Conjunction of literals: proposition name -> required truth value.
/// A map cannot hold a proposition both positively and negatively, so
/// every representable condition is satisfiable.
using Condition = std::map<std::string, bool>;

/// Alphabet symbol: a named condition over atomic propositions.
struct Letter {
    std::string name;
    Condition condition;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.name == b.name && a.condition == b.condition;
    }
    friend bool operator<(const Letter& a, const Letter& b) { return a.name < b.name; }
};

/// Total assignment of the model's atomic propositions in one state.
class Valuation {
  public:
    Valuation() = default;
    explicit Valuation(std::map<std::string, bool> values) : values_(std::move(values)) {}

    bool value(const std::string& prop) const {
        auto it = values_.find(prop);
        if (it == values_.end())
            throw std::invalid_argument("valuation has no proposition '" + prop + "'");
        return it->second;
    }

    bool has(const std::string& prop) const { return values_.count(prop) != 0; }

    /// True iff every literal of the condition holds. Throws on a
    /// proposition the valuation does not assign.
    bool satisfies(const Condition& c) const {
        for (const auto& [prop, want] : c)
            if (value(prop) != want) return false;
        return true;
    }

    const std::map<std::string, bool>& values() const { return values_; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.values_ == b.values_;
    }

  private:
    std::map<std::string, bool> values_;
};

/// Labeled finite-state system model: states, edges, one initial state,
/// and a per-state valuation of the atomic propositions.
struct SystemModel {
    std::string name;
    std::vector<StateId> states;  // sorted, unique
    StateId initial = 0;
    std::set<std::pair<StateId, StateId>> edges;
    std::map<StateId, Valuation> labeling;

    bool has_state(StateId s) const;
    const Valuation& label(StateId s) const;
    std::vector<StateId> successors(StateId s) const;  // ascending
    /// Union of all propositions mentioned by any state's labeling.
    std::set<std::string> propositions() const;
};

struct Violation {
    std::string message;
};

/// Checks every SystemModel invariant; empty result iff the model is
/// well formed. Violations are data, not errors.
std::vector<Violation> validate_model(const SystemModel& m);

/// Path through a SystemModel, starting at the initial state and
/// following edges. Construct via make_run_path to enforce both.
struct RunPath {
    std::vector<StateId> states;

    std::size_t size() const { return states.size(); }
    friend bool operator==(const RunPath& a, const RunPath& b) { return a.states == b.states; }
};

/// Validates and wraps a state sequence. Throws std::invalid_argument if
/// the sequence is empty, does not start at the initial state, or
/// contains a pair that is not an edge of the model.
RunPath make_run_path(const SystemModel& m, std::vector<StateId> states);

using Word = std::vector<Letter>;

/// Letters of the alphabet whose condition evaluates true under v,
/// ordered by name. Throws if a condition mentions a proposition v does
/// not assign.
std::vector<Letter> emittable_letters(const Valuation& v, const std::vector<Letter>& alphabet);

/// Nondeterministic finite automaton over named letters. States are
/// indexed contiguously; the index order is the canonical state order
/// used by the sticker encoding.
struct FormulaFsa {
    std::string name;
    std::vector<std::string> states;  // position = state index
    std::size_t initial = 0;
    std::set<std::size_t> accepting;
    std::vector<Letter> alphabet;  // unique names
    std::map<std::pair<std::size_t, std::string>, std::set<std::size_t>> transitions;

    std::size_t state_count() const { return states.size(); }
    std::size_t state_index(const std::string& state_name) const;
    const Letter* find_letter(const std::string& letter_name) const;
    std::set<std::size_t> next(std::size_t from, const std::string& letter_name) const;
    /// All transitions as (from, letter, to), sorted.
    std::vector<std::tuple<std::size_t, std::string, std::size_t>> transition_list() const;
};

/// Throws std::invalid_argument on any violated FormulaFsa invariant.
void check_formula_fsa(const FormulaFsa& a);

enum class Orientation { FiveToThree, ThreeToFive };

/// Single DNA strand. `seq` always stores the bases in physical 5'->3'
/// order; `written` records the direction the strand is rendered in, so
/// written_sequence() of a ThreeToFive strand is the reverse of seq.
struct DnaStrand {
    std::string seq;
    Orientation written = Orientation::FiveToThree;
    std::string name;

    std::string written_sequence() const {
        if (written == Orientation::FiveToThree) return seq;
        return std::string(seq.rbegin(), seq.rend());
    }

    friend bool operator==(const DnaStrand& a, const DnaStrand& b) {
        return a.seq == b.seq && a.written == b.written && a.name == b.name;
    }
};

bool valid_bases(const std::string& seq);

}  // namespace stickermc
