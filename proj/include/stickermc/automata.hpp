#pragma once

#include <map>
#include <span>

#include "stickermc/ctl.hpp"
#include "stickermc/model.hpp"

namespace stickermc {

/// Canonical letter for a condition. Single positive literals keep the
/// proposition name; the negations of p and q and their conjunction use
/// the conventional names r, s, u so the bundled code table applies.
/// Everything else gets a systematic name (!x, a&b, ...).
Letter letter_for(const Condition& c);
Letter letter_for(const Literal& l);

/// Builds the finite-word automaton deciding the obligation on runs:
/// for every valuation sequence vs, some full-length emission word is
/// accepted iff the obligation holds on vs. The Until and Phi1 automata
/// carry an absorbing accepting tail so acceptance is position-exact
/// rather than end-anchored.
FormulaFsa build_formula_fsa(const LtlObligation& g);

/// The compact three-state phi1 automaton whose sticker library ships
/// with the project (five transitions, accepting state s2 only). It
/// agrees with build_formula_fsa(Phi1) on every run whose q-positions
/// are final, which covers the bundled model; it is end-anchored and
/// not a general substitute.
FormulaFsa phi1_compact_fsa();

/// Replaces alphabet letters through the substitution (keys are letter
/// names currently in the alphabet). Structure is unchanged. Throws on
/// colliding images.
FormulaFsa relabel(const FormulaFsa& a, const std::map<std::string, Letter>& substitution);

/// Standard subset simulation; true iff some nondeterministic run over
/// the whole word ends in an accepting state. Throws on a letter outside
/// the alphabet.
bool fsa_accepts(const FormulaFsa& a, const Word& w);

/// True iff some emission word (one emittable alphabet letter per
/// valuation, full length) is accepted. Product reachability over
/// (position, state) pairs, not word enumeration.
bool accepts_trace(const FormulaFsa& a, std::span<const Valuation> vs);

bool accepts_run(const FormulaFsa& a, const RunPath& path, const SystemModel& m);

}  // namespace stickermc
