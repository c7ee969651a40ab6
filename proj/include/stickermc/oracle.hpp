#pragma once

#include <span>

#include "stickermc/ctl.hpp"
#include "stickermc/model.hpp"
#include "stickermc/verdict.hpp"

namespace stickermc {

/// Classical finite-trace semantics, evaluated directly:
///   Until(p,q):   some position satisfies q with p at every earlier one
///   Finally(p):   some position satisfies p
///   Globally(p):  every position satisfies p
///   Next(p):      a second position exists and satisfies p
///   Phi1(p,q):    not Until(!p, !q)
/// Throws on an empty sequence.
bool word_satisfies(const LtlObligation& g, std::span<const Valuation> vs);

/// Brute-force verdict over the given runs: universal kinds require the
/// obligation on every run, existential kinds require the un-negated
/// obligation on some run. Independent of the strand pipeline.
Verdict oracle_check(const SystemModel& m, const CtlConstruct& c,
                     const std::vector<RunPath>& runs);

}  // namespace stickermc
