#include "stickermc/oracle.hpp"

namespace stickermc {

namespace {

bool holds(const Literal& l, const Valuation& v) { return v.value(l.prop) != l.negated; }

}  // namespace

bool word_satisfies(const LtlObligation& g, std::span<const Valuation> vs) {
    if (vs.empty()) throw std::invalid_argument("valuation sequence must be non-empty");
    switch (g.kind) {
        case LtlKind::Until: {
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (!holds(*g.atom_q, vs[i])) continue;
                bool prefix = true;
                for (std::size_t j = 0; j < i && prefix; ++j)
                    prefix = holds(g.atom_p, vs[j]);
                if (prefix) return true;
            }
            return false;
        }
        case LtlKind::Finally: {
            for (const Valuation& v : vs)
                if (holds(g.atom_p, v)) return true;
            return false;
        }
        case LtlKind::Globally: {
            for (const Valuation& v : vs)
                if (!holds(g.atom_p, v)) return false;
            return true;
        }
        case LtlKind::Next:
            return vs.size() >= 2 && holds(g.atom_p, vs[1]);
        case LtlKind::Phi1: {
            LtlObligation u{LtlKind::Until, negate(g.atom_p), negate(*g.atom_q)};
            return !word_satisfies(u, vs);
        }
    }
    throw std::logic_error("unreachable");
}

Verdict oracle_check(const SystemModel& m, const CtlConstruct& c,
                     const std::vector<RunPath>& runs) {
    Verdict v;
    v.construct = c;
    v.reduction = reduce(c);
    v.runs_checked = runs.size();

    // The direct obligation of the construct's path quantifier; for
    // universal kinds it coincides with the reduction.
    LtlObligation direct{};
    switch (c.kind) {
        case CtlKind::AU:
        case CtlKind::EU: direct = {LtlKind::Until, c.atom_p, c.atom_q}; break;
        case CtlKind::AF:
        case CtlKind::EF: direct = {LtlKind::Finally, c.atom_p, std::nullopt}; break;
        case CtlKind::AG:
        case CtlKind::EG: direct = {LtlKind::Globally, c.atom_p, std::nullopt}; break;
        case CtlKind::AX:
        case CtlKind::EX: direct = {LtlKind::Next, c.atom_p, std::nullopt}; break;
    }

    const bool universal = classify(c) == PathQuantifier::Universal;
    bool all_reduced = true;
    bool some_direct = false;
    std::optional<RunPath> witness;
    for (const RunPath& run : runs) {
        std::vector<Valuation> vs;
        vs.reserve(run.size());
        for (StateId s : run.states) vs.push_back(m.label(s));
        const bool reduced_ok = word_satisfies(v.reduction.obligation, vs);
        const bool direct_ok = word_satisfies(direct, vs);
        v.per_run.emplace_back(run, reduced_ok);
        if (!reduced_ok && universal && !witness) witness = run;
        if (direct_ok && !universal && !witness) witness = run;
        all_reduced = all_reduced && reduced_ok;
        some_direct = some_direct || direct_ok;
    }
    v.yes = universal ? all_reduced : some_direct;
    const bool carries_witness = (universal && !v.yes) || (!universal && v.yes);
    if (carries_witness) v.witness = witness;
    return v;
}

}  // namespace stickermc
