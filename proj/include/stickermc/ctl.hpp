#pragma once

#include <optional>
#include <string>

#include "stickermc/model.hpp"

namespace stickermc {

/// Atomic proposition or its negation.
struct Literal {
    std::string prop;
    bool negated = false;

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.prop == b.prop && a.negated == b.negated;
    }
};

inline Literal negate(Literal l) { return {l.prop, !l.negated}; }

enum class CtlKind { AU, EU, AF, EF, AG, EG, AX, EX };

/// One of the eight basic branching-time constructs over literal atoms.
/// atom_q is present exactly for AU/EU.
struct CtlConstruct {
    CtlKind kind;
    Literal atom_p;
    std::optional<Literal> atom_q;

    friend bool operator==(const CtlConstruct& a, const CtlConstruct& b) {
        return a.kind == b.kind && a.atom_p == b.atom_p && a.atom_q == b.atom_q;
    }
};

enum class LtlKind { Until, Finally, Globally, Next, Phi1 };

/// Linear-time obligation a construct reduces to. atom_q is present
/// exactly for Until/Phi1. Phi1(a, b) is the single-path complement of
/// Until(!a, !b).
struct LtlObligation {
    LtlKind kind;
    Literal atom_p;
    std::optional<Literal> atom_q;

    friend bool operator==(const LtlObligation& a, const LtlObligation& b) {
        return a.kind == b.kind && a.atom_p == b.atom_p && a.atom_q == b.atom_q;
    }
};

enum class PathQuantifier { Universal, Existential };

struct Reduction {
    LtlObligation obligation;
    bool negate_verdict = false;

    friend bool operator==(const Reduction& a, const Reduction& b) {
        return a.obligation == b.obligation && a.negate_verdict == b.negate_verdict;
    }
};

struct FormulaParseError : std::runtime_error {
    FormulaParseError(const std::string& msg, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + msg),
          pos(position) {}
    std::size_t pos;
};

struct ModelParseError : std::runtime_error {
    ModelParseError(const std::string& msg, std::size_t line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
          line(line_number) {}
    std::size_t line;
};

/// Grammar:  ('A'|'E') atom 'U' atom | ('AF'|'AG'|'AX'|'EF'|'EG'|'EX') atom
/// with atom = ['!'] identifier. Whitespace separates tokens. Nested
/// constructs are rejected.
CtlConstruct parse_formula(const std::string& text);

std::string render_formula(const CtlConstruct& c);
std::string render_literal(const Literal& l);
std::string render_obligation(const LtlObligation& g);

PathQuantifier classify(const CtlConstruct& c);

/// Maps a construct to its obligation. Universal kinds pass through;
/// existential kinds negate the atoms (double negation cancels) and set
/// negate_verdict.
Reduction reduce(const CtlConstruct& c);

/// Line-oriented model format, '#' comments:
///   model NAME
///   states id...
///   init id
///   label id lit...        (lit = p or !p; unmentioned propositions are false)
///   edge src dst
/// The returned model passes validate_model.
SystemModel parse_model(const std::string& text);

std::string serialize_model(const SystemModel& m);

}  // namespace stickermc
