#include "stickermc/ctl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stickermc {

namespace {

struct Token {
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back({text.substr(start, i - start), start});
    }
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

const char* kConstructKeywords[] = {"A", "E", "AF", "AG", "AX", "EF", "EG", "EX"};

bool is_construct_keyword(const std::string& s) {
    for (const char* k : kConstructKeywords)
        if (s == k) return true;
    return false;
}

Literal parse_atom(const std::vector<Token>& toks, std::size_t& i, std::size_t end_pos) {
    if (i >= toks.size()) throw FormulaParseError("expected atom", end_pos);
    std::string t = toks[i].text;
    std::size_t pos = toks[i].pos;
    if (t[0] == '(')
        throw FormulaParseError("unexpected '('; nested constructs unsupported", pos);
    if (is_construct_keyword(t))
        throw FormulaParseError("nested constructs unsupported", pos);
    bool neg = false;
    if (t[0] == '!') {
        neg = true;
        t = t.substr(1);
        if (t.empty()) {
            // allow "! p" as two tokens
            ++i;
            if (i >= toks.size()) throw FormulaParseError("expected proposition after '!'", pos);
            t = toks[i].text;
        }
    }
    if (!is_identifier(t)) throw FormulaParseError("expected proposition, got '" + t + "'", pos);
    ++i;
    return Literal{t, neg};
}

}  // namespace

CtlConstruct parse_formula(const std::string& text) {
    const auto toks = tokenize(text);
    const std::size_t end_pos = text.size();
    if (toks.empty()) throw FormulaParseError("empty formula", 0);
    std::size_t i = 0;
    const std::string head = toks[i].text;
    CtlConstruct c{};
    if (head == "A" || head == "E") {
        ++i;
        c.kind = head == "A" ? CtlKind::AU : CtlKind::EU;
        c.atom_p = parse_atom(toks, i, end_pos);
        if (i >= toks.size() || toks[i].text != "U")
            throw FormulaParseError("expected 'U'", i < toks.size() ? toks[i].pos : end_pos);
        ++i;
        c.atom_q = parse_atom(toks, i, end_pos);
    } else if (head == "AF" || head == "AG" || head == "AX" || head == "EF" || head == "EG" ||
               head == "EX") {
        ++i;
        if (head == "AF") c.kind = CtlKind::AF;
        if (head == "AG") c.kind = CtlKind::AG;
        if (head == "AX") c.kind = CtlKind::AX;
        if (head == "EF") c.kind = CtlKind::EF;
        if (head == "EG") c.kind = CtlKind::EG;
        if (head == "EX") c.kind = CtlKind::EX;
        c.atom_p = parse_atom(toks, i, end_pos);
    } else {
        throw FormulaParseError("expected construct keyword, got '" + head + "'", toks[i].pos);
    }
    if (i < toks.size())
        throw FormulaParseError("trailing input '" + toks[i].text + "'", toks[i].pos);
    return c;
}

std::string render_literal(const Literal& l) { return l.negated ? "!" + l.prop : l.prop; }

std::string render_formula(const CtlConstruct& c) {
    switch (c.kind) {
        case CtlKind::AU:
            return "A " + render_literal(c.atom_p) + " U " + render_literal(*c.atom_q);
        case CtlKind::EU:
            return "E " + render_literal(c.atom_p) + " U " + render_literal(*c.atom_q);
        case CtlKind::AF: return "AF " + render_literal(c.atom_p);
        case CtlKind::AG: return "AG " + render_literal(c.atom_p);
        case CtlKind::AX: return "AX " + render_literal(c.atom_p);
        case CtlKind::EF: return "EF " + render_literal(c.atom_p);
        case CtlKind::EG: return "EG " + render_literal(c.atom_p);
        case CtlKind::EX: return "EX " + render_literal(c.atom_p);
    }
    return {};
}

std::string render_obligation(const LtlObligation& g) {
    switch (g.kind) {
        case LtlKind::Until:
            return render_literal(g.atom_p) + " U " + render_literal(*g.atom_q);
        case LtlKind::Finally: return "F " + render_literal(g.atom_p);
        case LtlKind::Globally: return "G " + render_literal(g.atom_p);
        case LtlKind::Next: return "X " + render_literal(g.atom_p);
        case LtlKind::Phi1:
            return "phi1 " + render_literal(g.atom_p) + " " + render_literal(*g.atom_q);
    }
    return {};
}

PathQuantifier classify(const CtlConstruct& c) {
    switch (c.kind) {
        case CtlKind::AU:
        case CtlKind::AF:
        case CtlKind::AG:
        case CtlKind::AX: return PathQuantifier::Universal;
        default: return PathQuantifier::Existential;
    }
}

Reduction reduce(const CtlConstruct& c) {
    switch (c.kind) {
        case CtlKind::AU: return {{LtlKind::Until, c.atom_p, c.atom_q}, false};
        case CtlKind::AF: return {{LtlKind::Finally, c.atom_p, std::nullopt}, false};
        case CtlKind::AG: return {{LtlKind::Globally, c.atom_p, std::nullopt}, false};
        case CtlKind::AX: return {{LtlKind::Next, c.atom_p, std::nullopt}, false};
        case CtlKind::EU: return {{LtlKind::Phi1, negate(c.atom_p), negate(*c.atom_q)}, true};
        case CtlKind::EF: return {{LtlKind::Globally, negate(c.atom_p), std::nullopt}, true};
        case CtlKind::EG: return {{LtlKind::Finally, negate(c.atom_p), std::nullopt}, true};
        case CtlKind::EX: return {{LtlKind::Next, negate(c.atom_p), std::nullopt}, true};
    }
    throw std::logic_error("unreachable");
}

namespace {

StateId parse_state_id(const std::string& tok, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw ModelParseError("state id must be a non-negative integer, got '" + tok + "'", line);
    unsigned long long v = 0;
    try {
        v = std::stoull(tok);
    } catch (const std::exception&) {
        throw ModelParseError("state id out of range: '" + tok + "'", line);
    }
    if (v > 0xFFFFFFFFull) throw ModelParseError("state id out of range: '" + tok + "'", line);
    return static_cast<StateId>(v);
}

}  // namespace

SystemModel parse_model(const std::string& text) {
    SystemModel m;
    bool saw_states = false, saw_init = false, saw_name = false;
    std::map<StateId, std::map<std::string, bool>> raw_labels;
    std::set<std::string> props;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "model") {
            if (saw_name) throw ModelParseError("duplicate model line", lineno);
            if (!(ls >> m.name)) throw ModelParseError("model line needs a name", lineno);
            saw_name = true;
        } else if (kw == "states") {
            if (saw_states) throw ModelParseError("duplicate states line", lineno);
            std::string tok;
            while (ls >> tok) {
                StateId s = parse_state_id(tok, lineno);
                if (std::find(m.states.begin(), m.states.end(), s) != m.states.end())
                    throw ModelParseError("duplicate state id " + tok, lineno);
                m.states.push_back(s);
            }
            if (m.states.empty()) throw ModelParseError("states line declares no states", lineno);
            std::sort(m.states.begin(), m.states.end());
            saw_states = true;
        } else if (kw == "init") {
            if (saw_init) throw ModelParseError("duplicate init line", lineno);
            std::string tok;
            if (!(ls >> tok)) throw ModelParseError("init line needs a state id", lineno);
            m.initial = parse_state_id(tok, lineno);
            saw_init = true;
        } else if (kw == "label") {
            std::string tok;
            if (!(ls >> tok)) throw ModelParseError("label line needs a state id", lineno);
            StateId s = parse_state_id(tok, lineno);
            if (raw_labels.count(s))
                throw ModelParseError("duplicate label line for state " + tok, lineno);
            auto& assign = raw_labels[s];
            std::string lit;
            while (ls >> lit) {
                bool neg = !lit.empty() && lit[0] == '!';
                std::string prop = neg ? lit.substr(1) : lit;
                if (!is_identifier(prop))
                    throw ModelParseError("bad literal '" + lit + "'", lineno);
                if (assign.count(prop) && assign[prop] == neg)
                    throw ModelParseError("contradictory literal '" + lit + "'", lineno);
                assign[prop] = !neg;
                props.insert(prop);
            }
        } else if (kw == "edge") {
            std::string a, b;
            if (!(ls >> a >> b)) throw ModelParseError("edge line needs two state ids", lineno);
            m.edges.insert({parse_state_id(a, lineno), parse_state_id(b, lineno)});
        } else {
            throw ModelParseError("unknown directive '" + kw + "'", lineno);
        }
    }
    if (!saw_states) throw ModelParseError("no states line", lineno);
    if (!saw_init) throw ModelParseError("no initial state", lineno);

    // Close the labeling: every state gets a valuation total over every
    // proposition mentioned anywhere; unmentioned means false.
    for (StateId s : m.states) {
        auto it = raw_labels.find(s);
        if (it == raw_labels.end())
            throw ModelParseError("state " + std::to_string(s) + " has no label line", lineno);
        std::map<std::string, bool> assign;
        for (const auto& p : props) {
            bool v = false;
            auto jt = it->second.find(p);
            if (jt != it->second.end()) v = jt->second;
            assign[p] = v;
        }
        m.labeling.emplace(s, Valuation{std::move(assign)});
    }
    for (const auto& [s, lits] : raw_labels)
        if (!m.has_state(s))
            throw ModelParseError("label for undeclared state " + std::to_string(s), lineno);

    auto violations = validate_model(m);
    if (!violations.empty()) throw ModelParseError(violations.front().message, lineno);
    return m;
}

std::string serialize_model(const SystemModel& m) {
    std::ostringstream out;
    out << "model " << (m.name.empty() ? "unnamed" : m.name) << "\n";
    out << "states";
    for (StateId s : m.states) out << ' ' << s;
    out << "\ninit " << m.initial << "\n";
    for (StateId s : m.states) {
        out << "label " << s;
        for (const auto& [prop, v] : m.label(s).values())
            if (v) out << ' ' << prop;
        out << "\n";
    }
    for (const auto& [a, b] : m.edges) out << "edge " << a << ' ' << b << "\n";
    return out.str();
}

}  // namespace stickermc
