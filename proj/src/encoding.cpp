#include "stickermc/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace stickermc {

std::string CodeTable::spacer_block() const {
    std::string out;
    for (const auto& x : spacers) out += x;
    return out;
}

std::size_t CodeTable::code_length() const {
    return letter_codes.empty() ? 0 : letter_codes.begin()->second.size();
}

const std::string& CodeTable::code_for(const std::string& letter_name) const {
    auto it = letter_codes.find(letter_name);
    if (it == letter_codes.end())
        throw std::invalid_argument("letter '" + letter_name + "' has no code");
    return it->second;
}

void check_code_table(const CodeTable& ct) {
    if (ct.initiator.empty() || !valid_bases(ct.initiator))
        throw std::invalid_argument("bad initiator sequence");
    if (ct.terminator.empty() || !valid_bases(ct.terminator))
        throw std::invalid_argument("bad terminator sequence");
    if (ct.spacers.empty()) throw std::invalid_argument("table needs spacers X0..Xm");
    const std::size_t sl = ct.spacers.front().size();
    for (const auto& x : ct.spacers) {
        if (x.empty() || !valid_bases(x)) throw std::invalid_argument("bad spacer sequence");
        if (x.size() != sl) throw std::invalid_argument("spacers must all have the same length");
    }
    std::set<std::string> seen(ct.spacers.begin(), ct.spacers.end());
    if (seen.size() != ct.spacers.size())
        throw std::invalid_argument("spacers must be pairwise distinct");
    if (ct.letter_codes.empty()) throw std::invalid_argument("table has no letter codes");
    const std::size_t cl = ct.letter_codes.begin()->second.size();
    std::set<std::string> codes;
    for (const auto& [name, code] : ct.letter_codes) {
        if (code.empty() || !valid_bases(code))
            throw std::invalid_argument("bad code for letter '" + name + "'");
        if (code.size() != cl)
            throw std::invalid_argument("letter codes must all have the same length");
        if (!codes.insert(code).second)
            throw std::invalid_argument("letter codes must be injective ('" + name +
                                        "' duplicates another)");
        if (seen.count(code))
            throw std::invalid_argument("code for letter '" + name + "' equals a spacer");
    }
}

CodeTable default_code_table() {
    CodeTable ct;
    ct.initiator = "GCCA";
    ct.terminator = "CGTC";
    ct.spacers = {"GAA", "TTG", "CAA", "GGC"};
    ct.letter_codes = {
        {"p", "CGA"}, {"q", "CCC"}, {"r", "CGC"}, {"s", "AGC"}, {"u", "GCG"}};
    return ct;
}

CodeTable parse_code_table(const std::string& text) {
    CodeTable ct;
    std::map<std::size_t, std::string> spacers;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("code table line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "I1") {
            if (!(ls >> ct.initiator)) fail("I1 needs a sequence");
        } else if (kw == "I2") {
            if (!(ls >> ct.terminator)) fail("I2 needs a sequence");
        } else if (kw == "code") {
            std::string name, seq;
            if (!(ls >> name >> seq)) fail("code needs a letter name and a sequence");
            if (!ct.letter_codes.emplace(name, seq).second)
                fail("duplicate code for letter '" + name + "'");
        } else if (kw.size() > 1 && kw[0] == 'X') {
            std::size_t idx = 0;
            try {
                idx = std::stoul(kw.substr(1));
            } catch (const std::exception&) {
                fail("bad spacer index '" + kw + "'");
            }
            std::string seq;
            if (!(ls >> seq)) fail(kw + " needs a sequence");
            if (!spacers.emplace(idx, seq).second) fail("duplicate spacer " + kw);
        } else {
            fail("unknown directive '" + kw + "'");
        }
    }
    for (std::size_t i = 0; i < spacers.size(); ++i) {
        auto it = spacers.find(i);
        if (it == spacers.end())
            throw std::invalid_argument("spacer indices must be contiguous from X0");
        ct.spacers.push_back(it->second);
    }
    check_code_table(ct);
    return ct;
}

std::string serialize_code_table(const CodeTable& ct) {
    std::ostringstream out;
    out << "I1 " << ct.initiator << "\n";
    out << "I2 " << ct.terminator << "\n";
    for (std::size_t i = 0; i < ct.spacers.size(); ++i)
        out << "X" << i << ' ' << ct.spacers[i] << "\n";
    for (const auto& [name, code] : ct.letter_codes) out << "code " << name << ' ' << code << "\n";
    return out.str();
}

char complement_base(char b) {
    switch (b) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
    }
    throw std::invalid_argument(std::string("not a base: '") + b + "'");
}

std::string reverse_complement(const std::string& seq) {
    std::string out(seq.rbegin(), seq.rend());
    for (char& c : out) c = complement_base(c);
    return out;
}

DnaStrand wc_complement(const DnaStrand& s) {
    DnaStrand out;
    out.seq = reverse_complement(s.seq);
    out.written =
        s.written == Orientation::FiveToThree ? Orientation::ThreeToFive : Orientation::FiveToThree;
    out.name = s.name;
    return out;
}

DnaStrand encode_run(const Word& w, const CodeTable& ct) {
    check_code_table(ct);
    const std::string block = ct.spacer_block();
    std::string seq = ct.initiator + block;
    std::string name = "run:";
    for (std::size_t i = 0; i < w.size(); ++i) {
        seq += ct.code_for(w[i].name);
        seq += block;
        if (i) name += ",";
        name += w[i].name;
    }
    seq += ct.terminator;
    return DnaStrand{seq, Orientation::FiveToThree, name};
}

std::string transition_strand_name(std::size_t from, const std::string& letter,
                                   std::size_t to) {
    return "t" + std::to_string(from) + letter + std::to_string(to);
}

namespace {

std::string join_spacers(const CodeTable& ct, std::size_t first, std::size_t last) {
    std::string out;
    for (std::size_t i = first; i <= last && i < ct.spacers.size(); ++i) out += ct.spacers[i];
    return out;
}

DnaStrand sticker_for_site(const std::string& site, const std::string& name) {
    DnaStrand s = wc_complement(DnaStrand{site, Orientation::FiveToThree, name});
    s.name = name;
    return s;
}

}  // namespace

ClassIILibrary encode_formula_fsa(const FormulaFsa& a, const CodeTable& ct) {
    check_code_table(ct);
    check_formula_fsa(a);
    if (ct.m() != a.state_count())
        throw std::invalid_argument("code table has m=" + std::to_string(ct.m()) +
                                    " but the automaton has " + std::to_string(a.state_count()) +
                                    " states");
    for (const Letter& l : a.alphabet) ct.code_for(l.name);  // fail early on uncoded letters

    ClassIILibrary lib;
    const std::size_t m = ct.m();
    lib.initial_state = a.initial;
    lib.initial = sticker_for_site(ct.initiator + join_spacers(ct, 0, a.initial),
                                   "init-" + a.states[a.initial]);
    for (std::size_t f : a.accepting)
        lib.acceptance.emplace_back(
            f, sticker_for_site(join_spacers(ct, f + 1, m) + ct.terminator, "acc-" + a.states[f]));
    for (const auto& [from, letter, to] : a.transition_list()) {
        const std::string site =
            join_spacers(ct, from + 1, m) + ct.code_for(letter) + join_spacers(ct, 0, to);
        lib.transitions.emplace(std::make_tuple(from, letter, to),
                                sticker_for_site(site, transition_strand_name(from, letter, to)));
    }
    return lib;
}

std::vector<std::tuple<std::string, StrandKind, const DnaStrand*>> ClassIILibrary::entries()
    const {
    std::vector<std::tuple<std::string, StrandKind, const DnaStrand*>> out;
    out.emplace_back(initial.name, StrandKind::Initial, &initial);
    for (const auto& [state, strand] : acceptance)
        out.emplace_back(strand.name, StrandKind::Acceptance, &strand);
    for (const auto& [key, strand] : transitions)
        out.emplace_back(strand.name, StrandKind::Transition, &strand);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::get<0>(x) < std::get<0>(y);
    });
    return out;
}

Word decode_run_strand(const DnaStrand& s, const CodeTable& ct) {
    check_code_table(ct);
    if (s.written != Orientation::ThreeToFive && !valid_bases(s.seq))
        throw std::invalid_argument("strand contains non-base characters");
    if (s.written == Orientation::ThreeToFive)
        throw std::invalid_argument("run strands must be written 5'->3'");
    const std::string& seq = s.seq;
    const std::string block = ct.spacer_block();
    std::map<std::string, std::string> by_code;
    for (const auto& [name, code] : ct.letter_codes) by_code[code] = name;
    const std::size_t cl = ct.code_length();

    std::size_t pos = 0;
    auto expect = [&](const std::string& piece, const std::string& what) {
        if (seq.compare(pos, piece.size(), piece) != 0)
            throw std::invalid_argument("offset " + std::to_string(pos) + ": expected " + what);
        pos += piece.size();
    };
    expect(ct.initiator, "initiator");
    expect(block, "spacer block");
    Word out;
    while (pos < seq.size()) {
        if (seq.size() - pos == ct.terminator.size()) {
            expect(ct.terminator, "terminator");
            return out;
        }
        if (seq.size() - pos < cl + block.size() + ct.terminator.size())
            throw std::invalid_argument("offset " + std::to_string(pos) +
                                        ": strand truncated mid-scheme");
        const std::string code = seq.substr(pos, cl);
        auto it = by_code.find(code);
        if (it == by_code.end())
            throw std::invalid_argument("offset " + std::to_string(pos) + ": unknown letter code " +
                                        code);
        out.push_back(Letter{it->second, {}});
        pos += cl;
        expect(block, "spacer block");
    }
    throw std::invalid_argument("offset " + std::to_string(pos) + ": missing terminator");
}

AuditReport::Composition base_composition(const std::string& name, const std::string& seq) {
    AuditReport::Composition c;
    c.name = name;
    for (char b : seq) {
        if (b == 'A') ++c.a;
        if (b == 'C') ++c.c;
        if (b == 'G') ++c.g;
        if (b == 'T') ++c.t;
    }
    return c;
}

namespace {

using Fragment = std::pair<std::string, std::string>;  // name, seq

// Maximal common substrings of length >= min_hit between f and the
// reverse complement of g: each is a region where the two 5'->3'
// fragments could anneal antiparallel.
void complementary_hits(const Fragment& f, const Fragment& g, std::size_t min_hit,
                        std::vector<AuditReport::Hit>& out) {
    const std::string& a = f.second;
    const std::string b = reverse_complement(g.second);
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<std::size_t>> dp(n + 1, std::vector<std::size_t>(m + 1, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            if (a[i - 1] == b[j - 1]) dp[i][j] = dp[i - 1][j - 1] + 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t len = dp[i][j];
            if (len < min_hit) continue;
            const bool maximal = i == n || j == m || a[i] != b[j];
            if (!maximal) continue;
            // offset_b is reported in g's own coordinates.
            out.push_back({AuditReport::Kind::Overlap, f.first, g.first, i - len,
                           g.second.size() - j, len});
        }
}

}  // namespace

AuditReport audit_code_table(const CodeTable& ct, std::size_t min_hit) {
    if (min_hit < 1) throw std::invalid_argument("min_hit must be >= 1");
    check_code_table(ct);
    AuditReport report;
    report.min_hit = min_hit;

    std::vector<Fragment> fragments;
    fragments.emplace_back("I1", ct.initiator);
    fragments.emplace_back("I2", ct.terminator);
    for (std::size_t i = 0; i < ct.spacers.size(); ++i)
        fragments.emplace_back("X" + std::to_string(i), ct.spacers[i]);
    for (const auto& [name, code] : ct.letter_codes)
        fragments.emplace_back("code " + name, code);

    // Full-fragment duplicates and reverse complements are design errors
    // at any min_hit: a sticker piece intended for one fragment is
    // indistinguishable from (or anneals to) another.
    for (const auto& f : fragments)
        for (const auto& g : fragments) {
            if (f.first == g.first) continue;
            if (f.second == reverse_complement(g.second))
                report.hits.push_back(
                    {AuditReport::Kind::Collision, f.first, g.first, 0, 0, f.second.size()});
            if (f.first < g.first && f.second == g.second)
                report.hits.push_back(
                    {AuditReport::Kind::Collision, f.first, g.first, 0, 0, f.second.size()});
        }

    const std::string block = ct.spacer_block();
    std::vector<Fragment> windows;
    windows.emplace_back("win:init", ct.initiator + block);
    windows.emplace_back("win:term", block + ct.terminator);
    for (const auto& [name, code] : ct.letter_codes)
        windows.emplace_back("win:" + name, block + code);
    for (const auto& f : windows)
        for (const auto& g : windows)
            if (f.first != g.first) complementary_hits(f, g, min_hit, report.hits);

    for (const auto& f : fragments) report.composition.push_back(base_composition(f.first, f.second));
    for (const auto& w : windows) report.composition.push_back(base_composition(w.first, w.second));
    return report;
}

std::string AuditReport::to_text() const {
    std::ostringstream out;
    out << (pass() ? "PASS" : "FAIL") << " at min-hit " << min_hit << " (" << hits.size()
        << (hits.size() == 1 ? " hit)\n" : " hits)\n");
    for (const auto& h : hits) {
        if (h.kind == Kind::Collision)
            out << "collision: " << h.frag_a << " vs " << h.frag_b << " (length " << h.length
                << ")\n";
        else
            out << "overlap: " << h.frag_a << "[" << h.offset_a << "] vs " << h.frag_b << "["
                << h.offset_b << "] length " << h.length << "\n";
    }
    out << "base composition:\n";
    for (const auto& c : composition) {
        const double tot = static_cast<double>(c.total());
        auto pct = [&](std::size_t n) {
            std::ostringstream p;
            p.precision(1);
            p << std::fixed << (tot == 0 ? 0.0 : 100.0 * static_cast<double>(n) / tot);
            return p.str();
        };
        out << "  " << c.name << ": A=" << c.a << " (" << pct(c.a) << "%) C=" << c.c << " ("
            << pct(c.c) << "%) G=" << c.g << " (" << pct(c.g) << "%) T=" << c.t << " ("
            << pct(c.t) << "%)\n";
    }
    return out.str();
}

CodeTable generate_code_table(const std::vector<Letter>& alphabet, std::size_t fsa_state_count,
                              std::size_t code_len, std::size_t spacer_len, std::uint64_t seed) {
    if (alphabet.empty()) throw std::invalid_argument("alphabet must be non-empty");
    if (code_len == 0 || spacer_len == 0)
        throw std::invalid_argument("code and spacer lengths must be positive");
    if (fsa_state_count == 0) throw std::invalid_argument("automaton must have states");
    const double capacity = std::pow(4.0, static_cast<double>(code_len));
    if (capacity < static_cast<double>(alphabet.size() + fsa_state_count + 3))
        throw std::invalid_argument("4^code_len is too small for this alphabet and state count");

    std::mt19937_64 rng(seed);
    auto random_seq = [&](std::size_t len) {
        static const char bases[] = {'A', 'C', 'G', 'T'};
        std::string s(len, 'A');
        for (char& c : s) c = bases[rng() % 4];
        return s;
    };

    const std::size_t max_attempts = 4000;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        CodeTable ct;
        std::set<std::string> used;
        bool ok = true;
        for (std::size_t i = 0; i <= fsa_state_count && ok; ++i) {
            std::string x;
            std::size_t tries = 0;
            do {
                x = random_seq(spacer_len);
                if (++tries > 256) {
                    ok = false;
                    break;
                }
            } while (used.count(x) || used.count(reverse_complement(x)));
            if (!ok) break;
            used.insert(x);
            ct.spacers.push_back(x);
        }
        for (const Letter& l : alphabet) {
            if (!ok) break;
            std::string c;
            std::size_t tries = 0;
            do {
                c = random_seq(code_len);
                if (++tries > 256) {
                    ok = false;
                    break;
                }
            } while (used.count(c) || used.count(reverse_complement(c)));
            if (!ok) break;
            used.insert(c);
            ct.letter_codes.emplace(l.name, c);
        }
        if (!ok) continue;
        ct.initiator = random_seq(code_len + 1);
        ct.terminator = random_seq(code_len + 1);
        if (ct.initiator == ct.terminator) continue;
        try {
            check_code_table(ct);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (audit_code_table(ct, code_len + 1).pass()) return ct;
    }
    throw std::runtime_error("code table search exhausted its candidates");
}

std::string fasta_entry(const DnaStrand& s) {
    return ">" + s.name + (s.written == Orientation::FiveToThree ? " 5to3" : " 3to5") + "\n" +
           s.written_sequence() + "\n";
}

std::string fasta_library(const ClassIILibrary& lib) {
    std::string out;
    for (const auto& [name, kind, strand] : lib.entries()) out += fasta_entry(*strand);
    return out;
}

}  // namespace stickermc
