#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "stickermc/model.hpp"

namespace stickermc {

/// Sticker code table: initiator/terminator anchors, the spacer list
/// X0..Xm, and one code per letter name. m must equal the state count of
/// the automaton being encoded.
struct CodeTable {
    std::string initiator;                         // I1
    std::string terminator;                        // I2
    std::vector<std::string> spacers;              // X0..Xm, m+1 entries
    std::map<std::string, std::string> letter_codes;

    std::size_t m() const { return spacers.empty() ? 0 : spacers.size() - 1; }
    std::string spacer_block() const;              // X0...Xm concatenated
    std::size_t code_length() const;
    const std::string& code_for(const std::string& letter_name) const;
};

/// Throws std::invalid_argument on any violated CodeTable invariant.
void check_code_table(const CodeTable& ct);

/// The code table shipped with the project (covers letters p, q, r, s, u
/// with m = 3).
CodeTable default_code_table();

/// Line-oriented text form: `I1 ...`, `I2 ...`, `X0 ...`, `code s ...`.
CodeTable parse_code_table(const std::string& text);
std::string serialize_code_table(const CodeTable& ct);

/// Watson-Crick complement: the antiparallel strand pairing every base.
/// Physically reverse-complements seq and flips the written direction,
/// so the written rendering is the base-wise complement of the input's.
DnaStrand wc_complement(const DnaStrand& s);

std::string reverse_complement(const std::string& seq);
char complement_base(char b);

/// Class-I strand for a word:
///   5' I1 X0..Xm C(w1) X0..Xm ... C(wn) X0..Xm I2 3'.
DnaStrand encode_run(const Word& w, const CodeTable& ct);

enum class StrandKind { Initial, Acceptance, Transition };

/// One class-II strand per automaton feature: the initial state, each
/// accepting state, and each transition, all written 3'->5'.
struct ClassIILibrary {
    DnaStrand initial;                    // wc(I1 X0..Xi) for the initial state i
    std::size_t initial_state = 0;
    std::vector<std::pair<std::size_t, DnaStrand>> acceptance;  // per accepting state
    std::map<std::tuple<std::size_t, std::string, std::size_t>, DnaStrand> transitions;

    /// All strands with their kinds, ordered by name.
    std::vector<std::tuple<std::string, StrandKind, const DnaStrand*>> entries() const;
};

std::string transition_strand_name(std::size_t from, const std::string& letter,
                                   std::size_t to);

ClassIILibrary encode_formula_fsa(const FormulaFsa& a, const CodeTable& ct);

/// Strict inverse of encode_run. Throws std::invalid_argument naming the
/// first offset where the strand deviates from the scheme.
Word decode_run_strand(const DnaStrand& s, const CodeTable& ct);

/// Cross-hybridization audit. Hits of kind Collision are full-fragment
/// duplicates or reverse complements between distinct named fragments,
/// reported regardless of min_hit; Overlap hits are antiparallel
/// complementary runs of length >= min_hit between distinct scheme
/// windows (I1+spacers, spacers+I2, spacers+code per letter).
struct AuditReport {
    enum class Kind { Collision, Overlap };
    struct Hit {
        Kind kind;
        std::string frag_a, frag_b;
        std::size_t offset_a = 0, offset_b = 0;
        std::size_t length = 0;
    };
    struct Composition {
        std::string name;
        std::size_t a = 0, c = 0, g = 0, t = 0;
        std::size_t total() const { return a + c + g + t; }
    };
    std::vector<Hit> hits;
    std::vector<Composition> composition;
    std::size_t min_hit = 0;

    bool pass() const { return hits.empty(); }
    std::string to_text() const;
};

AuditReport audit_code_table(const CodeTable& ct, std::size_t min_hit);

AuditReport::Composition base_composition(const std::string& name, const std::string& seq);

/// Seeded greedy search for a table whose audit at min_hit = code_len+1
/// is clean. Letter codes have length code_len, spacers spacer_len, the
/// anchors code_len+1. Throws if the candidate space is exhausted.
CodeTable generate_code_table(const std::vector<Letter>& alphabet, std::size_t fsa_state_count,
                              std::size_t code_len, std::size_t spacer_len, std::uint64_t seed);

/// FASTA-like dump entry: `>name orientation` then the written sequence.
std::string fasta_entry(const DnaStrand& s);
std::string fasta_library(const ClassIILibrary& lib);

}  // namespace stickermc
