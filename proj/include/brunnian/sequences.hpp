#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "brunnian/errors.hpp"

namespace brunnian {

// Finite sequence of residues (r_1, ..., r_l)_m with 0 <= r_i <= m-1, l >= 1.
struct Seq {
    int modulus = 2;
    std::vector<int> entries;

    Seq() = default;
    Seq(int modulus, std::vector<int> entries);
    friend bool operator==(const Seq&, const Seq&) = default;
};

// Canonical ordering for sets of sequences: by length, then lexicographic.
bool seq_less(const Seq& a, const Seq& b);

// Paper notation "(r_1, r_2, ...)_m".
std::string to_string(const Seq& s);
Seq parse_seq(const std::string& text);
std::vector<Seq> parse_chain(const std::string& text);

// delta(s, j) = m if the number of entries equal to j is odd, else 0.
// Requires 1 <= j <= m-1.
int delta(const Seq& s, int j);

// Equivalence class of a sequence under ~_m: the parity, for each value
// j in 1..m-1, of the number of entries equal to j. Zero entries are ignored.
struct ParityClass {
    int modulus = 2;
    std::vector<std::uint8_t> bits;  // m-1 parities

    friend bool operator==(const ParityClass&, const ParityClass&) = default;
    friend bool operator<(const ParityClass& a, const ParityClass& b) {
        return a.bits < b.bits;
    }
};

ParityClass parity_class(const Seq& s);
inline bool equivalent(const Seq& a, const Seq& b) {
    return a.modulus == b.modulus && parity_class(a) == parity_class(b);
}

// The base set S(2) = {(0)_2, (1)_2}.
std::vector<Seq> base_set2();

// The six-element extension S(s_2, 3), hand-coded closed form:
// (0)_3, (2)_3, (r,2)_3, (r,1)_3, (r,delta(s_2,1),1)_3, (r,delta(s_2,1),0)_3.
std::vector<Seq> extend_set3(const Seq& s2);

// Admissible-set element tagged with its construction label (level, v-tag,
// side), following the route-ladder order; used by the adjacency predicate.
struct LabeledSeq {
    Seq seq;
    int level = 0;   // 0 .. m-1
    int vtag = 1;    // 1 or 2
    char side = 'l';  // 'l' or 'r'
};

// The general extension set S(s_2, ..., s_{m-1}, m), m >= 2, reconstructed as
// the ladder of route words: descending j = m-1 .. 1, the route followed to
// level j concatenates the crossing words W_{m-1}, ..., and terminates with
// the entry j (crossing arc b_j) or the placeholder 0 (no final crossing).
// The crossing word W_j is the entries of s_j followed by delta(s_i, j) for
// i = j+1 .. m-1 (and only the deltas for j = 1). For m = 3 this reproduces
// the hand-coded sets verbatim. 2m elements before deduplication.
std::vector<LabeledSeq> extend_set_labeled(const std::vector<Seq>& history, int m);
std::vector<Seq> extend_set(const std::vector<Seq>& history, int m);

// Distinct parity classes of a generated set, each with its canonical
// (minimal by seq_less) representative, in canonical order.
std::vector<Seq> class_representatives(const std::vector<Seq>& set);

// Columns (x_{1,j}, ..., x_{j-1,j}) for j = 2..m of the G recursion.
struct XHistory {
    std::vector<std::vector<int>> columns;  // columns[j-2] has length j-1

    std::size_t top() const { return columns.size() + 1; }  // current m
    int x(std::size_t k, std::size_t j) const { return columns[j - 2][k - 1]; }
};

// G_2 on a modulus-2 class: [(0)_2] -> (0), [(1)_2] -> (1).
std::vector<int> g2(const ParityClass& c);

// One step of the G recursion: the column for s of modulus n+1 given columns
// through n. For k < n: 0 if delta(s,k) = 0; the previous value x_{k,n} if it
// is nonzero; otherwise +-x_{k,n-B} where B is the length of the zero run
// x_{k,n}, x_{k,n-1}, ... (sign + for B even, - for odd) and the virtual base
// x_{k,k} = 1 applies when the run spans the whole row. x_{n,n+1} = 1 iff
// delta(s,n) != 0.
std::vector<int> g_step(const XHistory& h, const Seq& s);

// Full history of a chain (s_2, ..., s_m); each s_i must be a literal member
// of the extension set of its predecessors (InadmissibleChain otherwise).
XHistory g_full(const std::vector<Seq>& chain);

}  // namespace brunnian
