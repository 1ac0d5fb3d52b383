#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "brunnian/alternation.hpp"
#include "brunnian/block_form.hpp"
#include "brunnian/matrix.hpp"
#include "brunnian/sequences.hpp"

namespace brunnian {

// Upper-triangular alternation tuple in column-major order:
// (a(1,2), a(1,3), a(2,3), a(1,4), a(2,4), a(3,4), ...), length k(k-1)/2.
using AltTuple = std::vector<int>;

AltTuple table_to_tuple(const AlternationTable& t);  // requires small entries
AlternationTable tuple_to_table(const AltTuple& tup);
std::string tuple_to_string(const AltTuple& tup);

// Engine A: admissible chains of sequences mapped through the G recursion.
// k is the table size (number of b-loops), 2 <= k <= 6.
std::set<AltTuple> enumerate_sequence_engine(int k);

// Engine B: brute force over all {-1,0,1} tuples filtered by the structural
// laws (theorem 2, theorem 3, propositions 4 and 5). Necessary conditions
// only; may be a superset of the realizable set.
std::set<AltTuple> enumerate_constraint_engine(int k);

// Engine C: incremental chord arrangements. Arcs are added one at a time by
// the generalized route choices; per-arc signed crossing lists are carried
// along and each route's crossings are derived from the tunnelled arcs'
// records with alternating traversal directions. 2 <= k <= 5.
std::set<AltTuple> enumerate_chord_engine(int k);

// A chord arrangement at the combinatorial level: per-arc ordered crossing
// records. Event sign is the crossing's contribution to i(b_other, b_self).
struct ChordArrangement {
    struct Event {
        int other;     // 0-based arc index
        int sign_rel;  // contribution to i(b_other, b_self)
    };
    std::vector<std::vector<Event>> arcs;

    std::size_t num_arcs() const { return arcs.size(); }
    // Signed crossing count of the pair (i, j), i < j (0-based).
    int pair_crossing(std::size_t i, std::size_t j) const;
    AltTuple tuple() const;

    static ChordArrangement initial();  // the single arc b_1
    // All 2m successor arrangements obtained by inserting arc number m
    // (1-based; the arrangement currently holds m-1 arcs).
    std::vector<ChordArrangement> insert_routes() const;
};

struct Verdict {
    bool realizable = false;
    bool has_witness = false;
    std::vector<Seq> witness;  // (s_2, ..., s_k) when realizable and k >= 2
    std::vector<Violation> violations;
    std::vector<std::string> notes;
};

std::string verdict_to_json(const Verdict& v);

// Exhaustive search for a chain whose G-columns reproduce the table's column
// vectors, pruning by parity class and per-column mismatch. Deterministic:
// classes are tried by canonical representative order.
Verdict witness_search(const AlternationTable& t);

// Full matrix check: block decomposition, alternation laws, witness search.
Verdict check_matrix(const IntMatrix& m, bool reversed = false);

// Constructive recipe from the sufficiency proof: for clasp step i = 2..n,
// intertwine counts h_{j,i-1} (j = 1..i-2) and the twist count
// h_{i-1,i-1} + 6 - sum_j h_{j,i-1}, plus the sign case of each consecutive
// E pair. Alternations are carried so the lower triangle of H round-trips.
struct ConstructionPlan {
    struct Step {
        std::size_t clasp = 2;       // i
        Int twist;                   // h_{i-1,i-1} + 6 - sum of intertwines
        std::vector<Int> intertwines;  // h_{j,i-1}, j = 1..i-2
        std::string e_case;          // sign case of (e_{i-1,i-1}, e_{i,i})
    };
    std::size_t n = 1;
    std::vector<int> e_signs;
    std::vector<Step> steps;        // one per clasp i = 2..n
    std::vector<Int> alternations;  // h^A upper triangle, column-major
};

ConstructionPlan construction_plan(const SeifertBlock2& b);
SeifertBlock2 plan_to_matrix(const ConstructionPlan& p);
std::string plan_to_text(const ConstructionPlan& p);
std::string plan_to_json(const ConstructionPlan& p);

// Adjacency of arc end points on the boundary, read off the generated set:
// two labeled elements with different sides that are ~_m equivalent signal an
// adjacent endpoint pair; equal v-tags give T-T (v1) or I-I (v2) adjacency,
// different v-tags give I-T.
struct AdjacencyReport {
    struct Pair {
        std::string kind;  // "T-T", "I-I" or "I-T"
        int level_a = 0, level_b = 0;
        Seq elem_a, elem_b;
    };
    int modulus = 2;
    std::vector<Pair> pairs;
};

AdjacencyReport adjacency_classes(const std::vector<Seq>& history, int m);

}  // namespace brunnian
