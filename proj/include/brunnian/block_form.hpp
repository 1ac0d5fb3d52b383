#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brunnian/errors.hpp"
#include "brunnian/matrix.hpp"

namespace brunnian {

// Diagonal of +1/-1 signs (the E block).
struct SignDiagonal {
    std::vector<int> signs;

    SignDiagonal() = default;
    explicit SignDiagonal(std::vector<int> s);
    std::size_t size() const { return signs.size(); }
    int at(std::size_t i) const { return signs[i]; }
    friend bool operator==(const SignDiagonal&, const SignDiagonal&) = default;
};

// The n x (n-1) matrix F_n: f_{i,j} = 1 iff i - j is 0 or 1 (1-based), else 0.
// Nothing is stored; entries are implied.
struct BidiagonalOnes {
    std::size_t n = 0;

    explicit BidiagonalOnes(std::size_t n) : n(n) {}
    std::size_t rows() const { return n; }
    std::size_t cols() const { return n == 0 ? 0 : n - 1; }
    long entry(std::size_t i, std::size_t j) const {  // 0-based
        return (i == j || i == j + 1) ? 1 : 0;
    }
};

// The 2-component block form of a Seifert matrix,
//
//     ( E | F_n )
//     ( 0 |  H  )
//
// with E an n x n sign diagonal and H an (n-1) x (n-1) integer matrix. The
// composed matrix has odd size 2n-1. n = 1 is allowed (H empty).
struct SeifertBlock2 {
    SignDiagonal E;
    IntMatrix H;

    SeifertBlock2() = default;
    SeifertBlock2(SignDiagonal e, IntMatrix h);
    std::size_t n() const { return E.size(); }
    friend bool operator==(const SeifertBlock2&, const SeifertBlock2&) = default;
};

IntMatrix compose_block2(const SeifertBlock2& b);
SeifertBlock2 decompose_block2(const IntMatrix& m);

// True iff the diagonal of E sums to zero, a necessary condition for the
// matrix to come from an algebraically split 2-component Brunnian link.
bool trace_split_test(const SeifertBlock2& b);

// The n-component block form (n >= 3): parts n_1..n_{n-1}, all even, with
// per-part sign diagonals E_{n_l}, square blocks H_l of size n_l - 1, and
// off-diagonal blocks P_{l,m} of size (n_l - 1) x (n_m - 1).
//
// In the strict form each E_{n_l} alternates +1, -1, +1, ... ; the lenient
// variant accepts any +1/-1 diagonal.
struct MultiBlockForm {
    std::vector<std::size_t> parts;
    std::vector<SignDiagonal> E_blocks;
    std::vector<IntMatrix> H_blocks;
    // P[l][m] for l != m (0-based); P[l][l] stays empty.
    std::vector<std::vector<IntMatrix>> P_blocks;

    std::size_t num_parts() const { return parts.size(); }
    std::size_t composed_size() const;
    friend bool operator==(const MultiBlockForm&, const MultiBlockForm&) = default;
};

// The strict alternating sign at 1-based diagonal position i: +1 odd, -1 even.
inline int alternating_sign(std::size_t i_1based) { return (i_1based % 2 == 1) ? 1 : -1; }

MultiBlockForm make_multi_block(std::vector<std::size_t> parts,
                                std::vector<IntMatrix> h_blocks,
                                std::vector<std::vector<IntMatrix>> p_blocks,
                                bool lenient_e = false,
                                std::vector<SignDiagonal> e_blocks = {});

IntMatrix compose_multi(const MultiBlockForm& f);
MultiBlockForm decompose_multi(const IntMatrix& m, const std::vector<std::size_t>& parts,
                               bool lenient_e = false);

// Restriction of a multi-part form to a subset of its parts (0-based indices,
// strictly increasing). Used by the sublink determinant test.
MultiBlockForm restrict_parts(const MultiBlockForm& f, const std::vector<std::size_t>& subset);

// Canonical JSON (nlohmann dump: compact, keys sorted).
std::string block2_to_json(const SeifertBlock2& b);
SeifertBlock2 block2_from_json(const std::string& text);
std::string multi_to_json(const MultiBlockForm& f);
MultiBlockForm multi_from_json(const std::string& text, bool lenient_e = false);

}  // namespace brunnian
