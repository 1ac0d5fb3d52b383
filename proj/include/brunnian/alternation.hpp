#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brunnian/bigint.hpp"
#include "brunnian/block_form.hpp"
#include "brunnian/matrix.hpp"

namespace brunnian {

// Upper-triangular table of alternations a(i,j) = h_{i,j} - h_{j,i}, stored
// for 1 <= i < j <= size. The alternation depends only on the antisymmetric
// part of H, so adding any symmetric matrix to H leaves the table unchanged.
class AlternationTable {
public:
    AlternationTable() : size_(0) {}
    explicit AlternationTable(std::size_t size);

    std::size_t size() const { return size_; }
    // 1-based access, requires i < j.
    const Int& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Int v);

    bool small_entries() const;  // all values in {-1, 0, 1}
    friend bool operator==(const AlternationTable&, const AlternationTable&) = default;

    std::string render() const;  // upper-triangular text grid

private:
    std::size_t idx(std::size_t i, std::size_t j) const;
    std::size_t size_;
    std::vector<Int> vals_;
};

// Table of a square H. With reversed = true the basis order is reversed
// first (the optional orientation of the reverse-ordering remark, which turns
// the superdiagonal range {0, 1} into {0, -1}).
AlternationTable alternation_table(const IntMatrix& h, bool reversed = false);

// Length of the maximal zero run a(i,j), a(i,j-1), ... going left, clamped at
// column i+1; 0 if a(i,j) != 0. Equals j - i on an all-zero table.
std::size_t run_left(const AlternationTable& t, std::size_t i, std::size_t j);

// Vertical analogue: zero run a(i,j), a(i-1,j), ... going up, clamped at
// row 1; 0 if a(i,j) != 0. Equals i on an all-zero table.
std::size_t run_up(const AlternationTable& t, std::size_t i, std::size_t j);

struct Violation {
    std::string law;     // e.g. "theorem2(1)"
    std::size_t i, j;    // 1-based cell the violation is reported at
    std::string detail;
};

// The three structural laws on alternations of a 2-component block form:
// (1) superdiagonal entries in {0,1}, all entries in {-1,0,1};
// (2) even horizontal run: a(i,j+1) = 1 or 0 at the boundary i = j - run,
//     otherwise a(i,j+1) = a(i, j-run) or 0;
// (3) the odd-run analogue with opposite sign.
std::vector<Violation> check_theorem2(const AlternationTable& t);

// Same clauses driven by the vertical run. Implemented exactly as stated:
// the conclusions still constrain the horizontal successor a(i,j+1), and a
// referenced cell (i, j-run) with j-run < i lies outside the table and yields
// no constraint.
std::vector<Violation> check_theorem3(const AlternationTable& t);

// Adjacent entries (horizontally and vertically) differ by at most 1.
std::vector<Violation> check_prop4(const AlternationTable& t);

// For every nonzero a(i,j), the number of nonzero entries in column j between
// rows i and j-1 and in row i between columns i+1 and j agree mod 2.
std::vector<Violation> check_prop5(const AlternationTable& t);

// Multi-component bounds: every H_l alternation and every P alternation
// p_{i,j}^{l,m} - p_{j,i}^{m,l} lies in {-1, 0, 1}.
std::vector<Violation> check_theorem7(const MultiBlockForm& f);

// Column vectors (a(1,k), ..., a(k-1,k)) for k = 2..size.
std::vector<std::vector<Int>> column_vectors(const AlternationTable& t);

}  // namespace brunnian
