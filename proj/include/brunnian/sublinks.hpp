#pragma once

#include <cstddef>
#include <vector>

#include "brunnian/block_form.hpp"
#include "brunnian/polynomial.hpp"

namespace brunnian {

// One proper nonempty subset of parts together with the determinant of the
// corresponding submatrix of M - t*M^T.
struct SublinkEntry {
    std::vector<std::size_t> subset;  // 0-based part indices, increasing
    IntPolynomial det;
    bool vanishes = false;
};

struct SublinkReport {
    std::vector<SublinkEntry> entries;  // ordered by subset size, then lex
    bool all_vanish = true;
};

// For a Seifert matrix of an actual n-component Brunnian link every one of
// these determinants is the zero polynomial (every proper sublink is trivial).
// The report states, per subset, whether the given form satisfies that.
SublinkReport sublink_vanishing(const MultiBlockForm& f);

}  // namespace brunnian
