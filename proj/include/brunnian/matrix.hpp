#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "brunnian/bigint.hpp"
#include "brunnian/errors.hpp"

namespace brunnian {

// Dense integer matrix, row-major, exact entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // Exact determinant (fraction-free Bareiss).
    Int det() const;

    // Text format: first line "rows cols", then row-major whitespace-separated
    // integers.
    static IntMatrix parse_text(std::istream& in);
    static IntMatrix parse_text(const std::string& text);
    std::string to_text() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

}  // namespace brunnian
