#include "brunnian/matrix.hpp"

#include <sstream>

namespace brunnian {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer rows");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Int IntMatrix::det() const {
    if (!square()) throw NotSquare("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return Int(1);
    IntMatrix a = *this;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k).is_zero()) ++p;
            if (p == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = Int::div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j),
                                            prev);
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

IntMatrix IntMatrix::parse_text(std::istream& in) {
    long rows, cols;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw ParseError("matrix header: expected \"rows cols\"");
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("matrix body: too few entries");
            try {
                m.at(i, j) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw ParseError("matrix body: bad integer \"" + tok + "\"");
            }
        }
    return m;
}

IntMatrix IntMatrix::parse_text(const std::string& text) {
    std::istringstream in(text);
    IntMatrix m = parse_text(in);
    std::string left;
    if (in >> left) throw ParseError("matrix body: trailing tokens");
    return m;
}

std::string IntMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace brunnian
