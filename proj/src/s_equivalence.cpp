#include "brunnian/s_equivalence.hpp"

#include "brunnian/errors.hpp"

namespace brunnian {

IntMatrix s_equiv_enlarge(const IntMatrix& m, EnlargeKind kind, const std::vector<Int>& v) {
    if (!m.square()) throw NotSquare("enlargement needs a square matrix");
    std::size_t n = m.rows();
    if (v.size() != n) throw DimensionMismatch("border vector length must match the matrix size");
    IntMatrix r(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = m.at(i, j);
    if (kind == EnlargeKind::Column) {
        // ( M v 0 ; 0 0 1 ; 0 0 0 )
        for (std::size_t i = 0; i < n; ++i) r.at(i, n) = v[i];
        r.at(n, n + 1) = 1;
    } else {
        // ( M 0 0 ; v 0 0 ; 0 1 0 )
        for (std::size_t j = 0; j < n; ++j) r.at(n, j) = v[j];
        r.at(n + 1, n) = 1;
    }
    return r;
}

IntMatrix s_equiv_reduce(const IntMatrix& m) {
    if (!m.square() || m.rows() < 2)
        throw DimensionMismatch("reduction needs a square matrix of size >= 2");
    std::size_t n = m.rows() - 2;
    const Int one(1);

    // column kind: border columns hold (v, 0) and the single 1 at (n, n+1);
    // the two border rows are zero elsewhere.
    auto is_column_kind = [&] {
        if (m.at(n, n + 1) != one) return false;
        for (std::size_t j = 0; j < n + 1; ++j)
            if (!m.at(n, j).is_zero()) return false;
        for (std::size_t j = 0; j < n + 2; ++j)
            if (!m.at(n + 1, j).is_zero()) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (!m.at(i, n + 1).is_zero()) return false;
        return true;
    };
    auto is_row_kind = [&] {
        if (m.at(n + 1, n) != one) return false;
        for (std::size_t i = 0; i < n + 1; ++i)
            if (!m.at(i, n).is_zero()) return false;
        for (std::size_t i = 0; i < n + 2; ++i)
            if (!m.at(i, n + 1).is_zero()) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (!m.at(n + 1, j).is_zero()) return false;
        return true;
    };

    if (!is_column_kind() && !is_row_kind())
        throw DimensionMismatch("matrix does not end in an elementary enlargement border");
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

IntMatrix s_equiv_congruence(const IntMatrix& m, const IntMatrix& u) {
    if (!m.square() || !u.square() || m.rows() != u.rows())
        throw DimensionMismatch("congruence needs square matrices of equal size");
    Int d = u.det();
    if (d != Int(1) && d != Int(-1)) throw NotUnimodular("congruence matrix must have det +-1");
    return u.transpose() * m * u;
}

}  // namespace brunnian
