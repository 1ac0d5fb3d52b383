#include "brunnian/polynomial.hpp"

#include <sstream>

#include "brunnian/errors.hpp"

namespace brunnian {

IntPolynomial::IntPolynomial(long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::t() {
    return IntPolynomial(std::vector<Int>{Int(0), Int(1)});
}

const Int& IntPolynomial::coeff(std::size_t k) const {
    static const Int zero(0);
    return k < c_.size() ? c_[k] : zero;
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

IntPolynomial IntPolynomial::div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("IntPolynomial: division by zero");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree())
        throw std::domain_error("IntPolynomial: inexact division (degree)");
    std::vector<Int> rem = a.c_;
    std::vector<Int> quo(a.c_.size() - b.c_.size() + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
        Int q = Int::div_exact(rem[k + b.c_.size() - 1], b.c_.back());
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
    }
    for (const Int& r : rem)
        if (!r.is_zero()) throw std::domain_error("IntPolynomial: inexact division");
    return IntPolynomial(std::move(quo));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Int a = c_[k].abs();
        bool neg = c_[k].sgn() < 0;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << a;
        } else {
            if (a != Int(1)) out << a;
            out << 't';
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

IntPolynomial PolyMatrix::det_cofactor() const {
    if (n_ == 0) return IntPolynomial(1);
    if (n_ == 1) return at(0, 0);
    IntPolynomial acc;
    // expand along the first row
    for (std::size_t j = 0; j < n_; ++j) {
        if (at(0, j).is_zero()) continue;
        PolyMatrix minor(n_ - 1);
        for (std::size_t r = 1; r < n_; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n_; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        IntPolynomial term = at(0, j) * minor.det_cofactor();
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

IntPolynomial PolyMatrix::det_bareiss() const {
    std::size_t n = n_;
    if (n == 0) return IntPolynomial(1);
    PolyMatrix a = *this;
    IntPolynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k).is_zero()) ++p;
            if (p == n) return IntPolynomial();
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = IntPolynomial::div_exact(
                    a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    IntPolynomial d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

IntPolynomial PolyMatrix::det() const {
    return n_ <= 4 ? det_cofactor() : det_bareiss();
}

PolyMatrix seifert_pencil(const IntMatrix& m) {
    if (!m.square()) throw NotSquare("seifert_pencil needs a square matrix");
    std::size_t n = m.rows();
    PolyMatrix p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.at(i, j) = IntPolynomial(std::vector<Int>{m.at(i, j), -m.at(j, i)});
    return p;
}

IntPolynomial alexander(const IntMatrix& m) { return seifert_pencil(m).det(); }

}  // namespace brunnian
