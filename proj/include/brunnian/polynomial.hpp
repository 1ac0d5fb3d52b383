#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brunnian/bigint.hpp"
#include "brunnian/matrix.hpp"

namespace brunnian {

// Polynomial in t with exact integer coefficients, stored ascending.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long constant);  // NOLINT: implicit by design
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial t();  // the monomial t

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(std::size_t k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

    Int eval(const Int& x) const;

    // Exact division; throws std::domain_error if the division is not exact.
    static IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

    // Canonical ascending-power rendering, e.g. "2t - 2t^2", "1 - t", "0".
    std::string to_string() const;

private:
    void trim();
    std::vector<Int> c_;
};

// Square matrix of integer polynomials.
class PolyMatrix {
public:
    PolyMatrix() : n_(0) {}
    explicit PolyMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }
    IntPolynomial& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const IntPolynomial& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    // Exact determinant: fraction-free Bareiss elimination, with cofactor
    // expansion for size <= 4.
    IntPolynomial det() const;
    IntPolynomial det_bareiss() const;
    IntPolynomial det_cofactor() const;

private:
    std::size_t n_;
    std::vector<IntPolynomial> data_;
};

// M - t*M^T for a square integer matrix.
PolyMatrix seifert_pencil(const IntMatrix& m);

// The Alexander polynomial det(M - t*M^T) of a Seifert matrix.
IntPolynomial alexander(const IntMatrix& m);

}  // namespace brunnian
