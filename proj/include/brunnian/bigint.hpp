#pragma once

#include <gmp.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace brunnian {

// Arbitrary-precision signed integer (thin RAII wrapper over GMP's mpz_t).
// All arithmetic in the library is exact; there is no floating point anywhere.
class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("Int: bad decimal literal: " + s);
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Int operator-() const {
        Int r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Int& operator+=(const Int& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Exact division; the caller guarantees divisibility (Bareiss pivots).
    static Int div_exact(const Int& a, const Int& b) {
        if (mpz_sgn(b.z_) == 0) throw std::domain_error("Int: division by zero");
        if (!mpz_divisible_p(a.z_, b.z_))
            throw std::domain_error("Int: inexact division");
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    int sgn() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    Int abs() const {
        Int r;
        mpz_abs(r.z_, z_);
        return r;
    }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("Int: value does not fit in long");
        return mpz_get_si(z_);
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpz_t z_;
};

inline std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

}  // namespace brunnian
