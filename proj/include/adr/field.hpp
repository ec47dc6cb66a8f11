#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace adr {

// Thrown on malformed user input (parse errors, bad labels, precondition
// violations the caller can fix). CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant fails. CLI maps this to exit code 2.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact coefficient field: the rationals (characteristic 0) or a prime
/// field F_p. Elements are stored as mpq_class values; F_p elements are
/// kept as canonical integer residues in [0, p).
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(unsigned long p);

    unsigned long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    mpq_class zero() const { return mpq_class(0); }
    mpq_class one() const { return mpq_class(1); }
    mpq_class from_long(long v) const;
    mpq_class from_mpz(const mpz_class& v) const;

    /* Canonical representative of v (identity over Q, residue over F_p). */
    mpq_class reduce(const mpq_class& v) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;  // throws input_error on zero
    mpq_class div(const mpq_class& a, const mpq_class& b) const;

    bool is_zero(const mpq_class& v) const { return sgn(v) == 0; }
    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string str() const;  // "Q" or "Fp:<p>"

private:
    explicit Field(unsigned long p) : p_(p) {}
    unsigned long p_;
};

std::string scalar_str(const mpq_class& v);

}  // namespace adr
