#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) modulo
// the n-th cyclotomic polynomial. Arithmetic between elements of different
// conductors first pushes both operands into Q(zeta_lcm).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pflag {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "a/b" form (denominator always written, even when 1).
std::string rational_to_string(const Rational& q);
/// Accepts "a/b" or "a"; throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(unsigned n);

/// Shared, immutable description of Q(zeta_n).
class CyclotomicField {
   public:
    unsigned conductor() const noexcept { return n_; }
    unsigned degree() const noexcept { return phi_; }
    /// Monic modulus Phi_n, lowest degree first; size degree()+1.
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    /// Interned field for conductor n (thread-safe).
    static std::shared_ptr<const CyclotomicField> get(unsigned n);

    explicit CyclotomicField(unsigned n);

   private:
    unsigned n_;
    unsigned phi_;
    std::vector<long> modulus_;
};

class CyclotomicNumber {
   public:
    /// Zero of Q (conductor 1).
    CyclotomicNumber();
    CyclotomicNumber(unsigned conductor, std::vector<Rational> coeffs);

    static CyclotomicNumber zero(unsigned conductor);
    static CyclotomicNumber one(unsigned conductor);
    static CyclotomicNumber rational(const Rational& q, unsigned conductor = 1);
    /// zeta_n^e for any integer e.
    static CyclotomicNumber zeta_power(unsigned conductor, long e);

    unsigned conductor() const noexcept { return field_->conductor(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    const Rational& rational_part() const { return coeffs_.front(); }

    /// Re-express in Q(zeta_m); requires conductor() | m.
    CyclotomicNumber promoted(unsigned m) const;

    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long e) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    CyclotomicNumber operator-() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    std::size_t hash() const noexcept;
    std::string to_string() const;

   private:
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);
    void align_with(CyclotomicNumber& other);

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

/// Multiplicative order of x as a root of unity, or 0 if x is not one.
unsigned root_of_unity_order(const CyclotomicNumber& x);

}  // namespace pflag
