#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pflag {

/// Polynomial in t with integer coefficients, lowest degree first.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    /// 1 - t^d
    static IntPolynomial one_minus_t_pow(unsigned d);

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::int64_t value_at_one() const;
    bool is_palindromic() const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    /// Exact division; throws InvalidArgument if b does not divide a.
    friend IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// e.g. "1 + 2t^2 + t^4"
    std::string to_string(char var = 't') const;

   private:
    std::vector<std::int64_t> coeffs_;
};

/// Ranks of a free graded module, indexed by degree.
class GradedRanks {
   public:
    GradedRanks() = default;
    explicit GradedRanks(std::map<int, std::int64_t> ranks);
    static GradedRanks from_polynomial(const IntPolynomial& p);

    std::int64_t rank(int degree) const;
    const std::map<int, std::int64_t>& ranks() const noexcept { return ranks_; }
    /// Highest degree with nonzero rank, or -1 when zero.
    int top_degree() const;
    std::int64_t euler_characteristic() const;
    std::int64_t total_rank() const;
    GradedRanks shifted(int by) const;
    /// Degrees with nonzero rank, ascending.
    std::vector<int> support() const;

    friend GradedRanks operator+(const GradedRanks& a, const GradedRanks& b);
    friend bool operator==(const GradedRanks&, const GradedRanks&) = default;

   private:
    std::map<int, std::int64_t> ranks_;  // zero ranks are not stored
};

/// Ranks that repeat with a fixed period from degree 0, e.g. Z_p[z^l] with |z| = 2.
struct PeriodicRanks {
    int period;
    std::vector<std::int64_t> pattern;  // ranks in degrees 0 .. period-1

    GradedRanks truncated(int max_degree) const;
};

}  // namespace pflag
