#pragma once

// Homology of P = suspension spectrum of BS^1_+ over Z/p^k: one generator x_j
// in each degree 2j, 0 <= j <= N. Every operator here is diagonal on the x_j.

#include <cstdint>
#include <string>
#include <vector>

#include "pflag/graded.hpp"
#include "pflag/padic.hpp"

namespace pflag {

class GradedOperator {
   public:
    GradedOperator(std::uint64_t p, unsigned k, std::size_t n, std::vector<std::uint64_t> coeffs);
    static GradedOperator zero(std::uint64_t p, unsigned k, std::size_t n);
    static GradedOperator identity(std::uint64_t p, unsigned k, std::size_t n);

    std::uint64_t prime() const noexcept { return ring_.prime(); }
    unsigned precision() const noexcept { return ring_.precision(); }
    const ResidueRing& ring() const noexcept { return ring_; }
    /// Generators run over x_0 .. x_N.
    std::size_t top_index() const noexcept { return coeffs_.size() - 1; }
    std::size_t degree_bound() const noexcept { return 2 * top_index(); }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    std::uint64_t coeff(std::size_t j) const { return coeffs_.at(j); }

    /// Indices j with nonzero coefficient.
    std::vector<std::size_t> support() const;
    bool is_zero() const;
    GradedOperator pow(std::uint64_t e) const;
    GradedOperator scaled(std::uint64_t c) const;

    /// Composition; diagonal operators compose pointwise.
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
    friend bool operator==(const GradedOperator& a, const GradedOperator& b);

   private:
    ResidueRing ring_;
    std::vector<std::uint64_t> coeffs_;
};

/// Teichmuller lift mod p^k of the least primitive root mod p.
std::uint64_t teichmuller_root(std::uint64_t p, unsigned k);

/// psi: x_j -> zeta^j. Throws NotPrimitiveRoot unless zeta has exact order p - 1 mod p^k.
GradedOperator psi(std::uint64_t p, std::uint64_t zeta, std::size_t n, unsigned k = kDefaultPrecision);

/// e_s = (1/(p-1)) sum_{i=0}^{p-2} zeta^{-is} psi^i.
GradedOperator idempotent_e(std::uint64_t s, const GradedOperator& psi_op, std::uint64_t zeta);
/// Indicator of j = s mod p - 1.
GradedOperator idempotent_indicator(std::uint64_t s, std::uint64_t p, std::size_t n, unsigned k = kDefaultPrecision);

struct TransferImage {
    unsigned l = 0;
    std::vector<std::uint64_t> residues;  // distinct s in {0, .., p-2} summed into f
    GradedOperator f;
    GradedRanks ranks;  // H*(BN) or reduced H*(BN^nu), up to the degree bound
};

/// f_BG = sum of e_s over s = 0 mod l, with H*(BN) = Z_p[z]^{C_l} by averaging.
/// Throws InvalidL unless l > 1 divides p - 1.
TransferImage transfer_image_bg(std::uint64_t p, unsigned l, std::size_t n, unsigned k = kDefaultPrecision);

/// f = sum of e_s over s = -1 mod l, with the twisted invariants of z^m
/// placed in the odd degrees 2m + 1. Throws InvalidL.
TransferImage transfer_image_umkehr(std::uint64_t p, unsigned l, std::size_t n, unsigned k = kDefaultPrecision);

struct Check {
    std::string name;
    bool passed = false;
};

struct SplittingReport {
    std::uint64_t p = 0;
    unsigned l = 0;
    std::size_t degree_bound = 0;
    std::vector<Check> checks;
    std::vector<std::uint64_t> bg_residues;
    std::vector<std::uint64_t> umkehr_residues;

    bool all_passed() const;
};

/// e_0 f = f e_0 = 0 up to degree 2n. l = 2 is rejected with InvalidL.
bool verify_framing_obstruction(std::uint64_t p, unsigned l, std::size_t n, unsigned k = kDefaultPrecision);
/// Default degree bound n = 3(p - 1).
bool verify_framing_obstruction(std::uint64_t p, unsigned l);

/// Runs every idempotent, transfer and framing identity for (p, l) up to degree 2n.
SplittingReport splitting_checks(std::uint64_t p, unsigned l, std::size_t n, unsigned k = kDefaultPrecision);

}  // namespace pflag
