#pragma once

// Finite-precision arithmetic in Z/p^k and in unramified extensions
// (Z/p^k)[x]/(g) of the p-adic integers, plus the Hensel-lifted cyclotomic
// factors that give ring embeddings Q(zeta_n) -> Z_p[zeta_n].

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pflag/cyc_matrix.hpp"

namespace pflag {

inline constexpr unsigned kDefaultPrecision = 8;

bool is_prime(std::uint64_t n);
/// Multiplicative order of a modulo n (gcd(a, n) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Z/p^k with the modulus held in 64 bits.
class ResidueRing {
   public:
    /// Throws PrecisionOverflow if p^k does not fit in 62 bits.
    ResidueRing(std::uint64_t p, unsigned k);

    std::uint64_t prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return k_; }
    std::uint64_t modulus() const noexcept { return mod_; }

    std::uint64_t reduce(std::int64_t a) const noexcept;
    std::uint64_t reduce(const Integer& a) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : mod_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    bool is_unit(std::uint64_t a) const noexcept { return a % p_ != 0; }
    /// Throws InvalidArgument if a is not a unit.
    std::uint64_t inv(std::uint64_t a) const;
    /// Rational with p-free denominator; throws InvalidArgument otherwise.
    std::uint64_t from_rational(const Rational& q) const;

    friend bool operator==(const ResidueRing& a, const ResidueRing& b) {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }

   private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t mod_;
};

/// Polynomial over Z/p^k, lowest degree first, trailing zeros trimmed.
using ModPoly = std::vector<std::uint64_t>;

/// The teichmuller representative of a mod p^k (iterate x -> x^p).
std::uint64_t teichmuller(std::uint64_t a, const ResidueRing& ring);

/// Monic irreducible factors of Phi_n over F_p, sorted lexicographically
/// from the highest coefficient down; all have degree ord_n(p).
std::vector<ModPoly> cyclotomic_factors_mod_p(std::uint64_t p, unsigned n);

/// Hensel lift of every irreducible factor of Phi_n mod p to Z/p^k, in the
/// order of cyclotomic_factors_mod_p.
std::vector<ModPoly> lift_cyclotomic_factors(std::uint64_t p, unsigned n, unsigned k);

/// One lifted factor: the first in canonical order.
ModPoly lift_cyclotomic_factor(std::uint64_t p, unsigned n, unsigned k);

/// Context (Z/p^k)[x]/(g) for a monic lifted factor g.
struct UnramifiedRing {
    ResidueRing base;
    ModPoly factor;  // monic, degree f

    unsigned residue_degree() const { return static_cast<unsigned>(factor.size() - 1); }
};

class UnramifiedPadic {
   public:
    UnramifiedPadic(std::shared_ptr<const UnramifiedRing> ring, std::vector<std::uint64_t> coords);

    const UnramifiedRing& ring() const noexcept { return *ring_; }
    const std::vector<std::uint64_t>& coords() const noexcept { return coords_; }

    bool in_zp() const noexcept;
    /// Value in Z/p^k; requires in_zp().
    std::uint64_t zp_value() const;

    friend UnramifiedPadic operator+(const UnramifiedPadic& a, const UnramifiedPadic& b);
    friend UnramifiedPadic operator*(const UnramifiedPadic& a, const UnramifiedPadic& b);
    friend bool operator==(const UnramifiedPadic& a, const UnramifiedPadic& b) {
        return a.coords_ == b.coords_;
    }

   private:
    std::shared_ptr<const UnramifiedRing> ring_;
    std::vector<std::uint64_t> coords_;
};

/// Image of x under zeta_n -> (x mod g). Throws InvalidArgument if some
/// denominator is divisible by p.
UnramifiedPadic embed_number(const CyclotomicNumber& x, const std::shared_ptr<const UnramifiedRing>& ring);

/// r x r matrix over Z/p^k, row-major.
struct ZpMatrix {
    std::size_t rank = 0;
    std::vector<std::uint64_t> entries;

    std::uint64_t operator()(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }
    friend bool operator==(const ZpMatrix&, const ZpMatrix&) = default;
};

ZpMatrix multiply(const ZpMatrix& a, const ZpMatrix& b, const ResidueRing& ring);

struct Embedding {
    ResidueRing ring;
    unsigned conductor;
    ModPoly factor;            // the lifted factor g defining zeta_n -> x mod g
    std::size_t factor_index;  // position among lift_cyclotomic_factors
    std::size_t factors_tried;
    std::vector<ZpMatrix> matrices;

    ZpMatrix image(const CycMatrix& m) const;
};

/// Finds a factor choice sending every entry of every matrix into Z_p.
/// Throws NoEmbedding or ConductorMismatch.
Embedding embed_matrices(const std::vector<CycMatrix>& mats, std::uint64_t p, unsigned k = kDefaultPrecision);

}  // namespace pflag
