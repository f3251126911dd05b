#include "pflag/padic.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "pflag/error.hpp"

namespace pflag {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t degree(const ModPoly& p) { return p.empty() ? 0 : p.size() - 1; }

ModPoly poly_add(ModPoly a, const ModPoly& b, const ResidueRing& R) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = R.add(a[i], b[i]);
    trim(a);
    return a;
}

ModPoly poly_sub(ModPoly a, const ModPoly& b, const ResidueRing& R) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = R.sub(a[i], b[i]);
    trim(a);
    return a;
}

ModPoly poly_mul(const ModPoly& a, const ModPoly& b, const ResidueRing& R) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = R.add(out[i + j], R.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

// Division by b whose leading coefficient is a unit.
std::pair<ModPoly, ModPoly> poly_divmod(ModPoly a, const ModPoly& b, const ResidueRing& R) {
    trim(a);
    if (b.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    if (a.size() < b.size()) return {ModPoly{}, a};
    const u64 lead_inv = R.inv(b.back());
    ModPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) continue;
        const u64 c = R.mul(a[i], lead_inv);
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = R.sub(a[shift + j], R.mul(c, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
}

ModPoly poly_mod(const ModPoly& a, const ModPoly& b, const ResidueRing& R) { return poly_divmod(a, b, R).second; }

ModPoly make_monic(ModPoly a, const ResidueRing& R) {
    if (a.empty()) return a;
    const u64 inv = R.inv(a.back());
    for (auto& c : a) c = R.mul(c, inv);
    return a;
}

// gcd over a field (k = 1).
ModPoly poly_gcd(ModPoly a, ModPoly b, const ResidueRing& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ModPoly r = poly_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, F);
}

// (s, t) with s*a + t*b = 1 over a field, for coprime a, b.
std::pair<ModPoly, ModPoly> poly_bezout(const ModPoly& a, const ModPoly& b, const ResidueRing& F) {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1, F);
        ModPoly s = poly_sub(s0, poly_mul(q, s1, F), F);
        ModPoly t = poly_sub(t0, poly_mul(q, t1, F), F);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.size() != 1) throw Error(ErrorCode::InvalidArgument, "factors are not coprime mod p");
    const u64 inv = F.inv(r0[0]);
    for (auto& c : s0) c = F.mul(c, inv);
    for (auto& c : t0) c = F.mul(c, inv);
    return {s0, t0};
}

ModPoly poly_powmod(ModPoly base, const Integer& e, const ModPoly& mod, const ResidueRing& R) {
    ModPoly result{1};
    base = poly_mod(base, mod, R);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mod(poly_mul(result, result, R), mod, R);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mod(poly_mul(result, base, R), mod, R);
    }
    return result;
}

ModPoly reduce_integer_poly(const std::vector<long>& poly, const ResidueRing& R) {
    ModPoly out;
    out.reserve(poly.size());
    for (long c : poly) out.push_back(R.reduce(static_cast<std::int64_t>(c)));
    trim(out);
    return out;
}

// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
// degree-f irreducibles over F_p.
void equal_degree_split(const ModPoly& h, std::size_t f, const ResidueRing& F, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
    if (degree(h) == f) {
        out.push_back(h);
        return;
    }
    const u64 p = F.prime();
    std::uniform_int_distribution<u64> coeff(0, p - 1);
    Integer pf;
    mpz_ui_pow_ui(pf.get_mpz_t(), p, f);
    for (;;) {
        ModPoly a(degree(h));
        for (auto& c : a) c = coeff(rng);
        trim(a);
        if (degree(a) == 0) continue;
        ModPoly b;
        if (p == 2) {
            // Absolute trace to F_2.
            ModPoly power = a;
            b = a;
            for (std::size_t i = 1; i < f; ++i) {
                power = poly_mod(poly_mul(power, power, F), h, F);
                b = poly_add(b, power, F);
            }
        } else {
            const Integer e = (pf - 1) / 2;
            b = poly_sub(poly_powmod(a, e, h, F), ModPoly{1}, F);
        }
        ModPoly g = poly_gcd(b, h, F);
        if (degree(g) == 0 || degree(g) == degree(h)) continue;
        equal_degree_split(g, f, F, rng, out);
        equal_degree_split(poly_divmod(h, g, F).first, f, F, rng, out);
        return;
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 1;
    a %= n;
    u64 x = a;
    for (u64 k = 1; k <= n; ++k) {
        if (x == 1) return k;
        x = static_cast<u64>(static_cast<u128>(x) * a % n);
    }
    throw Error(ErrorCode::InvalidArgument, "element is not a unit");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

ResidueRing::ResidueRing(std::uint64_t p, unsigned k) : p_(p), k_(k), mod_(1) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "precision must be at least 1");
    for (unsigned i = 0; i < k; ++i) {
        if (mod_ > (u64{1} << 62) / p)
            throw Error(ErrorCode::PrecisionOverflow,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds 62-bit residues");
        mod_ *= p;
    }
}

std::uint64_t ResidueRing::reduce(std::int64_t a) const noexcept {
    const std::int64_t m = static_cast<std::int64_t>(mod_);
    std::int64_t r = a % m;
    return static_cast<u64>(r < 0 ? r + m : r);
}

std::uint64_t ResidueRing::reduce(const Integer& a) const { return mpz_fdiv_ui(a.get_mpz_t(), mod_); }

std::uint64_t ResidueRing::add(std::uint64_t a, std::uint64_t b) const noexcept {
    const u64 s = a + b;
    return s >= mod_ ? s - mod_ : s;
}

std::uint64_t ResidueRing::sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + mod_ - b; }

std::uint64_t ResidueRing::mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % mod_);
}

std::uint64_t ResidueRing::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    u64 result = 1 % mod_;
    a %= mod_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t ResidueRing::inv(std::uint64_t a) const {
    if (!is_unit(a)) throw Error(ErrorCode::InvalidArgument, std::to_string(a) + " is not a unit mod " + std::to_string(mod_));
    // Unit group of Z/p^k has order p^(k-1)(p-1).
    return pow(a, mod_ / p_ * (p_ - 1) - 1);
}

std::uint64_t ResidueRing::from_rational(const Rational& q) const {
    const u64 den = reduce(q.get_den());
    if (!is_unit(den))
        throw Error(ErrorCode::InvalidArgument, "denominator of " + rational_to_string(q) + " divisible by p");
    return mul(reduce(q.get_num()), inv(den));
}

std::uint64_t teichmuller(std::uint64_t a, const ResidueRing& ring) {
    u64 x = a % ring.modulus();
    for (unsigned i = 0; i < ring.precision(); ++i) x = ring.pow(x, ring.prime());
    return x;
}

std::vector<ModPoly> cyclotomic_factors_mod_p(std::uint64_t p, unsigned n) {
    if (n % p == 0)
        throw Error(ErrorCode::InvalidArgument,
                    "prime " + std::to_string(p) + " divides conductor " + std::to_string(n));
    const ResidueRing F(p, 1);
    const ModPoly phi = reduce_integer_poly(cyclotomic_polynomial(n), F);
    const std::size_t f = multiplicative_order(p, n);
    std::vector<ModPoly> factors;
    std::mt19937_64 rng(0x5eed + n * 1000003ULL + p);
    equal_degree_split(phi, f, F, rng, factors);
    std::sort(factors.begin(), factors.end(), [](const ModPoly& a, const ModPoly& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return factors;
}

std::vector<ModPoly> lift_cyclotomic_factors(std::uint64_t p, unsigned n, unsigned k) {
    const ResidueRing F(p, 1);
    const ResidueRing R(p, k);
    const std::vector<long> phi_int = cyclotomic_polynomial(n);
    const ModPoly phi_p = reduce_integer_poly(phi_int, F);
    const ModPoly phi = reduce_integer_poly(phi_int, R);

    std::vector<ModPoly> lifted;
    for (const ModPoly& g0 : cyclotomic_factors_mod_p(p, n)) {
        const ModPoly h0 = poly_divmod(phi_p, g0, F).first;
        const auto [s, t] = poly_bezout(g0, h0, F);
        ModPoly g = g0, h = h0;
        u64 pj = p;
        for (unsigned j = 1; j < k; ++j) {
            // e = (Phi - g h) / p^j mod p
            ModPoly e = poly_sub(phi, poly_mul(g, h, R), R);
            for (auto& c : e) c = (c / pj) % p;
            trim(e);
            const auto [q, dg] = poly_divmod(poly_mul(t, e, F), g0, F);
            const ModPoly dh = poly_add(poly_mul(s, e, F), poly_mul(q, h0, F), F);
            ModPoly step_g = dg, step_h = dh;
            for (auto& c : step_g) c = R.mul(c, pj);
            for (auto& c : step_h) c = R.mul(c, pj);
            g = poly_add(g, step_g, R);
            h = poly_add(h, step_h, R);
            pj *= p;
        }
        if (!poly_sub(phi, poly_mul(g, h, R), R).empty())
            throw Error(ErrorCode::InvalidArgument, "Hensel lifting failed to factor Phi_n");
        lifted.push_back(std::move(g));
    }
    return lifted;
}

ModPoly lift_cyclotomic_factor(std::uint64_t p, unsigned n, unsigned k) {
    return lift_cyclotomic_factors(p, n, k).front();
}

UnramifiedPadic::UnramifiedPadic(std::shared_ptr<const UnramifiedRing> ring, std::vector<std::uint64_t> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
    coords_.resize(ring_->residue_degree(), 0);
}

bool UnramifiedPadic::in_zp() const noexcept {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](u64 c) { return c == 0; });
}

std::uint64_t UnramifiedPadic::zp_value() const {
    if (!in_zp()) throw Error(ErrorCode::InvalidArgument, "element does not lie in Z_p");
    return coords_.front();
}

UnramifiedPadic operator+(const UnramifiedPadic& a, const UnramifiedPadic& b) {
    const ResidueRing& R = a.ring_->base;
    std::vector<u64> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.add(a.coords_[i], b.coords_[i]);
    return {a.ring_, std::move(c)};
}

UnramifiedPadic operator*(const UnramifiedPadic& a, const UnramifiedPadic& b) {
    const ResidueRing& R = a.ring_->base;
    ModPoly prod = poly_mod(poly_mul(a.coords_, b.coords_, R), a.ring_->factor, R);
    return {a.ring_, std::move(prod)};
}

UnramifiedPadic embed_number(const CyclotomicNumber& x, const std::shared_ptr<const UnramifiedRing>& ring) {
    const ResidueRing& R = ring->base;
    ModPoly poly;
    poly.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs()) poly.push_back(R.from_rational(c));
    trim(poly);
    return {ring, poly_mod(poly, ring->factor, R)};
}

ZpMatrix multiply(const ZpMatrix& a, const ZpMatrix& b, const ResidueRing& ring) {
    const std::size_t r = a.rank;
    ZpMatrix out{r, std::vector<u64>(r * r, 0)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < r; ++j)
                out.entries[i * r + j] = ring.add(out.entries[i * r + j], ring.mul(a(i, k), b(k, j)));
    return out;
}

ZpMatrix Embedding::image(const CycMatrix& m) const {
    auto ctx = std::make_shared<const UnramifiedRing>(UnramifiedRing{ring, factor});
    const CycMatrix mm = m.promoted(conductor);
    ZpMatrix out{mm.rank(), {}};
    for (const auto& e : mm.entries()) out.entries.push_back(embed_number(e, ctx).zp_value());
    return out;
}

Embedding embed_matrices(const std::vector<CycMatrix>& mats, std::uint64_t p, unsigned k) {
    if (mats.empty()) throw Error(ErrorCode::InvalidArgument, "no matrices to embed");
    const unsigned n = mats.front().conductor();
    for (const auto& m : mats)
        if (m.conductor() != n)
            throw Error(ErrorCode::ConductorMismatch, "matrices have conductors " + std::to_string(n) + " and " +
                                                          std::to_string(m.conductor()));
    const ResidueRing R(p, k);
    const std::vector<ModPoly> factors = lift_cyclotomic_factors(p, n, k);
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        auto ctx = std::make_shared<const UnramifiedRing>(UnramifiedRing{R, factors[idx]});
        std::vector<ZpMatrix> images;
        bool ok = true;
        for (const auto& m : mats) {
            ZpMatrix z{m.rank(), {}};
            for (const auto& e : m.entries()) {
                bool p_integral = true;
                for (const auto& c : e.coeffs())
                    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) p_integral = false;
                if (!p_integral) {
                    ok = false;
                    break;
                }
                const UnramifiedPadic img = embed_number(e, ctx);
                if (!img.in_zp()) {
                    ok = false;
                    break;
                }
                z.entries.push_back(img.coords().front());
            }
            if (!ok) break;
            images.push_back(std::move(z));
        }
        if (ok) return Embedding{R, n, factors[idx], idx, idx + 1, std::move(images)};
    }
    throw Error(ErrorCode::NoEmbedding, "none of the " + std::to_string(factors.size()) + " factors of Phi_" +
                                            std::to_string(n) + " mod " + std::to_string(p) +
                                            " places every entry in Z_p");
}

}  // namespace pflag
