#include "pflag/splitting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pflag/error.hpp"

namespace pflag {

namespace {

void require_odd_prime(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not an odd prime");
}

void require_l(std::uint64_t p, unsigned l) {
    if (l < 2 || (p - 1) % l != 0)
        throw Error(ErrorCode::InvalidL, "l = " + std::to_string(l) + " must be > 1 and divide p - 1 = " + std::to_string(p - 1));
}

void require_same_shape(const GradedOperator& a, const GradedOperator& b) {
    if (!(a.ring() == b.ring()) || a.top_index() != b.top_index())
        throw Error(ErrorCode::InvalidArgument, "graded operators over different rings or degree bounds");
}

/// Primitive l-th root of unity in Z/p^k.
std::uint64_t root_of_order(std::uint64_t p, unsigned l, const ResidueRing& ring) {
    return ring.pow(teichmuller_root(p, ring.precision()), (p - 1) / l);
}

/// (1/l) sum_g omega^{g e}; 1 when l | e and 0 otherwise.
std::uint64_t average_character(std::uint64_t omega, unsigned l, std::uint64_t e, const ResidueRing& ring) {
    const std::uint64_t w = ring.pow(omega, e);
    std::uint64_t sum = 0, term = 1;
    for (unsigned g = 0; g < l; ++g) {
        sum = ring.add(sum, term);
        term = ring.mul(term, w);
    }
    const std::uint64_t avg = ring.mul(sum, ring.inv(l));
    if (avg > 1) throw Error(ErrorCode::InvalidArgument, "character average is not 0 or 1");
    return avg;
}

GradedOperator sum_of_idempotents(const std::vector<std::uint64_t>& residues, const GradedOperator& psi_op,
                                  std::uint64_t zeta) {
    GradedOperator f = GradedOperator::zero(psi_op.prime(), psi_op.precision(), psi_op.top_index());
    for (std::uint64_t s : residues) f = f + idempotent_e(s, psi_op, zeta);
    return f;
}

}  // namespace

GradedOperator::GradedOperator(std::uint64_t p, unsigned k, std::size_t n, std::vector<std::uint64_t> coeffs)
    : ring_(p, k), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != n + 1) throw Error(ErrorCode::InvalidArgument, "operator needs N + 1 coefficients");
    for (auto& c : coeffs_) c %= ring_.modulus();
}

GradedOperator GradedOperator::zero(std::uint64_t p, unsigned k, std::size_t n) {
    return GradedOperator(p, k, n, std::vector<std::uint64_t>(n + 1, 0));
}

GradedOperator GradedOperator::identity(std::uint64_t p, unsigned k, std::size_t n) {
    return GradedOperator(p, k, n, std::vector<std::uint64_t>(n + 1, 1));
}

std::vector<std::size_t> GradedOperator::support() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) out.push_back(j);
    return out;
}

bool GradedOperator::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

GradedOperator GradedOperator::pow(std::uint64_t e) const {
    GradedOperator out = *this;
    for (auto& c : out.coeffs_) c = ring_.pow(c, e);
    return out;
}

GradedOperator GradedOperator::scaled(std::uint64_t c) const {
    GradedOperator out = *this;
    for (auto& x : out.coeffs_) x = ring_.mul(x, c % ring_.modulus());
    return out;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    require_same_shape(a, b);
    GradedOperator out = a;
    for (std::size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = a.ring_.mul(a.coeffs_[j], b.coeffs_[j]);
    return out;
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    require_same_shape(a, b);
    GradedOperator out = a;
    for (std::size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = a.ring_.add(a.coeffs_[j], b.coeffs_[j]);
    return out;
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::uint64_t teichmuller_root(std::uint64_t p, unsigned k) {
    require_odd_prime(p);
    const ResidueRing ring(p, k);
    const auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        const bool primitive = std::none_of(factors.begin(), factors.end(), [&](std::uint64_t q) {
            return ResidueRing(p, 1).pow(g, (p - 1) / q) == 1;
        });
        if (primitive) return teichmuller(g, ring);
    }
    throw Error(ErrorCode::InvalidArgument, "no primitive root mod " + std::to_string(p));
}

GradedOperator psi(std::uint64_t p, std::uint64_t zeta, std::size_t n, unsigned k) {
    require_odd_prime(p);
    const ResidueRing ring(p, k);
    zeta %= ring.modulus();
    if (ring.pow(zeta, p - 1) != 1)
        throw Error(ErrorCode::NotPrimitiveRoot, std::to_string(zeta) + "^(p-1) is not 1 mod p^" + std::to_string(k));
    for (std::uint64_t q : prime_factors(p - 1))
        if (ring.pow(zeta, (p - 1) / q) == 1)
            throw Error(ErrorCode::NotPrimitiveRoot, std::to_string(zeta) + " does not have order p - 1");
    std::vector<std::uint64_t> c(n + 1);
    std::uint64_t x = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        c[j] = x;
        x = ring.mul(x, zeta);
    }
    return GradedOperator(p, k, n, std::move(c));
}

GradedOperator idempotent_e(std::uint64_t s, const GradedOperator& psi_op, std::uint64_t zeta) {
    const std::uint64_t p = psi_op.prime();
    const ResidueRing& ring = psi_op.ring();
    const std::size_t n = psi_op.top_index();
    s %= p - 1;

    // psi^{p-1} = 1, so every polynomial in psi is periodic in j with period
    // p - 1; evaluate the sum on one period and repeat it.
    const std::size_t period = std::min<std::size_t>(n + 1, p - 1);
    std::vector<std::uint64_t> head(psi_op.coeffs().begin(), psi_op.coeffs().begin() + static_cast<std::ptrdiff_t>(period));
    const GradedOperator psi_head(p, psi_op.precision(), period - 1, head);

    const std::uint64_t zeta_inv_s = ring.pow(ring.inv(zeta % ring.modulus()), s);
    GradedOperator acc = GradedOperator::zero(p, psi_op.precision(), period - 1);
    GradedOperator psi_i = GradedOperator::identity(p, psi_op.precision(), period - 1);
    std::uint64_t weight = 1;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
        acc = acc + psi_i.scaled(weight);
        psi_i = psi_i * psi_head;
        weight = ring.mul(weight, zeta_inv_s);
    }
    acc = acc.scaled(ring.inv(p - 1));

    std::vector<std::uint64_t> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c[j] = acc.coeff(j % period);
    return GradedOperator(p, psi_op.precision(), n, std::move(c));
}

GradedOperator idempotent_indicator(std::uint64_t s, std::uint64_t p, std::size_t n, unsigned k) {
    require_odd_prime(p);
    std::vector<std::uint64_t> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c[j] = (j % (p - 1) == s % (p - 1)) ? 1 : 0;
    return GradedOperator(p, k, n, std::move(c));
}

TransferImage transfer_image_bg(std::uint64_t p, unsigned l, std::size_t n, unsigned k) {
    require_odd_prime(p);
    require_l(p, l);
    const std::uint64_t zeta = teichmuller_root(p, k);
    const GradedOperator psi_op = psi(p, zeta, n, k);

    TransferImage out{l, {}, GradedOperator::zero(p, k, n), {}};
    // e_0 + e_l + ... + e_{p-1-l}
    for (std::uint64_t i = 0; i < (p - 1) / l; ++i) out.residues.push_back(i * l);
    out.f = sum_of_idempotents(out.residues, psi_op, zeta);

    const ResidueRing& ring = psi_op.ring();
    const std::uint64_t omega = root_of_order(p, l, ring);
    std::map<int, std::int64_t> ranks;
    for (std::size_t m = 0; m <= n; ++m) ranks[static_cast<int>(2 * m)] = static_cast<std::int64_t>(average_character(omega, l, m, ring));
    out.ranks = GradedRanks(std::move(ranks));
    return out;
}

TransferImage transfer_image_umkehr(std::uint64_t p, unsigned l, std::size_t n, unsigned k) {
    require_odd_prime(p);
    require_l(p, l);
    const std::uint64_t zeta = teichmuller_root(p, k);
    const GradedOperator psi_op = psi(p, zeta, n, k);

    TransferImage out{l, {}, GradedOperator::zero(p, k, n), {}};
    // Indices (i+1)l - 1 for i = 0, .., (p-1)/l; the last one repeats l - 1.
    std::set<std::uint64_t> residues;
    for (std::uint64_t i = 0; i <= (p - 1) / l; ++i) residues.insert(((i + 1) * l - 1) % (p - 1));
    out.residues.assign(residues.begin(), residues.end());
    out.f = sum_of_idempotents(out.residues, psi_op, zeta);

    // z^m twisted by the weight one character is invariant iff l | m + 1.
    const ResidueRing& ring = psi_op.ring();
    const std::uint64_t omega = root_of_order(p, l, ring);
    std::map<int, std::int64_t> ranks;
    for (std::size_t m = 0; 2 * m + 1 <= 2 * n; ++m)
        ranks[static_cast<int>(2 * m + 1)] = static_cast<std::int64_t>(average_character(omega, l, m + 1, ring));
    out.ranks = GradedRanks(std::move(ranks));
    return out;
}

bool SplittingReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool verify_framing_obstruction(std::uint64_t p, unsigned l, std::size_t n, unsigned k) {
    require_odd_prime(p);
    if (l == 2) throw Error(ErrorCode::InvalidL, "l = 2 is handled by classical Pittie–Smith case");
    require_l(p, l);
    const std::uint64_t zeta = teichmuller_root(p, k);
    const GradedOperator e0 = idempotent_e(0, psi(p, zeta, n, k), zeta);
    const GradedOperator f = transfer_image_umkehr(p, l, n, k).f;
    return (e0 * f).is_zero() && (f * e0).is_zero();
}

bool verify_framing_obstruction(std::uint64_t p, unsigned l) { return verify_framing_obstruction(p, l, 3 * (p - 1)); }

SplittingReport splitting_checks(std::uint64_t p, unsigned l, std::size_t n, unsigned k) {
    require_odd_prime(p);
    require_l(p, l);
    SplittingReport rep;
    rep.p = p;
    rep.l = l;
    rep.degree_bound = 2 * n;
    auto check = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };

    const std::uint64_t zeta = teichmuller_root(p, k);
    const GradedOperator psi_op = psi(p, zeta, n, k);
    const GradedOperator id = GradedOperator::identity(p, k, n);
    check("psi^(p-1) = id", psi_op.pow(p - 1) == id);

    std::vector<GradedOperator> e;
    for (std::uint64_t s = 0; s + 1 < p; ++s) e.push_back(idempotent_e(s, psi_op, zeta));

    bool idem = true, orth = true, indicator = true;
    GradedOperator total = GradedOperator::zero(p, k, n);
    for (std::size_t s = 0; s < e.size(); ++s) {
        idem = idem && (e[s] * e[s] == e[s]);
        for (std::size_t t = s + 1; t < e.size(); ++t) orth = orth && (e[s] * e[t]).is_zero();
        indicator = indicator && (e[s] == idempotent_indicator(s, p, n, k));
        total = total + e[s];
    }
    check("e_s idempotent", idem);
    check("e_s pairwise orthogonal", orth);
    check("sum of e_s = id", total == id);
    check("e_s = indicator of j = s mod p-1", indicator);

    const TransferImage bg = transfer_image_bg(p, l, n, k);
    const TransferImage um = transfer_image_umkehr(p, l, n, k);
    rep.bg_residues = bg.residues;
    rep.umkehr_residues = um.residues;

    bool bg_ok = std::all_of(bg.residues.begin(), bg.residues.end(), [&](std::uint64_t s) { return s % l == 0; });
    bool um_ok = std::all_of(um.residues.begin(), um.residues.end(), [&](std::uint64_t s) { return (s + 1) % l == 0; });
    check("f_BG residues = 0 mod l", bg_ok && bg.residues.size() == (p - 1) / l);
    check("f residues = -1 mod l", um_ok && um.residues.size() == (p - 1) / l);

    bool bg_support = true, bn_ranks = true;
    for (std::size_t j = 0; j <= n; ++j) {
        bg_support = bg_support && (bg.f.coeff(j) == (j % l == 0 ? 1u : 0u));
        bn_ranks = bn_ranks && (bg.ranks.rank(static_cast<int>(2 * j)) == (j % l == 0 ? 1 : 0));
    }
    check("f_BG = indicator of j = 0 mod l", bg_support);
    check("H*(BN) = Z_p[z^l]", bn_ranks);
    check("f_BG and f idempotent", bg.f * bg.f == bg.f && um.f * um.f == um.f);
    check("e_0 f = f e_0 = 0", (e[0] * um.f).is_zero() && (um.f * e[0]).is_zero());
    return rep;
}

}  // namespace pflag
