#include "pflag/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pflag/error.hpp"

namespace pflag {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place reduction modulo a monic integer polynomial; result has size deg(mod).
void reduce_mod(QPoly& poly, const std::vector<long>& mod) {
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        const Rational c = poly[i];
        const std::size_t shift = i - deg;
        for (std::size_t j = 0; j < deg; ++j) {
            if (mod[j] != 0) poly[shift + j] -= c * mod[j];
        }
        poly[i] = 0;
    }
    poly.resize(deg);
}

// Quotient and remainder of a / b over Q; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) continue;
        const Rational c = a[i] / lead;
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        if (i == 0) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    Integer d(strip_plus(den));
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(strip_plus(num)), d);
    q.canonicalize();
    return q;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / gcd_u64(a, b) * b; }

std::vector<long> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long> div = cyclotomic_polynomial(d);
        const std::size_t dd = div.size() - 1;
        std::vector<long> quot(poly.size() - dd, 0);
        for (std::size_t i = poly.size(); i-- > dd;) {
            const long c = poly[i];
            quot[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
        }
        poly = std::move(quot);
    }
    return poly;
}

CyclotomicField::CyclotomicField(unsigned n)
    : n_(n), phi_(static_cast<unsigned>(euler_phi(n))), modulus_(cyclotomic_polynomial(n)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const CyclotomicField>(n);
    return slot;
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(CyclotomicField::get(1), QPoly(1)) {}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > field_->degree()) reduce_mod(coeffs_, field_->modulus());
    coeffs_.resize(field_->degree());
}

CyclotomicNumber::CyclotomicNumber(unsigned conductor, std::vector<Rational> coeffs)
    : CyclotomicNumber(CyclotomicField::get(conductor), std::move(coeffs)) {}

CyclotomicNumber CyclotomicNumber::zero(unsigned conductor) { return {conductor, {}}; }

CyclotomicNumber CyclotomicNumber::one(unsigned conductor) { return rational(1, conductor); }

CyclotomicNumber CyclotomicNumber::rational(const Rational& q, unsigned conductor) {
    return {conductor, QPoly{q}};
}

CyclotomicNumber CyclotomicNumber::zeta_power(unsigned conductor, long e) {
    const long n = conductor;
    const long r = ((e % n) + n) % n;
    QPoly poly(static_cast<std::size_t>(r) + 1);
    poly[static_cast<std::size_t>(r)] = 1;
    return {conductor, std::move(poly)};
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_.front() == 1; }

CyclotomicNumber CyclotomicNumber::promoted(unsigned m) const {
    const unsigned n = conductor();
    if (m == n) return *this;
    if (m % n != 0)
        throw Error(ErrorCode::ConductorMismatch,
                    "cannot promote conductor " + std::to_string(n) + " to " + std::to_string(m));
    const std::size_t step = m / n;
    QPoly poly((coeffs_.size() - 1) * step + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
    return {m, std::move(poly)};
}

void CyclotomicNumber::align_with(CyclotomicNumber& other) {
    if (conductor() == other.conductor()) return;
    const auto m = static_cast<unsigned>(lcm_u64(conductor(), other.conductor()));
    *this = promoted(m);
    other = other.promoted(m);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    if (conductor() != rhs.conductor()) {
        CyclotomicNumber r = rhs;
        align_with(r);
        return *this += r;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    if (conductor() != rhs.conductor()) {
        CyclotomicNumber r = rhs;
        align_with(r);
        return *this -= r;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    if (conductor() != rhs.conductor()) {
        CyclotomicNumber r = rhs;
        align_with(r);
        return *this *= r;
    }
    QPoly prod = mul(coeffs_, rhs.coeffs_);
    if (prod.size() < coeffs_.size()) prod.resize(coeffs_.size());
    reduce_mod(prod, field_->modulus());
    coeffs_ = std::move(prod);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    if (is_rational()) return {field_, QPoly{1 / coeffs_.front()}};
    // Extended Euclid: track s with s * a == r (mod Phi_n).
    QPoly modulus(field_->modulus().begin(), field_->modulus().end());
    QPoly r0 = modulus, r1 = coeffs_;
    QPoly s0{}, s1{1};
    trim(r1);
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant because Phi_n is irreducible.
    const Rational c = r1.front();
    for (auto& x : s1) x /= c;
    return {field_, std::move(s1)};
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
    CyclotomicNumber base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    CyclotomicNumber result = one(conductor());
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
    const auto m = static_cast<unsigned>(lcm_u64(a.conductor(), b.conductor()));
    return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::size_t CyclotomicNumber::hash() const noexcept {
    // Consistent with == only among values of equal conductor.
    std::size_t h = conductor();
    for (const auto& c : coeffs_) {
        const std::size_t num = mpz_fdiv_ui(c.get_num_mpz_t(), 1000000007UL) + (mpz_sgn(c.get_num_mpz_t()) < 0);
        const std::size_t den = mpz_fdiv_ui(c.get_den_mpz_t(), 998244353UL);
        h = h * 1099511628211ULL ^ (num * 31 + den);
    }
    return h;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        const Rational mag = abs(coeffs_[i]);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "z" << conductor();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

unsigned root_of_unity_order(const CyclotomicNumber& x) {
    if (x.is_zero()) return 0;
    const unsigned n = x.conductor();
    const unsigned bound = n % 2 == 0 ? n : 2 * n;
    CyclotomicNumber y = x;
    for (unsigned m = 1; m <= bound; ++m) {
        if (y.is_one()) return m;
        y *= x;
    }
    return 0;
}

}  // namespace pflag
