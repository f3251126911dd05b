#include "pflag/graded.hpp"

#include <sstream>

#include "pflag/error.hpp"

namespace pflag {

namespace {

void trim(std::vector<std::int64_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

IntPolynomial IntPolynomial::one_minus_t_pow(unsigned d) {
    std::vector<std::int64_t> c(d + 1, 0);
    c[0] += 1;
    c[d] -= 1;
    return IntPolynomial(std::move(c));
}

std::int64_t IntPolynomial::value_at_one() const {
    std::int64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
}

bool IntPolynomial::is_palindromic() const {
    for (std::size_t i = 0, j = coeffs_.size(); i < j--; ++i)
        if (coeffs_[i] != coeffs_[j]) return false;
    return true;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
    std::vector<std::int64_t> rem = a.coeffs_;
    if (rem.size() < b.coeffs_.size()) {
        if (!rem.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
        return {};
    }
    const std::int64_t lead = b.coeffs_.back();
    std::vector<std::int64_t> q(rem.size() - b.coeffs_.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        const std::int64_t top = rem[i + b.coeffs_.size() - 1];
        if (top % lead != 0) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
        q[i] = top / lead;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[i + j] -= q[i] * b.coeffs_[j];
    }
    trim(rem);
    if (!rem.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(char var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const std::int64_t mag = c < 0 ? -c : c;
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

GradedRanks::GradedRanks(std::map<int, std::int64_t> ranks) {
    for (auto [deg, r] : ranks) {
        if (r < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
        if (deg < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
        if (r > 0) ranks_.emplace(deg, r);
    }
}

GradedRanks GradedRanks::from_polynomial(const IntPolynomial& p) {
    std::map<int, std::int64_t> m;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) m[static_cast<int>(i)] = p.coeffs()[i];
    return GradedRanks(std::move(m));
}

std::int64_t GradedRanks::rank(int degree) const {
    const auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
}

int GradedRanks::top_degree() const { return ranks_.empty() ? -1 : ranks_.rbegin()->first; }

std::int64_t GradedRanks::euler_characteristic() const {
    std::int64_t chi = 0;
    for (auto [deg, r] : ranks_) chi += (deg % 2 == 0) ? r : -r;
    return chi;
}

std::int64_t GradedRanks::total_rank() const {
    std::int64_t total = 0;
    for (auto [deg, r] : ranks_) total += r;
    return total;
}

GradedRanks GradedRanks::shifted(int by) const {
    std::map<int, std::int64_t> m;
    for (auto [deg, r] : ranks_) m[deg + by] = r;
    return GradedRanks(std::move(m));
}

std::vector<int> GradedRanks::support() const {
    std::vector<int> out;
    for (auto [deg, r] : ranks_) out.push_back(deg);
    return out;
}

GradedRanks operator+(const GradedRanks& a, const GradedRanks& b) {
    std::map<int, std::int64_t> m = a.ranks_;
    for (auto [deg, r] : b.ranks_) m[deg] += r;
    return GradedRanks(std::move(m));
}

GradedRanks PeriodicRanks::truncated(int max_degree) const {
    std::map<int, std::int64_t> m;
    for (int d = 0; d <= max_degree; ++d) m[d] = pattern[static_cast<std::size_t>(d % period)];
    return GradedRanks(std::move(m));
}

}  // namespace pflag
