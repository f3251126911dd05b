#include "pflag/cyc_matrix.hpp"

#include <sstream>
#include <utility>

#include "pflag/error.hpp"

namespace pflag {

namespace {

struct Echelon {
    std::vector<CycVector> rows;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form over the cyclotomic field. Pivots are searched in
// the first `cols` columns; row operations act on the whole row.
Echelon rref(std::vector<CycVector> rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const CyclotomicNumber inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const CyclotomicNumber factor = rows[i][c];
            for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return {std::move(rows), std::move(pivots)};
}

}  // namespace

CycMatrix::CycMatrix(std::size_t rank, std::vector<CyclotomicNumber> entries, unsigned conductor)
    : rank_(rank), conductor_(conductor), entries_(std::move(entries)) {
    if (entries_.size() != rank_ * rank_)
        throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match rank");
    for (const auto& e : entries_) conductor_ = static_cast<unsigned>(lcm_u64(conductor_, e.conductor()));
    for (auto& e : entries_) e = e.promoted(conductor_);
}

CycMatrix CycMatrix::identity(std::size_t rank, unsigned conductor) {
    std::vector<CyclotomicNumber> entries(rank * rank, CyclotomicNumber::zero(conductor));
    for (std::size_t i = 0; i < rank; ++i) entries[i * rank + i] = CyclotomicNumber::one(conductor);
    return {rank, std::move(entries), conductor};
}

CycMatrix CycMatrix::diagonal(const CycVector& diag) {
    unsigned n = 1;
    for (const auto& d : diag) n = static_cast<unsigned>(lcm_u64(n, d.conductor()));
    CycMatrix m = identity(diag.size(), n);
    for (std::size_t i = 0; i < diag.size(); ++i) m.entries_[i * diag.size() + i] = diag[i].promoted(n);
    return m;
}

CycMatrix CycMatrix::promoted(unsigned m) const {
    if (m == conductor_) return *this;
    return {rank_, entries_, m};
}

bool CycMatrix::is_identity() const {
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) {
            const auto& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

CyclotomicNumber CycMatrix::trace() const {
    CyclotomicNumber t = CyclotomicNumber::zero(conductor_);
    for (std::size_t i = 0; i < rank_; ++i) t += (*this)(i, i);
    return t;
}

CyclotomicNumber CycMatrix::determinant() const {
    std::vector<CycVector> a = rows_of(*this);
    CyclotomicNumber det = CyclotomicNumber::one(conductor_);
    for (std::size_t c = 0; c < rank_; ++c) {
        std::size_t pivot = c;
        while (pivot < rank_ && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rank_) return CyclotomicNumber::zero(conductor_);
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const CyclotomicNumber inv = a[c][c].inverse();
        for (std::size_t i = c + 1; i < rank_; ++i) {
            if (a[i][c].is_zero()) continue;
            const CyclotomicNumber factor = a[i][c] * inv;
            for (std::size_t j = c; j < rank_; ++j) a[i][j] -= factor * a[c][j];
        }
    }
    return det;
}

CycMatrix CycMatrix::inverse() const {
    std::vector<CycVector> aug = rows_of(*this);
    for (std::size_t i = 0; i < rank_; ++i) {
        aug[i].resize(2 * rank_, CyclotomicNumber::zero(conductor_));
        aug[i][rank_ + i] = CyclotomicNumber::one(conductor_);
    }
    Echelon e = rref(std::move(aug), rank_);
    if (e.pivots.size() != rank_) throw Error(ErrorCode::NonInvertibleGenerator, "matrix is singular");
    std::vector<CyclotomicNumber> entries;
    entries.reserve(rank_ * rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) entries.push_back(e.rows[i][rank_ + j]);
    return {rank_, std::move(entries), conductor_};
}

CycMatrix CycMatrix::pow(long e) const {
    CycMatrix base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    CycMatrix result = identity(rank_, conductor_);
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

CycMatrix CycMatrix::minus_identity() const { return *this - identity(rank_, conductor_); }

CycVector CycMatrix::apply(const CycVector& v) const {
    CycVector out(rank_, CyclotomicNumber::zero(conductor_));
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

CycVector CycMatrix::reversed_charpoly() const {
    // Faddeev-LeVerrier: char poly x^r + c_1 x^{r-1} + ... + c_r, then
    // det(I - tM) = 1 + c_1 t + ... + c_r t^r.
    CycVector coeffs(rank_ + 1, CyclotomicNumber::zero(conductor_));
    coeffs[0] = CyclotomicNumber::one(conductor_);
    CycMatrix mk;
    CycMatrix m_prev = CycMatrix(rank_, std::vector<CyclotomicNumber>(rank_ * rank_, CyclotomicNumber::zero(conductor_)),
                                 conductor_);
    for (std::size_t k = 1; k <= rank_; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I
        CycMatrix scaled = identity(rank_, conductor_);
        for (auto& e : scaled.entries_) e *= coeffs[k - 1];
        mk = (*this) * m_prev + scaled;
        const CycMatrix amk = (*this) * mk;
        coeffs[k] = -amk.trace() / CyclotomicNumber::rational(static_cast<long>(k));
        m_prev = mk;
    }
    return coeffs;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.rank_ != b.rank_) throw Error(ErrorCode::InvalidArgument, "rank mismatch in product");
    if (a.conductor_ != b.conductor_) {
        const auto m = static_cast<unsigned>(lcm_u64(a.conductor_, b.conductor_));
        return a.promoted(m) * b.promoted(m);
    }
    const std::size_t r = a.rank_;
    std::vector<CyclotomicNumber> entries(r * r, CyclotomicNumber::zero(a.conductor_));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < r; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero()) entries[i * r + j] += aik * bkj;
            }
        }
    return {r, std::move(entries), a.conductor_};
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    if (a.rank_ != b.rank_) throw Error(ErrorCode::InvalidArgument, "rank mismatch in sum");
    std::vector<CyclotomicNumber> entries = a.entries_;
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += b.entries_[i];
    return {a.rank_, std::move(entries), static_cast<unsigned>(lcm_u64(a.conductor_, b.conductor_))};
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
    if (a.rank_ != b.rank_) throw Error(ErrorCode::InvalidArgument, "rank mismatch in difference");
    std::vector<CyclotomicNumber> entries = a.entries_;
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= b.entries_[i];
    return {a.rank_, std::move(entries), static_cast<unsigned>(lcm_u64(a.conductor_, b.conductor_))};
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
}

std::size_t CycMatrix::hash() const noexcept {
    std::size_t h = rank_;
    for (const auto& e : entries_) h = h * 0x9E3779B97F4A7C15ULL ^ e.hash();
    return h;
}

std::string CycMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rank_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < rank_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<CycVector> rows_of(const CycMatrix& m) {
    std::vector<CycVector> rows(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j) rows[i].push_back(m(i, j));
    return rows;
}

std::size_t matrix_rank(std::vector<CycVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    return rref(std::move(rows), cols).pivots.size();
}

std::vector<CycVector> kernel_basis(std::vector<CycVector> rows, std::size_t cols, unsigned conductor) {
    const Echelon e = rref(std::move(rows), cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<CycVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        CycVector v(cols, CyclotomicNumber::zero(conductor));
        v[free] = CyclotomicNumber::one(conductor);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pflag
