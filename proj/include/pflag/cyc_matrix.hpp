#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pflag/cyclotomic.hpp"

namespace pflag {

using CycVector = std::vector<CyclotomicNumber>;

/// Square matrix over a single cyclotomic field, stored row-major.
class CycMatrix {
   public:
    CycMatrix() = default;
    /// Entries are promoted to a common conductor (the lcm of `conductor` and all entry conductors).
    CycMatrix(std::size_t rank, std::vector<CyclotomicNumber> entries, unsigned conductor = 1);

    static CycMatrix identity(std::size_t rank, unsigned conductor = 1);
    static CycMatrix diagonal(const CycVector& diag);

    std::size_t rank() const noexcept { return rank_; }
    unsigned conductor() const noexcept { return conductor_; }
    const CyclotomicNumber& operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
    const std::vector<CyclotomicNumber>& entries() const noexcept { return entries_; }

    CycMatrix promoted(unsigned m) const;

    bool is_identity() const;
    CyclotomicNumber trace() const;
    CyclotomicNumber determinant() const;
    CycMatrix inverse() const;
    CycMatrix pow(long e) const;
    CycMatrix minus_identity() const;
    CycVector apply(const CycVector& v) const;

    /// Coefficients a_0..a_r of det(I - t*M) = sum a_i t^i (a_0 = 1).
    CycVector reversed_charpoly() const;

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

    std::size_t hash() const noexcept;
    std::string to_string() const;

   private:
    std::size_t rank_ = 0;
    unsigned conductor_ = 1;
    std::vector<CyclotomicNumber> entries_;
};

struct CycMatrixHash {
    std::size_t operator()(const CycMatrix& m) const noexcept { return m.hash(); }
};

/// Rank of a (rows x cols) matrix given row-major, by exact elimination.
std::size_t matrix_rank(std::vector<CycVector> rows);

/// Basis of the right kernel {v : A v = 0} of a (rows x cols) matrix, one
/// basis vector per free column of the reduced row echelon form.
std::vector<CycVector> kernel_basis(std::vector<CycVector> rows, std::size_t cols, unsigned conductor);

/// Rows of a square matrix as vectors.
std::vector<CycVector> rows_of(const CycMatrix& m);

}  // namespace pflag
