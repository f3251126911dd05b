#pragma once

// Mayer-Vietoris spectral sequence of a diagram on the poset of proper subsets
// of {0, .., k-1}. Subsets are bitmasks; F(I) is given by the ranks of its
// homology, and optionally by maps along covering inclusions I < I + {j}.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pflag/graded.hpp"
#include "pflag/pcompact.hpp"

namespace pflag {

/// Integer matrix, row-major: rows index the target basis, columns the source.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> entries;

    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// Rank over Q.
std::size_t rank_over_q(const IntMatrix& m);

class PosetDiagram {
   public:
    /// values[mask] for every mask < 2^k - 1. Throws InvalidArgument.
    PosetDiagram(unsigned k, std::vector<GradedRanks> values);

    unsigned k() const noexcept { return k_; }
    std::uint32_t full_mask() const noexcept { return (1u << k_) - 1; }
    const GradedRanks& value(std::uint32_t mask) const { return values_.at(mask); }
    const std::vector<GradedRanks>& values() const noexcept { return values_; }

    /// Map H_q F(mask) -> H_q F(mask | 1 << j); shape must match the ranks.
    void set_map(std::uint32_t mask, unsigned j, int q, IntMatrix m);
    bool has_maps() const noexcept { return !maps_.empty(); }
    /// Missing maps between nonzero groups count as absent; maps into or out of a zero group are empty.
    std::optional<IntMatrix> map(std::uint32_t mask, unsigned j, int q) const;
    /// Every square mask -> mask+i -> mask+i+j and mask -> mask+j -> mask+i+j commutes.
    bool is_functorial() const;

   private:
    unsigned k_;
    std::vector<GradedRanks> values_;
    std::map<std::tuple<std::uint32_t, unsigned, int>, IntMatrix> maps_;
};

/// Table (p, q) -> rank with 0 <= p <= k-1. Zero entries are not stored.
struct SSPage {
    unsigned k = 0;
    std::map<std::pair<int, int>, std::int64_t> entries;

    std::int64_t at(int p, int q) const;
    std::int64_t euler_characteristic() const;
    /// Ranks by total degree p + q.
    GradedRanks total_ranks() const;
    int max_q() const;
};

SSPage e1_page(const PosetDiagram& diagram);
/// E^2 from d^1 with sign (-1)^{#{i in I : i < j}} on the inclusion I -> I + {j}.
/// Requires maps on every covering inclusion; throws InvalidArgument if missing
/// or not functorial.
SSPage e2_page(const PosetDiagram& diagram);

/// dim F(empty) + k - 1, after checking dim F(empty) > dim F(I) for I nonempty and
/// that E^1_{k-1, dim F(empty)} is the only entry in rows q >= dim F(empty).
/// Throws HypothesisViolated.
int hocolim_dim(const PosetDiagram& diagram);
/// Rank of the top homology of the homotopy colimit. Throws HypothesisViolated.
std::int64_t top_rank(const PosetDiagram& diagram);
/// Alternating sum over the diagram with signs (-1)^{k-1-|I|}.
std::int64_t diagram_euler_characteristic(const PosetDiagram& diagram);

/// F(empty) = S^n, F(I) = point otherwise; with maps, H_0 S^n -> H_0(point) is 1
/// and points map to points by 1.
PosetDiagram sphere_diagram(unsigned n, unsigned k, bool with_maps);

/// I -> H*(G/C_I) over the proper subsets of the minimal generating reflections.
PosetDiagram adjoint_diagram(const PCompactModel& model);

struct AdjointReport {
    unsigned k = 0;  // r'
    std::size_t kappa = 0;
    SSPage page;  // E^1 of the hocolim, before the kappa-fold suspension
    int dim = 0;  // hocolim dimension + kappa
    std::int64_t top_rank = 0;
    std::int64_t euler = 0;  // Euler characteristic of the E^1 page shifted by kappa
    bool exact = false;      // true when r' = 1 and homology is the suspension of G/T
    GradedRanks homology;    // exact reduced H*(A_G) when exact, otherwise E^1 total-degree bounds
    std::string verdict;     // "sphere", "not a sphere", or "E1 bound only"
};

/// Throws HypothesisViolated if dim A_G differs from d or the top rank is not 1.
AdjointReport adjoint_homology(const PCompactModel& model);

}  // namespace pflag
