#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pflag/cyc_matrix.hpp"

namespace pflag {

inline constexpr std::size_t kDefaultGroupCap = 100000;

struct Reflection {
    std::size_t element;              // index into ReflectionGroup::elements()
    unsigned order;                   // order of the matrix
    std::vector<CycVector> hyperplane;  // basis of the fixed hyperplane (r - 1 vectors)
    CyclotomicNumber eigenvalue;      // the non-unit eigenvalue, equal to the determinant
    bool primitive;                   // not a proper power of a reflection of larger order
};

/// A finite matrix group with its elements enumerated in breadth-first order
/// from the identity, right-multiplying by generators in the given order.
class ReflectionGroup {
   public:
    std::size_t rank() const noexcept { return rank_; }
    unsigned conductor() const noexcept { return conductor_; }
    std::size_t order() const noexcept { return elements_.size(); }

    const std::vector<CycMatrix>& generators() const noexcept { return generators_; }
    const std::vector<CycMatrix>& elements() const noexcept { return elements_; }
    const CycMatrix& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<Reflection>& reflections() const noexcept { return reflections_; }
    const CycMatrix& reflection_matrix(std::size_t r) const { return elements_.at(reflections_.at(r).element); }

    /// Order of element i, by repeated multiplication.
    unsigned element_order(std::size_t i) const { return orders_.at(i); }
    std::optional<std::size_t> index_of(const CycMatrix& m) const;
    /// Index of elements()[a] * elements()[b].
    std::size_t product_index(std::size_t a, std::size_t b) const;
    /// Element indices of the cyclic subgroup generated by element i, as powers 1, w, w^2, ...
    std::vector<std::size_t> powers(std::size_t i) const;

    friend ReflectionGroup close_group(std::size_t rank, unsigned conductor, const std::vector<CycMatrix>& generators,
                                       std::size_t cap);

   private:
    std::size_t rank_ = 0;
    unsigned conductor_ = 1;
    std::vector<CycMatrix> generators_;
    std::vector<CycMatrix> elements_;
    std::vector<unsigned> orders_;
    std::vector<Reflection> reflections_;
    std::unordered_map<CycMatrix, std::size_t, CycMatrixHash> index_;
};

/// Breadth-first closure. Throws CapExceeded, NonInvertibleGenerator, InvalidArgument.
ReflectionGroup close_group(std::size_t rank, unsigned conductor, const std::vector<CycMatrix>& generators,
                            std::size_t cap = kDefaultGroupCap);
/// Rank and conductor taken from the (nonempty) generator list.
ReflectionGroup close_group(const std::vector<CycMatrix>& generators, std::size_t cap = kDefaultGroupCap);

/// Least order of a primitive reflection. Throws NoReflections.
unsigned minimal_primitive_order(const ReflectionGroup& group);

/// First `terms` coefficients of (1/|W|) sum_w 1/det(1 - t w); throws
/// DegreeExtractionFailed if a coefficient is not a rational integer.
std::vector<Integer> molien_series(const ReflectionGroup& group, std::size_t terms);

/// Degrees d_1 <= ... <= d_r with Molien series prod 1/(1 - t^{d_i}).
std::vector<unsigned> molien_degrees(const ReflectionGroup& group);

struct GeneratingReflections {
    std::vector<std::size_t> reflections;  // indices into group.reflections()
    std::size_t size() const noexcept { return reflections.size(); }
};

/// Smallest set of reflections generating the group, searched level by level
/// over distinct reflection subgroups. Throws NotReflectionGenerated, BoundExceeded.
GeneratingReflections min_generating_reflections(const ReflectionGroup& group, std::size_t bound);

struct Parabolic {
    ReflectionGroup group;
    std::vector<CycVector> fixed_basis;
};

/// W_I generated by the given reflections, with a basis of their common fixed subspace.
Parabolic parabolic(const ReflectionGroup& group, const std::vector<std::size_t>& reflection_indices);

/// Indices of elements fixing every vector of the given basis.
std::vector<std::size_t> pointwise_stabilizer(const ReflectionGroup& group, const std::vector<CycVector>& basis);

}  // namespace pflag
