#pragma once

// Numeric invariants of the p-compact group attached to a p-adic reflection group.

#include <cstdint>
#include <vector>

#include "pflag/graded.hpp"
#include "pflag/padic.hpp"
#include "pflag/reflection_group.hpp"

namespace pflag {

struct PCompactModel {
    std::uint64_t p = 0;
    std::size_t rank = 0;
    ReflectionGroup weyl;
    Embedding embedding;
    std::vector<unsigned> degrees;
    unsigned dimension = 0;  // sum of 2 d_i - 1
    std::size_t r_prime = 0;
    std::size_t kappa = 0;  // r + 1 - r'
    unsigned l = 0;         // least order of a primitive reflection
    GeneratingReflections generating;
};

/// Throws NoEmbedding, NoReflections, NotReflectionGenerated.
PCompactModel build_model(const ReflectionGroup& weyl, std::uint64_t p, unsigned precision = kDefaultPrecision);

/// Poincare polynomial of G/C_I in t, where I lists positions in model.generating.
/// Empty I gives G/T.
IntPolynomial flag_poincare(const PCompactModel& model, const std::vector<std::size_t>& subset = {});

struct CentralizerReport {
    std::size_t reflection = 0;  // index into weyl.reflections()
    unsigned order = 0;
    std::vector<unsigned> degrees;  // degrees of <s> on the rank r space
    unsigned dimension = 0;         // (r - 1) + (2 l_s - 1)
    bool single_nontrivial_degree = false;
    bool stabilizer_is_cyclic = false;  // <s> is the pointwise stabilizer of the hyperplane
};

/// Weyl-group bookkeeping for the centralizer of a primitive reflection. Throws NotPrimitive.
CentralizerReport centralizer_structure(const PCompactModel& model, std::size_t reflection);

}  // namespace pflag
