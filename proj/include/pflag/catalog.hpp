#pragma once

// Built-in reflection groups and the JSON group-specification format.
//
// A group file looks like
//
//   {
//     "name": "G7",
//     "rank": 2,
//     "conductor": 24,
//     "generators": [ [[c00, c01], [c10, c11]], ... ],
//     "primes": [13]
//   }
//
// where every matrix entry c is an array of phi(conductor) rationals written
// as "a/b" strings: the coordinates in the basis 1, zeta, ..., zeta^(phi-1).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pflag/cyc_matrix.hpp"

namespace pflag {

struct GroupSpec {
    std::string name;
    std::size_t rank = 0;
    unsigned conductor = 1;
    std::vector<CycMatrix> generators;
    std::vector<std::uint64_t> primes;  // intended primes, may be empty
};

struct CatalogEntry {
    std::string name;
    std::string description;
};

std::vector<CatalogEntry> catalog_entries();

/// C_m acting on rank 1 by a primitive m-th root of unity.
GroupSpec cyclic_group(unsigned m);
/// S_n on the root lattice of type A_{n-1}, generated by simple transpositions.
GroupSpec symmetric_group(unsigned n);
/// Shephard-Todd no. 7 from s = diag(-1, 1) and the two order-3 generators over Q(zeta_24).
GroupSpec g7_group();
/// Weyl group C_{p-1} of the Sullivan sphere S^{2p-3}.
GroupSpec sullivan_group(std::uint64_t p);

/// Looks up "C<m>", "S<n>", "SU2", "G7" or "sullivan" (needs a prime). Throws UnknownGroup.
GroupSpec catalog_lookup(std::string_view name, std::optional<std::uint64_t> prime = std::nullopt);

/// Throws ParseError (with line/field diagnostics) or NonInvertibleGenerator.
GroupSpec parse_group_spec(std::string_view text);
GroupSpec parse_group_file(const std::filesystem::path& path);
/// Canonical serialization; parse_group_spec(serialize_group_spec(g)) reproduces g.
std::string serialize_group_spec(const GroupSpec& spec);

/// A path to an existing file is parsed, anything else goes to the catalog.
GroupSpec resolve_group(std::string_view name_or_path, std::optional<std::uint64_t> prime = std::nullopt);

/// Built-in (group, prime) pairs used as the reference set of p-compact models.
std::vector<std::pair<GroupSpec, std::uint64_t>> catalog_models();

}  // namespace pflag
