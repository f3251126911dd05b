#include "pflag/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pflag/error.hpp"
#include "pflag/padic.hpp"

namespace pflag {

namespace {

using ordered_json = nlohmann::ordered_json;

CyclotomicNumber zeta(unsigned n, long e) { return CyclotomicNumber::zeta_power(n, e); }
CyclotomicNumber rat(long a, long b = 1) { return CyclotomicNumber::rational(Rational(a, b)); }

std::optional<unsigned> parse_suffix(std::string_view name, char prefix) {
    if (name.size() < 2 || (name[0] != prefix && name[0] != prefix + ('a' - 'A'))) return std::nullopt;
    unsigned value = 0;
    const auto* begin = name.data() + 1;
    const auto* end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const ordered_json& require(const ordered_json& obj, const char* field) {
    if (!obj.contains(field)) parse_fail(std::string("missing field '") + field + "'");
    return obj.at(field);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"C<m>", "cyclic group of order m acting on rank 1 by a primitive m-th root of unity"},
        {"S<n>", "symmetric group S_n in its rank n-1 reflection representation"},
        {"SU2", "the group {+1, -1} in rank 1 (Weyl group of SU(2))"},
        {"G7", "Shephard-Todd group no. 7 in rank 2 over Q(zeta_24), order 144"},
        {"sullivan", "C_{p-1} in rank 1, Weyl group of the Sullivan sphere S^{2p-3} (needs --prime)"},
    };
}

GroupSpec cyclic_group(unsigned m) {
    if (m < 2) throw Error(ErrorCode::UnknownGroup, "cyclic group needs order at least 2");
    std::uint64_t p = 5;
    while (!is_prime(p) || (p - 1) % m != 0) ++p;
    return {"C" + std::to_string(m), 1, m, {CycMatrix(1, {zeta(m, 1)}, m)}, {p}};
}

GroupSpec symmetric_group(unsigned n) {
    if (n < 2) throw Error(ErrorCode::UnknownGroup, "symmetric group needs n at least 2");
    const std::size_t r = n - 1;
    std::vector<CycMatrix> gens;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<CyclotomicNumber> e(r * r, rat(0));
        for (std::size_t j = 0; j < r; ++j) e[j * r + j] = rat(1);
        // s_i(alpha_j) = alpha_j - a_ij alpha_i with the type A Cartan matrix.
        e[i * r + i] = rat(-1);
        if (i > 0) e[i * r + i - 1] = rat(1);
        if (i + 1 < r) e[i * r + i + 1] = rat(1);
        gens.emplace_back(r, std::move(e));
    }
    std::uint64_t p = 5;
    while (!is_prime(p) || p <= n) ++p;
    return {"S" + std::to_string(n), r, 1, std::move(gens), {p}};
}

GroupSpec g7_group() {
    constexpr unsigned n = 24;
    // 1/sqrt(2) = (zeta^3 + zeta^-3) / 2, since zeta_8 + zeta_8^-1 = sqrt(2).
    const CyclotomicNumber c = (zeta(n, 3) + zeta(n, -3)) * rat(1, 2);
    const CycMatrix s(2, {rat(-1), rat(0), rat(0), rat(1)}, n);
    const CycMatrix t(2, {-c * zeta(n, 1), c * zeta(n, 7), -c * zeta(n, 1), -c * zeta(n, 7)}, n);
    const CycMatrix u(2, {-c * zeta(n, 7), -c * zeta(n, 7), c * zeta(n, 1), -c * zeta(n, 1)}, n);
    return {"G7", 2, n, {s, t, u}, {13}};
}

GroupSpec sullivan_group(std::uint64_t p) {
    if (!is_prime(p) || p < 3) throw Error(ErrorCode::InvalidArgument, "Sullivan sphere needs an odd prime");
    const auto m = static_cast<unsigned>(p - 1);
    return {"sullivan", 1, m, {CycMatrix(1, {zeta(m, 1)}, m)}, {p}};
}

GroupSpec catalog_lookup(std::string_view name, std::optional<std::uint64_t> prime) {
    if (name == "G7" || name == "g7") return g7_group();
    if (name == "SU2" || name == "su2") {
        GroupSpec g = cyclic_group(2);
        g.name = "SU2";
        return g;
    }
    if (name == "sullivan") {
        if (!prime) throw Error(ErrorCode::UnknownGroup, "sullivan needs a prime");
        return sullivan_group(*prime);
    }
    if (auto m = parse_suffix(name, 'C')) return cyclic_group(*m);
    if (auto k = parse_suffix(name, 'S')) return symmetric_group(*k);
    throw Error(ErrorCode::UnknownGroup, "no catalog group or file named '" + std::string(name) + "'");
}

GroupSpec parse_group_spec(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(e.what());
    }
    if (!doc.is_object()) parse_fail("top level must be an object");

    GroupSpec spec;
    try {
        spec.name = require(doc, "name").get<std::string>();
        spec.rank = require(doc, "rank").get<std::size_t>();
        spec.conductor = require(doc, "conductor").get<unsigned>();
    } catch (const nlohmann::json::type_error& e) {
        parse_fail(std::string("bad field type: ") + e.what());
    }
    if (spec.rank == 0) parse_fail("field 'rank' must be positive");
    if (spec.conductor == 0) parse_fail("field 'conductor' must be positive");
    const std::size_t phi = euler_phi(spec.conductor);

    const ordered_json& gens = require(doc, "generators");
    if (!gens.is_array() || gens.empty()) parse_fail("field 'generators' must be a nonempty array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string where = "generators[" + std::to_string(g) + "]";
        const ordered_json& mat = gens[g];
        if (!mat.is_array() || mat.size() != spec.rank) parse_fail(where + ": expected " + std::to_string(spec.rank) + " rows");
        std::vector<CyclotomicNumber> entries;
        for (std::size_t i = 0; i < spec.rank; ++i) {
            const ordered_json& row = mat[i];
            if (!row.is_array() || row.size() != spec.rank)
                parse_fail(where + "[" + std::to_string(i) + "]: expected " + std::to_string(spec.rank) + " entries");
            for (std::size_t j = 0; j < spec.rank; ++j) {
                const std::string at = where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
                const ordered_json& coeffs = row[j];
                if (!coeffs.is_array() || coeffs.size() != phi)
                    parse_fail(at + ": expected " + std::to_string(phi) + " coefficients");
                std::vector<Rational> q;
                for (const auto& c : coeffs) {
                    if (!c.is_string()) parse_fail(at + ": coefficients must be \"a/b\" strings");
                    try {
                        q.push_back(parse_rational(c.get<std::string>()));
                    } catch (const Error& e) {
                        parse_fail(at + ": " + e.what());
                    }
                }
                entries.emplace_back(spec.conductor, std::move(q));
            }
        }
        CycMatrix m(spec.rank, std::move(entries), spec.conductor);
        if (m.determinant().is_zero()) throw Error(ErrorCode::NonInvertibleGenerator, where + " is singular");
        spec.generators.push_back(std::move(m));
    }

    if (doc.contains("primes")) {
        const ordered_json& primes = doc.at("primes");
        if (!primes.is_array()) parse_fail("field 'primes' must be an array");
        for (const auto& p : primes) {
            if (!p.is_number_unsigned()) parse_fail("field 'primes' must hold positive integers");
            spec.primes.push_back(p.get<std::uint64_t>());
        }
    }
    return spec;
}

GroupSpec parse_group_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_spec(buf.str());
}

std::string serialize_group_spec(const GroupSpec& spec) {
    ordered_json doc;
    doc["name"] = spec.name;
    doc["rank"] = spec.rank;
    doc["conductor"] = spec.conductor;
    ordered_json gens = ordered_json::array();
    for (const auto& m : spec.generators) {
        const CycMatrix mm = m.promoted(spec.conductor);
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < mm.rank(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < mm.rank(); ++j) {
                ordered_json coeffs = ordered_json::array();
                for (const auto& c : mm(i, j).coeffs()) coeffs.push_back(rational_to_string(c));
                row.push_back(std::move(coeffs));
            }
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    doc["generators"] = std::move(gens);
    doc["primes"] = spec.primes;
    return doc.dump(2) + "\n";
}

GroupSpec resolve_group(std::string_view name_or_path, std::optional<std::uint64_t> prime) {
    const std::filesystem::path path{std::string(name_or_path)};
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) return parse_group_file(path);
    return catalog_lookup(name_or_path, prime);
}

std::vector<std::pair<GroupSpec, std::uint64_t>> catalog_models() {
    std::vector<std::pair<GroupSpec, std::uint64_t>> out;
    out.emplace_back(catalog_lookup("SU2"), 5);
    out.emplace_back(sullivan_group(5), 5);
    out.emplace_back(sullivan_group(7), 7);
    out.emplace_back(cyclic_group(3), 7);
    out.emplace_back(symmetric_group(2), 5);
    out.emplace_back(symmetric_group(3), 5);
    out.emplace_back(symmetric_group(4), 5);
    out.emplace_back(g7_group(), 13);
    return out;
}

}  // namespace pflag
