#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "pflag/catalog.hpp"
#include "pflag/error.hpp"
#include "pflag/pcompact.hpp"

using namespace pflag;

namespace {

PCompactModel model_of(const GroupSpec& spec, std::uint64_t p) {
    return build_model(close_group(spec.rank, spec.conductor, spec.generators), p);
}

// Coefficient of t^{2k} in H*(SU(n)/T) = number of permutations of n letters with k inversions.
std::vector<std::int64_t> inversion_counts(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::int64_t> counts(n * (n - 1) / 2 + 1, 0);
    do {
        unsigned inv = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        ++counts[inv];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

std::vector<std::int64_t> spread_even(const std::vector<std::int64_t>& c) {
    std::vector<std::int64_t> out(2 * c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[2 * i] = c[i];
    return out;
}

}  // namespace

TEST_CASE("int polynomials") {
    const IntPolynomial a({1, 0, 1});
    const IntPolynomial b({1, 1});
    CHECK((a * b).coeffs() == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(exact_divide(a * b, b) == a);
    CHECK(exact_divide(IntPolynomial::one_minus_t_pow(6), IntPolynomial::one_minus_t_pow(2)).coeffs() ==
          std::vector<std::int64_t>{1, 0, 1, 0, 1});
    CHECK_THROWS_AS(exact_divide(a, b), Error);
    CHECK(a.to_string() == "1 + t^2");
    CHECK(IntPolynomial({0, -1, 2}).to_string() == "-t + 2t^2");
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(IntPolynomial({1, 2, 1}).is_palindromic());
    CHECK_FALSE(IntPolynomial({1, 2}).is_palindromic());
}

TEST_CASE("graded ranks") {
    const GradedRanks g(std::map<int, std::int64_t>{{0, 1}, {2, 0}, {3, 2}});
    CHECK(g.support() == std::vector<int>{0, 3});
    CHECK(g.top_degree() == 3);
    CHECK(g.euler_characteristic() == -1);
    CHECK(g.total_rank() == 3);
    CHECK(g.shifted(2).support() == std::vector<int>{2, 5});
    CHECK((g + g).rank(3) == 4);
    CHECK(GradedRanks().top_degree() == -1);
    CHECK_THROWS_AS(GradedRanks(std::map<int, std::int64_t>{{1, -1}}), Error);
    const PeriodicRanks z3{6, {1, 0, 0, 0, 0, 0}};
    CHECK(z3.truncated(13).support() == std::vector<int>{0, 6, 12});
}

TEST_CASE("SU(2) model") {
    const PCompactModel m = model_of(catalog_lookup("SU2"), 5);
    CHECK(m.rank == 1);
    CHECK(m.degrees == std::vector<unsigned>{2});
    CHECK(m.dimension == 3);
    CHECK(m.r_prime == 1);
    CHECK(m.kappa == 1);
    CHECK(m.l == 2);
    CHECK(flag_poincare(m).coeffs() == std::vector<std::int64_t>{1, 0, 1});
    CHECK(flag_poincare(m, {0}).coeffs() == std::vector<std::int64_t>{1});

    const CentralizerReport c = centralizer_structure(m, 0);
    CHECK(c.dimension == 3);
    CHECK(c.degrees == std::vector<unsigned>{2});
    CHECK(c.single_nontrivial_degree);
    CHECK(c.stabilizer_is_cyclic);
}

TEST_CASE("Sullivan sphere models") {
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        CAPTURE(p);
        const PCompactModel m = model_of(sullivan_group(p), p);
        CHECK(m.dimension == 2 * p - 3);
        CHECK(m.l == p - 1);
        CHECK(m.kappa == 1);
        std::vector<std::int64_t> expect(2 * (p - 2) + 1, 0);
        for (std::size_t i = 0; i < expect.size(); i += 2) expect[i] = 1;
        CHECK(flag_poincare(m).coeffs() == expect);
    }
    const PCompactModel m5 = model_of(sullivan_group(5), 5);
    CHECK(flag_poincare(m5).to_string() == "1 + t^2 + t^4 + t^6");

    // Only the order 4 generators are primitive; -1 = i^2 is not.
    bool saw_non_primitive = false;
    for (std::size_t r = 0; r < m5.weyl.reflections().size(); ++r) {
        if (!m5.weyl.reflections()[r].primitive) {
            CHECK_THROWS_AS(centralizer_structure(m5, r), Error);
            try {
                centralizer_structure(m5, r);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::NotPrimitive);
            }
            saw_non_primitive = true;
            continue;
        }
        const CentralizerReport c = centralizer_structure(m5, r);
        CHECK(c.order == 4);
        CHECK(c.degrees == std::vector<unsigned>{4});
        CHECK(c.dimension == 7);
    }
    CHECK(saw_non_primitive);
}

TEST_CASE("S_n models are SU(n)") {
    for (unsigned n : {2u, 3u, 4u}) {
        CAPTURE(n);
        const PCompactModel m = model_of(symmetric_group(n), 5);
        CHECK(m.dimension == n * n - 1);
        CHECK(m.r_prime == n - 1);
        const IntPolynomial pg = flag_poincare(m);
        CHECK(pg.coeffs() == spread_even(inversion_counts(n)));
        CHECK(pg.is_palindromic());
        CHECK(pg.degree() == static_cast<long>(m.dimension - m.rank));
        CHECK(pg.value_at_one() == static_cast<std::int64_t>(m.weyl.order()));
        // d - r = 2 * (number of reflections) for real groups
        CHECK(m.dimension - m.rank == 2 * m.weyl.reflections().size());
    }
    const PCompactModel s3 = model_of(symmetric_group(3), 5);
    CHECK(flag_poincare(s3).to_string() == "1 + 2t^2 + 2t^4 + t^6");
    // G/C_{s} for a transposition: U(3)/(U(2) x U(1)) = CP^2
    CHECK(flag_poincare(s3, {0}).to_string() == "1 + t^2 + t^4");
    for (std::size_t r = 0; r < s3.weyl.reflections().size(); ++r) {
        const CentralizerReport c = centralizer_structure(s3, r);
        CHECK(c.degrees == std::vector<unsigned>{1, 2});
        CHECK(c.dimension == 4);
        CHECK(c.stabilizer_is_cyclic);
    }
    CHECK_THROWS_AS(flag_poincare(s3, {5}), Error);
}

TEST_CASE("G7 model") {
    const PCompactModel m = model_of(g7_group(), 13);
    CHECK(m.rank == 2);
    CHECK(m.degrees == std::vector<unsigned>{12, 12});
    CHECK(m.dimension == 46);
    CHECK(m.r_prime == 3);
    CHECK(m.kappa == 0);
    CHECK(m.l == 2);
    const IntPolynomial pg = flag_poincare(m);
    CHECK(pg.value_at_one() == 144);
    CHECK(pg.is_palindromic());
    CHECK(pg.degree() == 44);
    for (std::size_t i = 0; i < m.r_prime; ++i) {
        const IntPolynomial pi = flag_poincare(m, {i});
        const auto& refl = m.weyl.reflections()[m.generating.reflections[i]];
        CHECK(pi.value_at_one() * refl.order == 144);
    }
    CHECK_THROWS_AS(build_model(close_group(g7_group().generators), 7), Error);
}

TEST_CASE("model invariants over the catalog") {
    for (const auto& [spec, p] : catalog_models()) {
        CAPTURE(spec.name);
        const PCompactModel m = model_of(spec, p);
        unsigned d = 0;
        for (unsigned x : m.degrees) d += 2 * x - 1;
        CHECK(m.dimension == d);
        CHECK(m.kappa + m.r_prime == m.rank + 1);
        if (m.l > 2) CHECK((p - 1) % m.l == 0);
        CHECK((m.dimension - m.rank) % 2 == 0);
        const IntPolynomial pg = flag_poincare(m);
        CHECK(pg.is_palindromic());
        CHECK(pg.degree() == static_cast<long>(m.dimension - m.rank));
        CHECK(pg.coeffs().back() == 1);
        CHECK(pg.value_at_one() == static_cast<std::int64_t>(m.weyl.order()));
        for (std::size_t r = 0; r < m.weyl.reflections().size(); ++r) {
            if (!m.weyl.reflections()[r].primitive) continue;
            const CentralizerReport c = centralizer_structure(m, r);
            std::vector<unsigned> expect(m.rank - 1, 1);
            expect.push_back(c.order);
            CHECK(c.degrees == expect);
            CHECK(c.single_nontrivial_degree);
            CHECK(c.stabilizer_is_cyclic);
        }
    }
}

TEST_CASE("model errors") {
    CHECK_THROWS_AS(build_model(close_group(catalog_lookup("SU2").generators), 4), Error);
    try {
        build_model(close_group(g7_group().generators), 7);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoEmbedding);
    }
    // diag(-1, -1) is not a reflection
    const CycMatrix minus(2, {CyclotomicNumber::rational(-1), CyclotomicNumber(), CyclotomicNumber(),
                              CyclotomicNumber::rational(-1)});
    try {
        build_model(close_group({minus}), 5);
        FAIL("expected NoReflections");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoReflections);
    }
}
