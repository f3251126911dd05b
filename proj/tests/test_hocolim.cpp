#include <random>

#include "doctest.h"
#include "pflag/catalog.hpp"
#include "pflag/error.hpp"
#include "pflag/hocolim.hpp"

using namespace pflag;

namespace {

GradedRanks ranks(std::map<int, std::int64_t> m) { return GradedRanks(std::move(m)); }

long binomial(int n, int r) {
    long b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}

PCompactModel model_of(const GroupSpec& spec, std::uint64_t p) {
    return build_model(close_group(spec.rank, spec.conductor, spec.generators), p);
}

}  // namespace

TEST_CASE("integer matrix rank") {
    CHECK(rank_over_q(IntMatrix{2, 2, {1, 2, 2, 4}}) == 1);
    CHECK(rank_over_q(IntMatrix{2, 3, {1, 0, 1, 0, 1, 1}}) == 2);
    CHECK(rank_over_q(IntMatrix{0, 3, {}}) == 0);
    CHECK(multiply(IntMatrix{1, 2, {1, 1}}, IntMatrix{2, 1, {2, 3}}) == IntMatrix{1, 1, {5}});
}

TEST_CASE("E1 page of sphere diagrams") {
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned n = 1; n <= 10; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            const PosetDiagram d = sphere_diagram(n, k, false);
            const SSPage e1 = e1_page(d);
            const int kk = static_cast<int>(k);
            CHECK(e1.at(kk - 1, static_cast<int>(n)) == 1);
            CHECK(e1.at(kk - 1, 0) == 1);
            for (int p = 0; p < kk - 1; ++p) CHECK(e1.at(p, 0) == binomial(kk, kk - 1 - p));
            CHECK(hocolim_dim(d) == static_cast<int>(n + k - 1));
            CHECK(top_rank(d) == 1);
            CHECK(e1.euler_characteristic() == diagram_euler_characteristic(d));
        }
}

TEST_CASE("E2 of sphere diagrams with maps") {
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned n = 1; n <= 10; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            const PosetDiagram d = sphere_diagram(n, k, true);
            CHECK(d.is_functorial());
            const SSPage e2 = e2_page(d);
            const GradedRanks expect = ranks({{0, 1}, {static_cast<int>(n + k - 1), 1}});
            CHECK(e2.total_ranks() == expect);
            CHECK(e2.euler_characteristic() == e1_page(d).euler_characteristic());
        }
}

TEST_CASE("E2 needs every map") {
    PosetDiagram d = sphere_diagram(2, 3, false);
    CHECK_THROWS_AS(e2_page(d), Error);
    PosetDiagram two = sphere_diagram(2, 2, false);
    CHECK_THROWS_AS(e2_page(two), Error);
    CHECK_THROWS_AS(two.set_map(0, 0, 0, IntMatrix{1, 2, {1, 1}}), Error);
}

TEST_CASE("non-commuting square is rejected") {
    const GradedRanks pt = ranks({{0, 1}});
    PosetDiagram d(3, {pt, pt, pt, pt, pt, pt, pt});
    for (std::uint32_t mask = 0; mask < 7; ++mask)
        for (unsigned j = 0; j < 3; ++j)
            if (!(mask >> j & 1u) && (mask | (1u << j)) != 7) d.set_map(mask, j, 0, IntMatrix{1, 1, {1}});
    CHECK(d.is_functorial());
    d.set_map(1, 1, 0, IntMatrix{1, 1, {2}});
    CHECK_FALSE(d.is_functorial());
    CHECK_THROWS_AS(e2_page(d), Error);
}

TEST_CASE("k = 1 and wedges") {
    const PosetDiagram one(1, {ranks({{0, 1}, {4, 3}})});
    const SSPage e1 = e1_page(one);
    CHECK(e1.at(0, 0) == 1);
    CHECK(e1.at(0, 4) == 3);
    CHECK(hocolim_dim(one) == 4);
    CHECK(top_rank(one) == 3);

    const GradedRanks wedge = ranks({{0, 1}, {5, 2}});
    const GradedRanks pt = ranks({{0, 1}});
    const PosetDiagram d(2, {wedge, pt, pt});
    CHECK(top_rank(d) == 2);
    CHECK(hocolim_dim(d) == 6);
}

TEST_CASE("hypothesis violations") {
    const GradedRanks s2 = ranks({{0, 1}, {2, 1}});
    const PosetDiagram bad(2, {s2, s2, ranks({{0, 1}})});
    try {
        hocolim_dim(bad);
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisViolated);
    }
    CHECK_THROWS_AS(top_rank(bad), Error);
    CHECK_THROWS_AS(PosetDiagram(2, {s2}), Error);
    CHECK_THROWS_AS(PosetDiagram(0, {}), Error);
}

TEST_CASE("random diagrams") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned k = 1 + rng() % 4;
        const int top = 2 + static_cast<int>(rng() % 10);
        std::vector<GradedRanks> values;
        for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
            std::map<int, std::int64_t> m{{0, 1}};
            const int bound = mask == 0 ? top : static_cast<int>(rng() % static_cast<unsigned>(top));
            for (int q = 1; q < bound; ++q) m[q] = rng() % 3;
            if (mask == 0) m[top] = 1 + rng() % 3;
            values.push_back(ranks(std::move(m)));
        }
        const PosetDiagram d(k, values);
        CHECK(hocolim_dim(d) == top + static_cast<int>(k) - 1);
        CHECK(e1_page(d).total_ranks().top_degree() == top + static_cast<int>(k) - 1);
        CHECK(top_rank(d) == values[0].rank(top));
        CHECK(e1_page(d).euler_characteristic() == diagram_euler_characteristic(d));
    }
}

TEST_CASE("adjoint homology") {
    const AdjointReport sul = adjoint_homology(model_of(sullivan_group(5), 5));
    CHECK(sul.exact);
    CHECK(sul.homology.support() == std::vector<int>{3, 5, 7});
    CHECK(sul.verdict == "not a sphere");
    CHECK(sul.dim == 7);
    CHECK(sul.top_rank == 1);

    const AdjointReport su2 = adjoint_homology(model_of(catalog_lookup("SU2"), 5));
    CHECK(su2.homology.support() == std::vector<int>{3});
    CHECK(su2.verdict == "sphere");

    const PCompactModel s3 = model_of(symmetric_group(3), 5);
    const AdjointReport a3 = adjoint_homology(s3);
    CHECK(a3.dim == 8);
    CHECK(a3.top_rank == 1);
    CHECK_FALSE(a3.exact);
    CHECK(a3.verdict == "E1 bound only");
    // E1_{1,q} = H_q(G/T)
    const IntPolynomial gt = flag_poincare(s3);
    for (int q = 0; q <= 6; ++q) CHECK(a3.page.at(1, q) == gt.coeff(static_cast<std::size_t>(q)));

    for (const auto& [spec, p] : catalog_models()) {
        CAPTURE(spec.name);
        const PCompactModel m = model_of(spec, p);
        const AdjointReport a = adjoint_homology(m);
        CHECK(a.dim == static_cast<int>(m.dimension));
        CHECK(hocolim_dim(adjoint_diagram(m)) == static_cast<int>(m.dimension - m.kappa));
        CHECK(a.top_rank == 1);
        CHECK(a.homology.top_degree() == static_cast<int>(m.dimension));
        CHECK(a.page.euler_characteristic() == diagram_euler_characteristic(adjoint_diagram(m)));
    }
}
