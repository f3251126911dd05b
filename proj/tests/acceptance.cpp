// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pflag/catalog.hpp"
#include "pflag/error.hpp"
#include "pflag/hocolim.hpp"
#include "pflag/pcompact.hpp"
#include "pflag/splitting.hpp"

using namespace pflag;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

PCompactModel model_of(const GroupSpec& spec, std::uint64_t p) {
    return build_model(close_group(spec.rank, spec.conductor, spec.generators), p);
}

void g7_suite() {
    const GroupSpec spec = g7_group();
    const ReflectionGroup g = close_group(spec.rank, spec.conductor, spec.generators, 1000);
    expect(g.order() == 144, "closure order " + std::to_string(g.order()));

    // No pair of reflections generates the whole group.
    const auto& refl = g.reflections();
    for (std::size_t a = 0; a < refl.size(); ++a)
        for (std::size_t b = a + 1; b < refl.size(); ++b) {
            const ReflectionGroup h = close_group(2, 24, {g.reflection_matrix(a), g.reflection_matrix(b)}, 1000);
            expect(h.order() < 144, "reflections " + std::to_string(a) + ", " + std::to_string(b) + " generate G7");
        }
    expect(min_generating_reflections(g, 3).size() == 3, "minimal generating set is not of size 3");

    const Embedding e = embed_matrices(spec.generators, 13, 8);
    expect(e.matrices.size() == 3, "embedding at p = 13");
    bool failed_at_7 = false;
    try {
        embed_matrices(spec.generators, 7, 4);
    } catch (const Error& err) {
        failed_at_7 = err.code() == ErrorCode::NoEmbedding;
    }
    expect(failed_at_7, "embedding at p = 7 did not fail with NoEmbedding");

    const std::vector<unsigned> deg = molien_degrees(g);
    expect(deg == std::vector<unsigned>{12, 12}, "degrees");
    expect(deg[0] * deg[1] == 144, "degree product");
}

void sullivan_suite() {
    const PCompactModel m = model_of(sullivan_group(5), 5);
    expect(m.dimension == 7 && m.dimension == 2 * 5 - 3, "d = " + std::to_string(m.dimension));
    expect(flag_poincare(m).coeffs() == std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1}, "flag Poincare polynomial");
    const AdjointReport a = adjoint_homology(m);
    expect(a.exact, "adjoint homology not exact for r' = 1");
    expect(a.homology.support() == std::vector<int>{3, 5, 7}, "adjoint degrees");
    for (int d : {3, 5, 7}) expect(a.homology.rank(d) == 1, "adjoint rank in degree " + std::to_string(d));
    expect(a.verdict == "not a sphere", "verdict " + a.verdict);
}

void splitting_suite() {
    for (std::uint64_t p : {5u, 7u, 13u}) {
        const std::size_t n = 3 * (p - 1);
        for (unsigned l = 2; l <= p - 1; ++l) {
            if ((p - 1) % l != 0) continue;
            const SplittingReport rep = splitting_checks(p, l, n, 8);
            for (const auto& c : rep.checks)
                expect(c.passed, "p = " + std::to_string(p) + ", l = " + std::to_string(l) + ": " + c.name);
            for (auto s : rep.bg_residues) expect(s % l == 0, "f_BG residue");
            for (auto s : rep.umkehr_residues) expect((s + 1) % l == 0, "f residue");
        }
    }
    std::size_t pairs = 0;
    for (std::uint64_t p = 3; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned l = 3; l <= p - 1; ++l) {
            if ((p - 1) % l != 0) continue;
            expect(verify_framing_obstruction(p, l), "framing obstruction at p = " + std::to_string(p) + ", l = " + std::to_string(l));
            ++pairs;
        }
    }
    expect(pairs > 0, "no (p, l) pairs");
}

void hocolim_suite() {
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned n = 1; n <= 10; ++n) {
            const std::string at = "n = " + std::to_string(n) + ", r = " + std::to_string(k);
            const PosetDiagram d = sphere_diagram(n, k, true);
            expect(hocolim_dim(d) == static_cast<int>(n + k - 1), "sphere dimension " + at);
            const GradedRanks sphere(std::map<int, std::int64_t>{{0, 1}, {static_cast<int>(n + k - 1), 1}});
            expect(e2_page(d).total_ranks() == sphere, "E2 of sphere diagram " + at);
            expect(top_rank(d) == 1, "sphere top rank " + at);
        }

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned k = 1 + rng() % 5;
        const int top = 1 + static_cast<int>(rng() % 12);
        std::vector<GradedRanks> values;
        for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
            std::map<int, std::int64_t> m{{0, 1}};
            const int below = mask == 0 ? top : static_cast<int>(rng() % static_cast<unsigned>(top));
            for (int q = 1; q < below; ++q) m[q] = rng() % 4;
            if (mask == 0) m[top] = 1 + rng() % 3;
            values.push_back(GradedRanks(std::move(m)));
        }
        const PosetDiagram d(k, std::move(values));
        expect(hocolim_dim(d) == d.value(0).top_degree() + static_cast<int>(k) - 1, "random diagram " + std::to_string(trial));
        expect(e1_page(d).euler_characteristic() == diagram_euler_characteristic(d), "random Euler characteristic");
    }

    for (const auto& [spec, p] : catalog_models()) {
        const PCompactModel m = model_of(spec, p);
        const AdjointReport a = adjoint_homology(m);
        const int d = static_cast<int>(m.dimension);
        const int kappa = static_cast<int>(m.kappa);
        expect(hocolim_dim(adjoint_diagram(m)) == d - kappa, spec.name + ": hocolim dimension");
        expect(a.dim == d, spec.name + ": dim A_G");
        expect(a.top_rank == 1, spec.name + ": top rank");
    }
}

void lie_suite() {
    for (unsigned n : {2u, 3u, 4u}) {
        const PCompactModel m = model_of(symmetric_group(n), 5);
        expect(m.dimension == n * n - 1, "S" + std::to_string(n) + ": d = " + std::to_string(m.dimension));
    }
    for (const auto& [spec, p] : catalog_models()) {
        const PCompactModel m = model_of(spec, p);
        expect(flag_poincare(m).value_at_one() == static_cast<std::int64_t>(m.weyl.order()), spec.name + ": flag Euler characteristic");
        for (std::size_t r = 0; r < m.weyl.reflections().size(); ++r) {
            if (!m.weyl.reflections()[r].primitive) continue;
            const CentralizerReport c = centralizer_structure(m, r);
            std::vector<unsigned> expect_deg(m.rank - 1, 1);
            expect_deg.push_back(c.order);
            expect(c.degrees == expect_deg, spec.name + ": centralizer degrees of reflection " + std::to_string(r));
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {"1 G7 suite", 10.0, g7_suite},
        {"2 Sullivan suite (p = 5)", 1.0, sullivan_suite},
        {"3 splitting suite", 30.0, splitting_suite},
        {"4 hocolim suite", 10.0, hocolim_suite},
        {"5 Lie cross-checks", 10.0, lie_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs >= c.limit_s) {
            ok = false;
            detail = "over the " + std::to_string(c.limit_s) + " s limit";
        }
        std::printf("[%s] criterion %s  %.3f s%s%s\n", ok ? "PASS" : "FAIL", c.name, secs, detail.empty() ? "" : "  ",
                    detail.c_str());
        failures += !ok;
    }
    return failures == 0 ? 0 : 1;
}
