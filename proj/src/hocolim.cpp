#include "pflag/hocolim.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "pflag/cyclotomic.hpp"
#include "pflag/error.hpp"

namespace pflag {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

std::vector<int> degrees_of(const PosetDiagram& d) {
    std::set<int> qs;
    for (const auto& v : d.values())
        for (int q : v.support()) qs.insert(q);
    return {qs.begin(), qs.end()};
}

std::vector<std::uint32_t> masks_of_size(unsigned k, int size) {
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (1u << k) - 1;
    for (std::uint32_t m = 0; m < full; ++m)
        if (popcount(m) == size) out.push_back(m);
    return out;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not compose");
    IntMatrix out{a.rows, b.cols, std::vector<std::int64_t>(a.rows * b.cols, 0)};
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t t = 0; t < a.cols; ++t) {
            const std::int64_t x = a(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out.entries[i * b.cols + j] += x * b(t, j);
        }
    return out;
}

std::size_t rank_over_q(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = m(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && a[piv][col] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (a[i][col] == 0) continue;
            const Rational factor = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

PosetDiagram::PosetDiagram(unsigned k, std::vector<GradedRanks> values) : k_(k), values_(std::move(values)) {
    if (k == 0 || k > 20) throw Error(ErrorCode::InvalidArgument, "diagram needs 1 <= k <= 20");
    if (values_.size() != full_mask())
        throw Error(ErrorCode::InvalidArgument, "diagram needs a value for each of the 2^k - 1 proper subsets");
}

void PosetDiagram::set_map(std::uint32_t mask, unsigned j, int q, IntMatrix m) {
    const std::uint32_t target = mask | (1u << j);
    if (j >= k_ || mask >= full_mask() || (mask >> j & 1u) || target >= full_mask())
        throw Error(ErrorCode::InvalidArgument, "map must go along a covering inclusion of proper subsets");
    const auto rows = static_cast<std::size_t>(values_[target].rank(q));
    const auto cols = static_cast<std::size_t>(values_[mask].rank(q));
    if (m.rows != rows || m.cols != cols || m.entries.size() != rows * cols)
        throw Error(ErrorCode::InvalidArgument, "map shape does not match the ranks in degree " + std::to_string(q));
    maps_[{mask, j, q}] = std::move(m);
}

std::optional<IntMatrix> PosetDiagram::map(std::uint32_t mask, unsigned j, int q) const {
    const std::uint32_t target = mask | (1u << j);
    const auto rows = static_cast<std::size_t>(values_.at(target).rank(q));
    const auto cols = static_cast<std::size_t>(values_.at(mask).rank(q));
    if (rows == 0 || cols == 0) return IntMatrix{rows, cols, {}};
    const auto it = maps_.find({mask, j, q});
    if (it == maps_.end()) return std::nullopt;
    return it->second;
}

bool PosetDiagram::is_functorial() const {
    const std::vector<int> qs = degrees_of(*this);
    for (std::uint32_t mask = 0; mask < full_mask(); ++mask)
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = i + 1; j < k_; ++j) {
                const std::uint32_t top = mask | (1u << i) | (1u << j);
                if ((mask >> i & 1u) || (mask >> j & 1u) || top >= full_mask()) continue;
                for (int q : qs) {
                    const auto a1 = map(mask, i, q), a2 = map(mask | (1u << i), j, q);
                    const auto b1 = map(mask, j, q), b2 = map(mask | (1u << j), i, q);
                    if (!a1 || !a2 || !b1 || !b2) return false;
                    if (!(multiply(*a2, *a1) == multiply(*b2, *b1))) return false;
                }
            }
    return true;
}

std::int64_t SSPage::at(int p, int q) const {
    const auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

std::int64_t SSPage::euler_characteristic() const {
    std::int64_t chi = 0;
    for (const auto& [pq, r] : entries) chi += ((pq.first + pq.second) % 2 == 0) ? r : -r;
    return chi;
}

GradedRanks SSPage::total_ranks() const {
    std::map<int, std::int64_t> m;
    for (const auto& [pq, r] : entries) m[pq.first + pq.second] += r;
    return GradedRanks(std::move(m));
}

int SSPage::max_q() const {
    int q = -1;
    for (const auto& [pq, r] : entries) q = std::max(q, pq.second);
    return q;
}

SSPage e1_page(const PosetDiagram& diagram) {
    const unsigned k = diagram.k();
    SSPage page;
    page.k = k;
    for (std::uint32_t mask = 0; mask < diagram.full_mask(); ++mask) {
        const int p = static_cast<int>(k) - 1 - popcount(mask);
        for (const auto& [q, r] : diagram.value(mask).ranks()) page.entries[{p, q}] += r;
    }
    return page;
}

SSPage e2_page(const PosetDiagram& diagram) {
    if (!diagram.is_functorial())
        throw Error(ErrorCode::InvalidArgument, "E2 needs functorial maps on every covering inclusion");
    const unsigned k = diagram.k();
    const int kk = static_cast<int>(k);

    SSPage page;
    page.k = k;
    for (int q : degrees_of(diagram)) {
        // Basis of C_p: blocks H_q F(I) for |I| = k - 1 - p in increasing mask order.
        std::vector<std::vector<std::uint32_t>> masks(k);
        std::vector<std::map<std::uint32_t, std::size_t>> offset(k);
        std::vector<std::size_t> dim(k, 0);
        for (int p = 0; p < kk; ++p) {
            masks[p] = masks_of_size(k, kk - 1 - p);
            for (std::uint32_t m : masks[p]) {
                offset[p][m] = dim[p];
                dim[p] += static_cast<std::size_t>(diagram.value(m).rank(q));
            }
        }
        // rank of d_p : C_p -> C_{p-1}
        std::vector<std::size_t> rank_d(k + 1, 0);
        for (int p = 1; p < kk; ++p) {
            IntMatrix d{dim[p - 1], dim[p], std::vector<std::int64_t>(dim[p - 1] * dim[p], 0)};
            for (std::uint32_t m : masks[p])
                for (unsigned j = 0; j < k; ++j) {
                    if (m >> j & 1u) continue;
                    const std::uint32_t t = m | (1u << j);
                    const auto found = diagram.map(m, j, q);
                    if (!found)
                        throw Error(ErrorCode::InvalidArgument, "missing map from mask " + std::to_string(m) +
                                                                    " along " + std::to_string(j) + " in degree " +
                                                                    std::to_string(q));
                    const IntMatrix& block = *found;
                    const int sign = (popcount(m & ((1u << j) - 1)) % 2 == 0) ? 1 : -1;
                    for (std::size_t a = 0; a < block.rows; ++a)
                        for (std::size_t b = 0; b < block.cols; ++b)
                            d.entries[(offset[p - 1][t] + a) * d.cols + offset[p][m] + b] += sign * block(a, b);
                }
            rank_d[p] = rank_over_q(d);
        }
        for (int p = 0; p < kk; ++p) {
            const auto e2 = static_cast<std::int64_t>(dim[p] - rank_d[p] - rank_d[p + 1]);
            if (e2 != 0) page.entries[{p, q}] = e2;
        }
    }
    return page;
}

int hocolim_dim(const PosetDiagram& diagram) {
    const int top = diagram.value(0).top_degree();
    if (top < 0) throw Error(ErrorCode::HypothesisViolated, "F(empty) is zero");
    for (std::uint32_t mask = 1; mask < diagram.full_mask(); ++mask)
        if (diagram.value(mask).top_degree() >= top)
            throw Error(ErrorCode::HypothesisViolated,
                        "dim F(I) = " + std::to_string(diagram.value(mask).top_degree()) + " for I = mask " +
                            std::to_string(mask) + " is not below dim F(empty) = " + std::to_string(top));
    const int k = static_cast<int>(diagram.k());
    const SSPage page = e1_page(diagram);
    for (const auto& [pq, r] : page.entries)
        if (pq.second >= top && pq != std::pair{k - 1, top})
            throw Error(ErrorCode::HypothesisViolated, "corner entry is not isolated");
    return top + k - 1;
}

std::int64_t top_rank(const PosetDiagram& diagram) {
    hocolim_dim(diagram);
    const GradedRanks& f0 = diagram.value(0);
    return f0.rank(f0.top_degree());
}

std::int64_t diagram_euler_characteristic(const PosetDiagram& diagram) {
    std::int64_t chi = 0;
    const int k = static_cast<int>(diagram.k());
    for (std::uint32_t mask = 0; mask < diagram.full_mask(); ++mask) {
        const std::int64_t c = diagram.value(mask).euler_characteristic();
        chi += ((k - 1 - popcount(mask)) % 2 == 0) ? c : -c;
    }
    return chi;
}

PosetDiagram sphere_diagram(unsigned n, unsigned k, bool with_maps) {
    std::vector<GradedRanks> values;
    const GradedRanks point(std::map<int, std::int64_t>{{0, 1}});
    for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask)
        values.push_back(mask == 0 ? GradedRanks(std::map<int, std::int64_t>{{0, n == 0 ? 2 : 1}, {static_cast<int>(n), n == 0 ? 2 : 1}})
                                   : point);
    PosetDiagram d(k, std::move(values));
    if (with_maps)
        for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask)
            for (unsigned j = 0; j < k; ++j) {
                if ((mask >> j & 1u) || (mask | (1u << j)) + 1 == (1u << k)) continue;
                const auto cols = static_cast<std::size_t>(d.value(mask).rank(0));
                d.set_map(mask, j, 0, IntMatrix{1, cols, std::vector<std::int64_t>(cols, 1)});
            }
    return d;
}

PosetDiagram adjoint_diagram(const PCompactModel& model) {
    const auto k = static_cast<unsigned>(model.r_prime);
    std::vector<GradedRanks> values;
    for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
        std::vector<std::size_t> subset;
        for (unsigned j = 0; j < k; ++j)
            if (mask >> j & 1u) subset.push_back(j);
        values.push_back(GradedRanks::from_polynomial(flag_poincare(model, subset)));
    }
    return PosetDiagram(k, std::move(values));
}

AdjointReport adjoint_homology(const PCompactModel& model) {
    const PosetDiagram diagram = adjoint_diagram(model);
    AdjointReport rep;
    rep.k = diagram.k();
    rep.kappa = model.kappa;
    rep.page = e1_page(diagram);
    const int kappa = static_cast<int>(model.kappa);
    rep.dim = hocolim_dim(diagram) + kappa;
    if (rep.dim != static_cast<int>(model.dimension))
        throw Error(ErrorCode::HypothesisViolated,
                    "dim A_G = " + std::to_string(rep.dim) + " differs from d = " + std::to_string(model.dimension));
    rep.top_rank = top_rank(diagram);
    if (rep.top_rank != 1) throw Error(ErrorCode::HypothesisViolated, "top homology of A_G is not of rank 1");
    rep.euler = (kappa % 2 == 0 ? 1 : -1) * rep.page.euler_characteristic();

    // The poset has an initial object and every G/C_I is connected, so H_0 = Z_p;
    // report reduced homology of the kappa-fold suspension.
    GradedRanks unreduced = rep.page.total_ranks();
    std::map<int, std::int64_t> reduced = unreduced.ranks();
    reduced[0] -= 1;
    rep.homology = GradedRanks(std::move(reduced)).shifted(kappa);
    rep.exact = diagram.k() == 1;
    if (rep.exact)
        rep.verdict = rep.homology.support().size() == 1 ? "sphere" : "not a sphere";
    else
        rep.verdict = "E1 bound only";
    return rep;
}

}  // namespace pflag
