#include "pflag/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pflag/error.hpp"

namespace pflag {

namespace {

struct CoeffKeyHash {
    std::size_t operator()(const CycVector& v) const noexcept {
        std::size_t h = v.size();
        for (const auto& x : v) h = h * 0x100000001B3ULL ^ x.hash();
        return h;
    }
};

using Bits = std::vector<bool>;

}  // namespace

std::optional<std::size_t> ReflectionGroup::index_of(const CycMatrix& m) const {
    const auto it = index_.find(m.promoted(conductor_));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ReflectionGroup::product_index(std::size_t a, std::size_t b) const {
    const auto idx = index_of(elements_.at(a) * elements_.at(b));
    if (!idx) throw Error(ErrorCode::InvalidArgument, "group is not closed under products");
    return *idx;
}

std::vector<std::size_t> ReflectionGroup::powers(std::size_t i) const {
    std::vector<std::size_t> out{0};
    CycMatrix w = elements_.at(i);
    while (!w.is_identity()) {
        out.push_back(*index_of(w));
        w = w * elements_[i];
    }
    return out;
}

ReflectionGroup close_group(std::size_t rank, unsigned conductor, const std::vector<CycMatrix>& generators,
                            std::size_t cap) {
    ReflectionGroup g;
    g.rank_ = rank;
    g.conductor_ = conductor;
    for (const auto& m : generators) {
        if (m.rank() != rank) throw Error(ErrorCode::InvalidArgument, "generators have different ranks");
        g.conductor_ = static_cast<unsigned>(lcm_u64(g.conductor_, m.conductor()));
    }
    for (const auto& m : generators) {
        if (m.determinant().is_zero()) throw Error(ErrorCode::NonInvertibleGenerator, m.to_string());
        g.generators_.push_back(m.promoted(g.conductor_));
    }

    g.elements_.push_back(CycMatrix::identity(rank, g.conductor_));
    g.index_.emplace(g.elements_.front(), 0);
    for (std::size_t next = 0; next < g.elements_.size(); ++next) {
        for (const auto& gen : g.generators_) {
            CycMatrix prod = g.elements_[next] * gen;
            if (g.index_.count(prod)) continue;
            if (g.elements_.size() >= cap)
                throw Error(ErrorCode::CapExceeded, "group order exceeds cap " + std::to_string(cap));
            g.index_.emplace(prod, g.elements_.size());
            g.elements_.push_back(std::move(prod));
        }
    }

    g.orders_.resize(g.elements_.size());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        unsigned k = 1;
        CycMatrix w = g.elements_[i];
        while (!w.is_identity()) {
            w = w * g.elements_[i];
            ++k;
        }
        g.orders_[i] = k;
    }

    for (std::size_t i = 1; i < g.elements_.size(); ++i) {
        const CycMatrix& w = g.elements_[i];
        std::vector<CycVector> fixed = kernel_basis(rows_of(w.minus_identity()), rank, g.conductor_);
        if (fixed.size() + 1 != rank) continue;
        g.reflections_.push_back(Reflection{i, g.orders_[i], std::move(fixed), w.determinant(), true});
    }

    // s is imprimitive iff s = (s')^k for a reflection s' of strictly larger order.
    for (auto& s : g.reflections_) {
        for (const auto& other : g.reflections_) {
            if (other.order <= s.order) continue;
            const auto pw = g.powers(other.element);
            if (std::find(pw.begin(), pw.end(), s.element) != pw.end()) {
                s.primitive = false;
                break;
            }
        }
    }
    return g;
}

ReflectionGroup close_group(const std::vector<CycMatrix>& generators, std::size_t cap) {
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators given");
    return close_group(generators.front().rank(), generators.front().conductor(), generators, cap);
}

unsigned minimal_primitive_order(const ReflectionGroup& group) {
    unsigned best = 0;
    for (const auto& s : group.reflections())
        if (s.primitive && (best == 0 || s.order < best)) best = s.order;
    if (best == 0) throw Error(ErrorCode::NoReflections, "group contains no reflections");
    return best;
}

std::vector<Integer> molien_series(const ReflectionGroup& group, std::size_t terms) {
    const unsigned n = group.conductor();
    // Elements with the same det(1 - tw) contribute identical series.
    std::unordered_map<CycVector, std::size_t, CoeffKeyHash> classes;
    for (const auto& w : group.elements()) ++classes[w.reversed_charpoly()];

    CycVector total(terms, CyclotomicNumber::zero(n));
    for (const auto& [den, count] : classes) {
        // 1 / (1 + a_1 t + ... + a_r t^r) by the linear recurrence.
        CycVector b(terms, CyclotomicNumber::zero(n));
        for (std::size_t j = 0; j < terms; ++j) {
            CyclotomicNumber acc = j == 0 ? CyclotomicNumber::one(n) : CyclotomicNumber::zero(n);
            for (std::size_t i = 1; i < den.size() && i <= j; ++i) acc -= den[i] * b[j - i];
            b[j] = acc;
        }
        const auto c = CyclotomicNumber::rational(static_cast<long>(count));
        for (std::size_t j = 0; j < terms; ++j) total[j] += c * b[j];
    }

    std::vector<Integer> series;
    series.reserve(terms);
    const Rational order(static_cast<long>(group.order()));
    for (std::size_t j = 0; j < terms; ++j) {
        if (!total[j].is_rational())
            throw Error(ErrorCode::DegreeExtractionFailed, "Molien coefficient " + std::to_string(j) + " is irrational");
        const Rational q = total[j].rational_part() / order;
        if (q.get_den() != 1)
            throw Error(ErrorCode::DegreeExtractionFailed, "Molien coefficient " + std::to_string(j) + " is not an integer");
        series.push_back(q.get_num());
    }
    return series;
}

std::vector<unsigned> molien_degrees(const ReflectionGroup& group) {
    const std::size_t terms = group.order() + 1;
    std::vector<Integer> s = molien_series(group, terms);
    std::vector<unsigned> degrees;
    for (;;) {
        std::size_t j = 1;
        while (j < terms && s[j] == 0) ++j;
        if (j == terms) break;
        if (s[j] < 0 || degrees.size() == group.rank())
            throw Error(ErrorCode::DegreeExtractionFailed, "Molien series is not a product of 1/(1 - t^d)");
        degrees.push_back(static_cast<unsigned>(j));
        // s <- s * (1 - t^j)
        for (std::size_t i = terms; i-- > j;) s[i] -= s[i - j];
    }
    Integer product = 1;
    for (unsigned d : degrees) product *= d;
    if (degrees.size() != group.rank() || product != static_cast<unsigned long>(group.order()))
        throw Error(ErrorCode::DegreeExtractionFailed, "degrees do not multiply to the group order");
    return degrees;
}

GeneratingReflections min_generating_reflections(const ReflectionGroup& group, std::size_t bound) {
    const std::size_t order = group.order();
    if (order == 1) return {};
    const auto& refl = group.reflections();

    // Right-multiplication columns, computed on demand.
    std::map<std::size_t, std::vector<std::size_t>> columns;
    auto column = [&](std::size_t r) -> const std::vector<std::size_t>& {
        auto it = columns.find(r);
        if (it != columns.end()) return it->second;
        std::vector<std::size_t> col(order);
        for (std::size_t e = 0; e < order; ++e) col[e] = group.product_index(e, refl[r].element);
        return columns.emplace(r, std::move(col)).first->second;
    };
    auto closure = [&](const std::vector<std::size_t>& gens) {
        Bits seen(order, false);
        std::vector<std::size_t> queue{0};
        seen[0] = true;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (std::size_t r : gens) {
                const std::size_t next = column(r)[queue[q]];
                if (!seen[next]) {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        return seen;
    };
    auto full = [&](const Bits& b) { return std::count(b.begin(), b.end(), true) == static_cast<long>(order); };

    std::vector<std::size_t> all(refl.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (all.empty() || !full(closure(all)))
        throw Error(ErrorCode::NotReflectionGenerated, "reflections generate a proper subgroup");

    // Level k holds the distinct subgroups generated by k reflections.
    std::vector<std::pair<Bits, std::vector<std::size_t>>> level{{closure({}), {}}};
    std::set<Bits> visited{level.front().first};
    for (std::size_t k = 1; k <= bound; ++k) {
        std::vector<std::pair<Bits, std::vector<std::size_t>>> next_level;
        for (const auto& [bits, gens] : level) {
            for (std::size_t r = 0; r < refl.size(); ++r) {
                if (bits[refl[r].element]) continue;
                std::vector<std::size_t> ext = gens;
                ext.push_back(r);
                Bits b = closure(ext);
                if (full(b)) return {ext};
                if (visited.insert(b).second) next_level.emplace_back(std::move(b), std::move(ext));
            }
        }
        level = std::move(next_level);
    }
    throw Error(ErrorCode::BoundExceeded, "no generating set of at most " + std::to_string(bound) + " reflections");
}

Parabolic parabolic(const ReflectionGroup& group, const std::vector<std::size_t>& reflection_indices) {
    std::vector<CycMatrix> gens;
    std::vector<CycVector> stacked;
    for (std::size_t r : reflection_indices) {
        gens.push_back(group.reflection_matrix(r));
        for (auto& row : rows_of(gens.back().minus_identity())) stacked.push_back(std::move(row));
    }
    ReflectionGroup sub = close_group(group.rank(), group.conductor(), gens, group.order());
    std::vector<CycVector> basis;
    if (stacked.empty()) {
        const CycMatrix id = CycMatrix::identity(group.rank(), group.conductor());
        basis = rows_of(id);
    } else {
        basis = kernel_basis(std::move(stacked), group.rank(), group.conductor());
    }
    return {std::move(sub), std::move(basis)};
}

std::vector<std::size_t> pointwise_stabilizer(const ReflectionGroup& group, const std::vector<CycVector>& basis) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < group.order(); ++i) {
        const CycMatrix& w = group.element(i);
        bool fixes = true;
        for (const auto& v : basis)
            if (!(w.apply(v) == v)) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(i);
    }
    return out;
}

}  // namespace pflag
