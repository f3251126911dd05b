#include "pflag/pcompact.hpp"

#include <algorithm>
#include <numeric>

#include "pflag/error.hpp"

namespace pflag {

PCompactModel build_model(const ReflectionGroup& weyl, std::uint64_t p, unsigned precision) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    if (weyl.reflections().empty()) throw Error(ErrorCode::NoReflections, "group contains no reflections");

    PCompactModel m{p, weyl.rank(), weyl, embed_matrices(weyl.generators(), p, precision), {}, 0, 0, 0, 0, {}};
    m.degrees = molien_degrees(weyl);
    for (unsigned d : m.degrees) m.dimension += 2 * d - 1;
    m.generating = min_generating_reflections(weyl, m.rank + 1);
    m.r_prime = m.generating.size();
    m.kappa = m.rank + 1 - m.r_prime;
    m.l = minimal_primitive_order(weyl);

    // s acts on the p-adic lattice by an l-th root of unity, which must lie in Z_p.
    if (m.l > 2 && (p - 1) % m.l != 0)
        throw Error(ErrorCode::HypothesisViolated,
                    "minimal reflection order " + std::to_string(m.l) + " does not divide p - 1");
    return m;
}

IntPolynomial flag_poincare(const PCompactModel& model, const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> refl;
    for (std::size_t pos : subset) {
        if (pos >= model.generating.size())
            throw Error(ErrorCode::InvalidArgument, "subset position " + std::to_string(pos) + " out of range");
        refl.push_back(model.generating.reflections[pos]);
    }
    std::sort(refl.begin(), refl.end());
    refl.erase(std::unique(refl.begin(), refl.end()), refl.end());

    const Parabolic par = parabolic(model.weyl, refl);
    const std::vector<unsigned> sub_degrees = molien_degrees(par.group);

    IntPolynomial num({1}), den({1});
    for (unsigned d : model.degrees) num = num * IntPolynomial::one_minus_t_pow(2 * d);
    for (unsigned d : sub_degrees) den = den * IntPolynomial::one_minus_t_pow(2 * d);
    return exact_divide(num, den);
}

CentralizerReport centralizer_structure(const PCompactModel& model, std::size_t reflection) {
    const auto& refls = model.weyl.reflections();
    if (reflection >= refls.size())
        throw Error(ErrorCode::InvalidArgument, "reflection index " + std::to_string(reflection) + " out of range");
    const Reflection& s = refls[reflection];
    if (!s.primitive)
        throw Error(ErrorCode::NotPrimitive, "reflection " + std::to_string(reflection) + " is a power of a reflection of larger order");

    CentralizerReport rep;
    rep.reflection = reflection;
    rep.order = s.order;
    const ReflectionGroup cyclic = close_group(model.rank, model.weyl.conductor(), {model.weyl.element(s.element)});
    rep.degrees = molien_degrees(cyclic);
    rep.dimension = static_cast<unsigned>(model.rank - 1) + (2 * s.order - 1);
    rep.single_nontrivial_degree =
        std::count_if(rep.degrees.begin(), rep.degrees.end(), [](unsigned d) { return d > 1; }) == 1 &&
        rep.degrees.back() == s.order;

    std::vector<std::size_t> stab = pointwise_stabilizer(model.weyl, s.hyperplane);
    std::vector<std::size_t> pw = model.weyl.powers(s.element);
    std::sort(stab.begin(), stab.end());
    std::sort(pw.begin(), pw.end());
    rep.stabilizer_is_cyclic = stab == pw;
    return rep;
}

}  // namespace pflag
