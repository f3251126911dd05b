#include "pflag/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pflag/catalog.hpp"
#include "pflag/error.hpp"
#include "pflag/hocolim.hpp"
#include "pflag/pcompact.hpp"
#include "pflag/splitting.hpp"

namespace pflag {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string group;
    std::optional<std::uint64_t> prime;
    std::optional<unsigned> precision;
    std::vector<std::size_t> subset;
    std::optional<unsigned> l;
    std::optional<std::size_t> degree_bound;
    std::optional<std::size_t> reflection;
};

unsigned default_precision() {
    const char* env = std::getenv("PFLAG_PRECISION");
    if (env == nullptr || *env == '\0') return kDefaultPrecision;
    unsigned k = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc() || ptr != s.data() + s.size() || k == 0)
        throw UsageError("PFLAG_PRECISION must be a positive integer, got '" + std::string(s) + "'");
    return k;
}

unsigned precision_of(const Options& o) { return o.precision ? *o.precision : default_precision(); }

struct Resolved {
    GroupSpec spec;
    std::uint64_t p;
};

Resolved resolve(const Options& o) {
    GroupSpec spec = resolve_group(o.group, o.prime);
    if (o.prime) return {std::move(spec), *o.prime};
    if (spec.primes.empty()) throw UsageError("--prime is required for group '" + o.group + "'");
    const std::uint64_t p = spec.primes.front();
    return {std::move(spec), p};
}

PCompactModel model_for(const Options& o) {
    const Resolved r = resolve(o);
    return build_model(close_group(r.spec.rank, r.spec.conductor, r.spec.generators), r.p, precision_of(o));
}

std::string join(const auto& xs, const char* sep = ", ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) os << sep;
        os << x;
        first = false;
    }
    return os.str();
}

ordered_json ranks_json(const GradedRanks& g) {
    ordered_json a = ordered_json::array();
    for (auto [deg, r] : g.ranks()) a.push_back({deg, r});
    return a;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
    const auto entries = catalog_entries();
    if (o.json) {
        ordered_json doc;
        doc["groups"] = ordered_json::array();
        for (const auto& e : entries) doc["groups"].push_back({{"name", e.name}, {"description", e.description}});
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& e : entries) out << e.name << "\t" << e.description << "\n";
    return kExitOk;
}

int cmd_group_info(const Options& o, std::ostream& out) {
    const PCompactModel m = model_for(o);
    const Resolved r = resolve(o);
    std::size_t primitive = 0;
    for (const auto& refl : m.weyl.reflections()) primitive += refl.primitive;
    if (o.json) {
        ordered_json doc;
        doc["rank"] = m.rank;
        doc["degrees"] = m.degrees;
        doc["dimension"] = m.dimension;
        doc["rPrime"] = m.r_prime;
        doc["kappa"] = m.kappa;
        doc["l"] = m.l;
        doc["name"] = r.spec.name;
        doc["p"] = m.p;
        doc["order"] = m.weyl.order();
        doc["reflections"] = m.weyl.reflections().size();
        doc["primitiveReflections"] = primitive;
        doc["generatingReflections"] = m.generating.reflections;
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "group        " << r.spec.name << " (rank " << m.rank << ", conductor " << m.weyl.conductor() << ")\n"
        << "prime        " << m.p << "\n"
        << "order        " << m.weyl.order() << "\n"
        << "reflections  " << m.weyl.reflections().size() << " (" << primitive << " primitive)\n"
        << "degrees      {" << join(m.degrees) << "}\n"
        << "r            " << m.rank << "\n"
        << "r'           " << m.r_prime << " (reflections " << join(m.generating.reflections) << ")\n"
        << "kappa        " << m.kappa << "\n"
        << "l            " << m.l << "\n"
        << "d            " << m.dimension << "\n";
    return kExitOk;
}

int cmd_flag_poincare(const Options& o, std::ostream& out) {
    const PCompactModel m = model_for(o);
    const IntPolynomial poly = flag_poincare(m, o.subset);
    if (o.json) {
        ordered_json doc;
        doc["subset"] = o.subset;
        doc["coefficients"] = poly.coeffs();
        doc["poincare"] = poly.to_string();
        doc["euler"] = poly.value_at_one();
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "P(G/C_I) = " << poly.to_string() << "\n"
        << "euler    = " << poly.value_at_one() << "\n";
    return kExitOk;
}

void print_page(const SSPage& page, std::ostream& out) {
    const int top = page.max_q();
    out << "E1 page (rows q, columns p = 0.." << page.k - 1 << ")\n";
    for (int q = top; q >= 0; --q) {
        out << "  q=" << q << (q < 10 ? " " : "") << " |";
        for (int p = 0; p < static_cast<int>(page.k); ++p) out << " " << page.at(p, q);
        out << "\n";
    }
}

int cmd_adjoint(const Options& o, std::ostream& out) {
    const PCompactModel m = model_for(o);
    const AdjointReport a = adjoint_homology(m);
    if (o.json) {
        ordered_json doc;
        doc["k"] = a.k;
        ordered_json page = ordered_json::array();
        for (const auto& [pq, r] : a.page.entries) page.push_back({pq.first, pq.second, r});
        doc["page"] = std::move(page);
        doc["dim"] = a.dim;
        doc["topRank"] = a.top_rank;
        doc["euler"] = a.euler;
        doc["kappa"] = a.kappa;
        doc["exact"] = a.exact;
        doc["homology"] = ranks_json(a.homology);
        doc["verdict"] = a.verdict;
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "k = r' = " << a.k << ", kappa = " << a.kappa << "\n";
    print_page(a.page, out);
    out << "dim A_G  = " << a.dim << "\n"
        << "top rank = " << a.top_rank << "\n"
        << "euler    = " << a.euler << "\n"
        << (a.exact ? "reduced H_*(A_G): " : "reduced H_*(A_G) (E1 bound only):");
    if (a.exact) out << "degrees {" << join(a.homology.support()) << "}";
    else
        for (auto [deg, r] : a.homology.ranks()) out << " " << deg << ":" << r;
    out << "\n"
        << "verdict  = " << a.verdict << "\n";
    return kExitOk;
}

int cmd_splitting_verify(const Options& o, std::ostream& out) {
    if (!o.prime) throw UsageError("--prime is required");
    if (!o.l) throw UsageError("--l is required");
    const std::uint64_t p = *o.prime;
    if (o.degree_bound && *o.degree_bound % 2 != 0) throw UsageError("--degree-bound must be even");
    const std::size_t n = o.degree_bound ? *o.degree_bound / 2 : 3 * (p - 1);
    const unsigned k = precision_of(o);

    SplittingReport rep = splitting_checks(p, *o.l, n, k);
    std::string framing_note;
    if (*o.l > 2) rep.checks.push_back({"framing obstruction", verify_framing_obstruction(p, *o.l, n, k)});
    else framing_note = "l = 2 is handled by classical Pittie–Smith case";

    std::vector<std::string> passed, failed;
    for (const auto& c : rep.checks) (c.passed ? passed : failed).push_back(c.name);
    if (o.json) {
        ordered_json doc;
        doc["p"] = rep.p;
        doc["l"] = rep.l;
        doc["degreeBound"] = rep.degree_bound;
        doc["checksPassed"] = passed;
        doc["checksFailed"] = failed;
        doc["bgResidues"] = rep.bg_residues;
        doc["umkehrResidues"] = rep.umkehr_residues;
        if (!framing_note.empty()) doc["note"] = framing_note;
        out << doc.dump(2) << "\n";
    } else {
        out << "p = " << rep.p << ", l = " << rep.l << ", degree bound " << rep.degree_bound << "\n";
        for (const auto& c : rep.checks) out << (c.passed ? "  pass  " : "  FAIL  ") << c.name << "\n";
        out << "f_BG residues {" << join(rep.bg_residues) << "}\n"
            << "f residues    {" << join(rep.umkehr_residues) << "}\n";
        if (!framing_note.empty()) out << "framing: " << framing_note << "\n";
        out << (failed.empty() ? "all checks pass" : "some checks FAILED") << "\n";
    }
    return failed.empty() ? kExitOk : kExitDomainError;
}

int cmd_centralizer(const Options& o, std::ostream& out) {
    if (!o.reflection) throw UsageError("--reflection is required");
    const PCompactModel m = model_for(o);
    const CentralizerReport c = centralizer_structure(m, *o.reflection);
    if (o.json) {
        ordered_json doc;
        doc["reflection"] = c.reflection;
        doc["order"] = c.order;
        doc["degrees"] = c.degrees;
        doc["dimension"] = c.dimension;
        doc["singleNontrivialDegree"] = c.single_nontrivial_degree;
        doc["stabilizerIsCyclic"] = c.stabilizer_is_cyclic;
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "reflection " << c.reflection << " of order " << c.order << "\n"
        << "W(C_s) degrees {" << join(c.degrees) << "}\n"
        << "dim C_s = " << c.dimension << "\n"
        << "one nontrivial degree: " << (c.single_nontrivial_degree ? "yes" : "no") << "\n"
        << "<s> = pointwise stabilizer of the hyperplane: " << (c.stabilizer_is_cyclic ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
    const Resolved r = resolve(o);
    const Embedding e = embed_matrices(r.spec.generators, r.p, precision_of(o));
    if (o.json) {
        ordered_json doc;
        doc["p"] = r.p;
        doc["precision"] = e.ring.precision();
        doc["conductor"] = e.conductor;
        doc["factor"] = e.factor;
        doc["factorIndex"] = e.factor_index;
        doc["factorsTried"] = e.factors_tried;
        ordered_json mats = ordered_json::array();
        for (const auto& m : e.matrices) {
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < m.rank; ++i) {
                ordered_json row = ordered_json::array();
                for (std::size_t j = 0; j < m.rank; ++j) row.push_back(m(i, j));
                rows.push_back(std::move(row));
            }
            mats.push_back(std::move(rows));
        }
        doc["matrices"] = std::move(mats);
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "embedding of " << r.spec.name << " into Z_" << r.p << " mod " << r.p << "^" << e.ring.precision() << "\n"
        << "factor " << e.factor_index << " of the cyclotomic polynomial (tried " << e.factors_tried << "): {"
        << join(e.factor) << "}\n";
    for (std::size_t g = 0; g < e.matrices.size(); ++g) {
        out << "generator " << g << ":\n";
        const ZpMatrix& m = e.matrices[g];
        for (std::size_t i = 0; i < m.rank; ++i) {
            out << "  [";
            for (std::size_t j = 0; j < m.rank; ++j) out << (j ? " " : "") << m(i, j);
            out << "]\n";
        }
    }
    return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-compact flag variety computations", "pflag"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "emit JSON");

    auto add_group = [&](CLI::App* sub) { sub->add_option("group", o.group, "catalog name or group file")->required(); };
    auto add_prime = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--prime,-p", o.prime, "the prime p");
        if (required) opt->required();
    };
    auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--precision,-k", o.precision, "p-adic precision (default $PFLAG_PRECISION or 8)")
            ->check(CLI::PositiveNumber);
    };

    std::function<int()> run;
    auto bind = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
        sub->fallthrough();
        sub->callback([&, fn] { run = [&, fn] { return fn(o, out); }; });
    };

    auto* catalog = app.add_subcommand("catalog", "built-in groups")->require_subcommand(1)->fallthrough();
    bind(catalog->add_subcommand("list", "list catalog entries"), cmd_catalog_list);

    auto* group = app.add_subcommand("group", "reflection group invariants")->require_subcommand(1)->fallthrough();
    auto* info = group->add_subcommand("info", "order, reflections, degrees, r, r', kappa, l, d");
    add_group(info);
    add_prime(info, false);
    add_precision(info);
    bind(info, cmd_group_info);

    auto* flag = app.add_subcommand("flag", "flag varieties")->require_subcommand(1)->fallthrough();
    auto* poincare = flag->add_subcommand("poincare", "Poincare polynomial of G/C_I");
    add_group(poincare);
    add_prime(poincare, false);
    add_precision(poincare);
    poincare->add_option("--subset", o.subset, "positions in the generating reflection list, e.g. 0,2")
        ->delimiter(',');
    bind(poincare, cmd_flag_poincare);

    auto* adjoint = app.add_subcommand("adjoint", "homology of the adjoint space A_G");
    add_group(adjoint);
    add_prime(adjoint, false);
    add_precision(adjoint);
    bind(adjoint, cmd_adjoint);

    auto* splitting = app.add_subcommand("splitting", "stable splitting of BS^1")->require_subcommand(1)->fallthrough();
    auto* verify = splitting->add_subcommand("verify", "idempotent and transfer identities");
    add_prime(verify, true);
    verify->add_option("--l", o.l, "divisor l of p - 1")->required();
    verify->add_option("--degree-bound", o.degree_bound, "even degree bound 2N (default 6(p - 1))");
    add_precision(verify);
    bind(verify, cmd_splitting_verify);

    auto* centralizer = app.add_subcommand("centralizer", "centralizer of a primitive reflection");
    add_group(centralizer);
    add_prime(centralizer, false);
    add_precision(centralizer);
    centralizer->add_option("--reflection", o.reflection, "reflection index")->required();
    bind(centralizer, cmd_centralizer);

    auto* embed = app.add_subcommand("embed", "embed the generators into GL_r(Z_p)");
    add_group(embed);
    add_prime(embed, false);
    add_precision(embed);
    bind(embed, cmd_embed);

    std::vector<std::string> argv_store{"pflag"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        return run();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace pflag
