#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pflag/catalog.hpp"
#include "pflag/cli.hpp"
#include "pflag/error.hpp"
#include "pflag/reflection_group.hpp"

using namespace pflag;
using nlohmann::json;

namespace {

const std::string kFixtures = PFLAG_FIXTURE_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

ErrorCode parse_error_code(const std::string& text) {
    try {
        parse_group_spec(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("parsed without error");
    return ErrorCode::InvalidArgument;
}

std::string parse_error_message(const std::string& text) {
    try {
        parse_group_spec(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

void require_keys(const json& doc, std::initializer_list<std::pair<const char*, json::value_t>> keys) {
    for (const auto& [key, type] : keys) {
        CAPTURE(key);
        REQUIRE(doc.contains(key));
        const json::value_t t = doc.at(key).type();
        const bool numeric = type == json::value_t::number_integer || type == json::value_t::number_unsigned;
        if (numeric)
            CHECK((t == json::value_t::number_integer || t == json::value_t::number_unsigned));
        else
            CHECK(t == type);
    }
}

}  // namespace

TEST_CASE("fixtures round-trip byte for byte") {
    for (const char* name : {"g7.json", "pm1.json"}) {
        CAPTURE(name);
        const std::string text = slurp(kFixtures + "/" + name);
        const std::string once = serialize_group_spec(parse_group_spec(text));
        CHECK(once == text);
        CHECK(serialize_group_spec(parse_group_spec(once)) == once);
    }
}

TEST_CASE("G7 fixture matches the catalog entry") {
    const GroupSpec file = parse_group_file(kFixtures + "/g7.json");
    const GroupSpec built = g7_group();
    REQUIRE(file.generators.size() == built.generators.size());
    for (std::size_t i = 0; i < built.generators.size(); ++i) CHECK(file.generators[i] == built.generators[i]);
    CHECK(file.primes == std::vector<std::uint64_t>{13});

    const ReflectionGroup a = close_group(file.rank, file.conductor, file.generators);
    const ReflectionGroup b = close_group(built.rank, built.conductor, built.generators);
    CHECK(a.order() == 144);
    CHECK(a.order() == b.order());
    CHECK(molien_degrees(a) == molien_degrees(b));
}

TEST_CASE("pm1 fixture") {
    const GroupSpec spec = parse_group_file(kFixtures + "/pm1.json");
    CHECK(spec.rank == 1);
    CHECK(spec.conductor == 1);
    const ReflectionGroup g = close_group(spec.rank, spec.conductor, spec.generators);
    CHECK(g.order() == 2);
    CHECK(g.reflections().size() == 1);
}

TEST_CASE("group file errors") {
    CHECK(parse_error_code("{\"name\": \"x\", \"rank\": 1, \"conductor\": 1}") == ErrorCode::ParseError);
    CHECK(parse_error_message("{\"name\": \"x\", \"rank\": 1, \"conductor\": 1}").find("generators") != std::string::npos);
    CHECK(parse_error_message("{\"name\": \"x\", \"conductor\": 1}").find("rank") != std::string::npos);

    // truncated document
    const std::string text = slurp(kFixtures + "/pm1.json");
    CHECK(parse_error_code(text.substr(0, text.size() / 2)) == ErrorCode::ParseError);

    CHECK(parse_error_code(R"({"name":"x","rank":1,"conductor":4,"generators":[[[["1/1"]]]]})") == ErrorCode::ParseError);
    CHECK(parse_error_message(R"({"name":"x","rank":1,"conductor":4,"generators":[[[["1/1"]]]]})")
              .find("generators[0][0][0]: expected 2 coefficients") != std::string::npos);
    CHECK(parse_error_code(R"({"name":"x","rank":1,"conductor":1,"generators":[[[["1/0"]]]]})") == ErrorCode::ParseError);
    CHECK(parse_error_code(R"({"name":"x","rank":1,"conductor":1,"generators":[[[[1]]]]})") == ErrorCode::ParseError);
    CHECK(parse_error_code(R"({"name":"x","rank":1,"conductor":1,"generators":[[[["0/1"]]]]})") ==
          ErrorCode::NonInvertibleGenerator);
    CHECK(parse_error_code("[1, 2]") == ErrorCode::ParseError);
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_lookup("C4").conductor == 4);
    CHECK(catalog_lookup("S4").rank == 3);
    CHECK(catalog_lookup("sullivan", 7).generators.size() == 1);
    for (const char* bad : {"G8", "C", "Cx", "S1", "sullivan"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(catalog_lookup(bad), Error);
    }
    CHECK(resolve_group(kFixtures + "/g7.json").name == "G7");
    for (const auto& [spec, p] : catalog_models()) {
        CAPTURE(spec.name);
        const ReflectionGroup g = close_group(spec.rank, spec.conductor, spec.generators);
        CHECK_FALSE(g.reflections().empty());
    }
}

TEST_CASE("cli text output") {
    Run r = run({"group", "info", "G7", "--prime", "13"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order        144") != std::string::npos);
    CHECK(r.out.find("r'           3") != std::string::npos);
    CHECK(r.out.find("kappa        0") != std::string::npos);

    r = run({"splitting", "verify", "--prime", "13", "--l", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("f residues    {2, 5, 8, 11}") != std::string::npos);
    CHECK(r.out.find("all checks pass") != std::string::npos);

    r = run({"adjoint", "sullivan", "--prime", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("degrees {3, 5, 7}") != std::string::npos);
    CHECK(r.out.find("not a sphere") != std::string::npos);

    r = run({"catalog", "list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("G7") != std::string::npos);

    r = run({"group", "info", kFixtures + "/g7.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order        144") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    Run r = run({});
    CHECK(r.code == 2);
    r = run({"splitting", "verify", "--prime", "13"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--l") != std::string::npos);
    r = run({"group", "info", "G7", "--prime", "13", "--bogus"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--bogus") != std::string::npos);
    r = run({"group", "info", "C6"});  // C6 has an intended prime
    CHECK(r.code == 0);

    r = run({"embed", "G7", "--prime", "7"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NoEmbedding") != std::string::npos);
    r = run({"group", "info", "nonsense"});
    CHECK(r.code == 1);
    CHECK(r.err.find("UnknownGroup") != std::string::npos);
    r = run({"centralizer", "sullivan", "--prime", "5", "--reflection", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotPrimitive") != std::string::npos);
    r = run({"splitting", "verify", "--prime", "13", "--l", "5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("InvalidL") != std::string::npos);
    r = run({"--help"});
    CHECK(r.code == 0);
}

TEST_CASE("cli json schemas") {
    json doc = run_json({"catalog", "list"});
    REQUIRE(doc["groups"].is_array());
    for (const auto& g : doc["groups"]) require_keys(g, {{"name", json::value_t::string}, {"description", json::value_t::string}});

    doc = run_json({"group", "info", "G7", "--prime", "13"});
    require_keys(doc, {{"rank", json::value_t::number_unsigned},
                       {"degrees", json::value_t::array},
                       {"dimension", json::value_t::number_unsigned},
                       {"rPrime", json::value_t::number_unsigned},
                       {"kappa", json::value_t::number_unsigned},
                       {"l", json::value_t::number_unsigned}});
    CHECK(doc["order"] == 144);
    CHECK(doc["rPrime"] == 3);
    CHECK(doc["kappa"] == 0);
    CHECK(doc["dimension"] == 46);
    CHECK(doc["degrees"] == json::array({12, 12}));

    doc = run_json({"flag", "poincare", "sullivan", "--prime", "5"});
    require_keys(doc, {{"coefficients", json::value_t::array}, {"poincare", json::value_t::string}, {"euler", json::value_t::number_integer}});
    CHECK(doc["poincare"] == "1 + t^2 + t^4 + t^6");

    doc = run_json({"adjoint", "sullivan", "--prime", "5"});
    require_keys(doc, {{"k", json::value_t::number_unsigned},
                       {"page", json::value_t::array},
                       {"dim", json::value_t::number_integer},
                       {"topRank", json::value_t::number_integer},
                       {"euler", json::value_t::number_integer}});
    for (const auto& e : doc["page"]) CHECK(e.size() == 3);
    CHECK(doc["dim"] == 7);
    CHECK(doc["topRank"] == 1);
    CHECK(doc["verdict"] == "not a sphere");

    doc = run_json({"splitting", "verify", "--prime", "13", "--l", "3"});
    require_keys(doc, {{"p", json::value_t::number_unsigned},
                       {"l", json::value_t::number_unsigned},
                       {"degreeBound", json::value_t::number_unsigned},
                       {"checksPassed", json::value_t::array}});
    CHECK(doc["checksFailed"].empty());
    CHECK(doc["umkehrResidues"] == json::array({2, 5, 8, 11}));
    CHECK(doc["degreeBound"] == 72);

    doc = run_json({"splitting", "verify", "--prime", "7", "--l", "3", "--degree-bound", "10"});
    CHECK(doc["degreeBound"] == 10);

    doc = run_json({"centralizer", "S3", "--prime", "5", "--reflection", "0"});
    require_keys(doc, {{"degrees", json::value_t::array}, {"dimension", json::value_t::number_unsigned}});
    CHECK(doc["dimension"] == 4);

    doc = run_json({"embed", "SU2", "--prime", "5", "--precision", "4"});
    require_keys(doc, {{"p", json::value_t::number_unsigned}, {"matrices", json::value_t::array}});
    CHECK(doc["matrices"] == json::array({json::array({json::array({624})})}));
}

TEST_CASE("precision from the environment") {
    setenv("PFLAG_PRECISION", "3", 1);
    json doc = run_json({"embed", "SU2", "--prime", "5"});
    CHECK(doc["matrices"][0][0][0] == 124);
    setenv("PFLAG_PRECISION", "0", 1);
    CHECK(run({"embed", "SU2", "--prime", "5"}).code == 2);
    unsetenv("PFLAG_PRECISION");
}
