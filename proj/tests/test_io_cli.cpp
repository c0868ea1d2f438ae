#include "satake/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace satake;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "satake_cli");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("satake_test_" + name);
}

}  // namespace

TEST_CASE("module documents round-trip")
{
    for (const auto& [t, lam] : {std::pair{"G2", Coweight{0, 1}}, {"A1xA1", Coweight{1, 1}}, {"B2", Coweight{1, 1}}}) {
        CAPTURE(t);
        const auto m = build_ic_module(make_datum(t), lam);
        const auto j = module_to_json(m);
        const auto back = module_from_json(Json::parse(dump(j)));
        CHECK(back == m);
        CHECK(dump(module_to_json(back)) == dump(j));
    }
}

TEST_CASE("malformed module documents are rejected")
{
    const auto good = module_to_json(build_atom(make_datum("A1"), Coweight{1}));
    auto drop = good;
    drop.erase("weights");
    CHECK_THROWS_AS(module_from_json(drop), FormatError);
    auto shape = good;
    shape["operators"]["e"][0]["blocks"][0]["rows"] = 2;
    CHECK_THROWS_AS(module_from_json(shape), FormatError);
    auto entry = good;
    entry["operators"]["e"][0]["blocks"][0]["entries"][0][2] = "1/0";
    CHECK_THROWS_AS(module_from_json(entry), FormatError);
    auto order = good;
    order["operators"]["h"][0]["index"] = 2;
    CHECK_THROWS_AS(module_from_json(order), FormatError);
    CHECK_THROWS_AS(datum_from_json(Json{{"type", "Z9"}}), FormatError);
    CHECK(*datum_from_json(Json{{"cartan", {{2, -1}, {-3, 2}}}}) == *make_datum("G2"));
}

TEST_CASE("coweight parsing and cap resolution")
{
    CHECK(parse_coweight("1,-2", 2) == Coweight{1, -2});
    CHECK_THROWS_AS(parse_coweight("1,", 2), ConfigError);
    CHECK_THROWS_AS(parse_coweight("1", 2), ConfigError);
    CHECK_THROWS_AS(parse_coweight("1,a", 2), ConfigError);
    CHECK_THROWS_AS(parse_coweight("", 1), ConfigError);

    ::unsetenv("SATAKE_CAP");
    CHECK(resolve_cap(std::nullopt) == kDefaultDimensionCap);
    ::setenv("SATAKE_CAP", "50", 1);
    CHECK(resolve_cap(std::nullopt) == 50);
    CHECK(resolve_cap(std::size_t{7}) == 7);
    ::setenv("SATAKE_CAP", "-3", 1);
    CHECK_THROWS_AS(resolve_cap(std::nullopt), ConfigError);
    ::unsetenv("SATAKE_CAP");
    CHECK_THROWS_AS(resolve_cap(std::size_t{0}), ConfigError);
}

TEST_CASE("CLI exit codes")
{
    ::unsetenv("SATAKE_CAP");
    auto ok = cli({"build", "--type", "A1xA1", "--coweight", "1,1"});
    CHECK(ok.code == kExitOk);
    const auto doc = Json::parse(ok.out);
    CHECK(doc["dim"] == 4);
    CHECK(doc["highest_weight"] == Json::array({1, 1}));

    CHECK(cli({"verify", "--type", "G2", "--coweight", "0,1"}).code == kExitOk);
    CHECK(cli({"build", "--type", "Q3", "--coweight", "1"}).code == kExitBadInput);
    CHECK(cli({"build", "--type", "A2"}).code == kExitBadInput);
    CHECK(cli({"build", "--type", "A2", "--coweight", "-1,0"}).code == kExitBadInput);
    CHECK(cli({"build", "--type", "A2", "--coweight", "1,0", "--format", "xml"}).code == kExitBadInput);
    CHECK(cli({"cells", "--type", "G2", "--coweight", "1,0"}).code == kExitBadInput);
    CHECK(cli({"frobnicate"}).code == kExitBadInput);
    CHECK(cli({"build", "--type", "G2", "--coweight", "1,0", "--cap", "10"}).code == kExitCapExceeded);

    ::setenv("SATAKE_CAP", "2", 1);
    CHECK(cli({"build", "--type", "G2", "--coweight", "0,1"}).code == kExitCapExceeded);
    CHECK(cli({"build", "--type", "G2", "--coweight", "0,1", "--cap", "20"}).code == kExitOk);
    ::unsetenv("SATAKE_CAP");
}

TEST_CASE("CLI verify reads a module document and reports corruption")
{
    const auto path = temp_file("module.json");
    const auto bad = temp_file("bad.json");
    auto built = cli({"build", "--type", "G2", "--coweight", "0,1", "--out", path.string()});
    REQUIRE(built.code == kExitOk);
    CHECK(built.out.empty());
    CHECK(cli({"verify", "--in", path.string()}).code == kExitOk);

    std::ifstream f(path);
    auto doc = Json::parse(f);
    doc["operators"]["e"][1]["blocks"][0]["entries"][0][2] = "5/1";
    std::ofstream(bad) << doc.dump();
    auto r = cli({"verify", "--in", bad.string()});
    CHECK(r.code == kExitVerifyFailed);
    const auto report = Json::parse(r.out);
    CHECK(report["passed"] == false);
    bool witnessed = false;
    for (const auto& c : report["checks"])
        if (!c["pass"].get<bool>() && c.contains("witness"))
            witnessed = true;
    CHECK(witnessed);

    std::ofstream(bad) << "{not json";
    CHECK(cli({"verify", "--in", bad.string()}).code == kExitBadInput);
    CHECK(cli({"verify", "--in", temp_file("missing.json").string()}).code == kExitBadInput);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("CLI decompose and cells")
{
    auto a1 = Json::parse(cli({"decompose", "--type", "A1", "--coweight", "1", "--coweight2", "1"}).out);
    CHECK(a1["components"] == Json::parse(R"([{"coweight":[0],"multiplicity":1},{"coweight":[2],"multiplicity":1}])"));
    CHECK(a1["components_dim"] == a1["dim"]);
    auto cells = cli({"cells", "--type", "G2", "--coweight", "0,1"});
    CHECK(cells.code == kExitOk);
    CHECK(Json::parse(cells.out)["words"].size() == 28);
}
