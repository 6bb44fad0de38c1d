#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "c2eff/cli.hpp"
#include "c2eff/json_io.hpp"

using namespace c2eff;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"coeff", "--ring", "f3"}).code == 2);
    CHECK(cli({"chart"}).code == 2);  // --coweight is required
    CHECK(cli({"verify", "--suite", "everything"}).code == 2);
    Result r = cli({"coeff", "--s-min", "3", "--s-max", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("invalid window") != std::string::npos);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("coeff listing") {
    Result r = cli({"coeff", "--ring", "f2", "--s", "2", "--w", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(0,0) F2 1") != std::string::npos);
    CHECK(r.out.find("(-1,-1) F2 r") != std::string::npos);
    r = cli({"coeff", "--ring", "z2", "--s", "2", "--w", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(0,-2) Z2 t^2") != std::string::npos);
    CHECK(r.out.find("(-1,-1) Z/2 r") != std::string::npos);
}

TEST_CASE("verify suites pass on a clean window") {
    Result r = cli({"verify", "--suite", "coeff", "--s", "20", "--w", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coeff: 0 mismatches") != std::string::npos);
    r = cli({"verify", "--suite", "periodicity", "--s", "6", "--w", "6", "--q-max", "10"});
    CHECK(r.code == 0);
    r = cli({"verify", "--s", "4", "--w", "4", "--q-max", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ring: 0 mismatches") != std::string::npos);
}

TEST_CASE("empty chart notice for coweight 3") {
    Result r = cli({"chart", "--coweight", "3", "--page", "e2", "--format", "text",
                    "--s", "5", "--w", "5", "--q-max", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("empty chart") != std::string::npos);
}

TEST_CASE("e2 json output matches the export schema") {
    Result r = cli({"e2", "--json", "--s-min", "-4", "--s-max", "4", "--w-min", "-4",
                    "--w-max", "4", "--q-max", "12"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["page"] == 2);
    CHECK(!doc["groups"].empty());
    CHECK(reserialize(r.out) == r.out);
}

TEST_CASE("homotopy listing and json") {
    Result r = cli({"homotopy", "--s", "2", "--w", "2", "--q-max", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi(1,1) = Z2{h1}") != std::string::npos);
    CHECK(r.out.find("pi(1,0) = Z/4{t h1}") != std::string::npos);
    r = cli({"homotopy", "--json", "--s", "2", "--w", "2", "--q-max", "10",
             "--oracle-min", "0", "--oracle-max", "4"});
    CHECK(r.code == 0);
    CHECK(reserialize(r.out) == r.out);
}

TEST_CASE("export writes a reserializable document") {
    std::string path = "cli_export_test.json";
    Result r = cli({"export", path, "--s", "3", "--w", "3", "--q-max", "10",
                    "--oracle-min", "0", "--oracle-max", "4"});
    REQUIRE(r.code == 0);
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream body;
    body << f.rdbuf();
    CHECK(reserialize(body.str()) == body.str());
    std::remove(path.c_str());
}

TEST_CASE("config file sets the window and flags override it") {
    std::string path = "cli_config_test.ini";
    {
        std::ofstream f(path);
        f << "s-min=-2\ns-max=2\nw-min=-2\nw-max=2\nq-max=6\n";
    }
    Result base = cli({"coeff", "--ring", "f2", "--config", path});
    CHECK(base.code == 0);
    CHECK(base.out.find("(-2,-2)") != std::string::npos);
    CHECK(base.out.find("(-3,-3)") == std::string::npos);
    // an explicit flag wins over the file
    Result wide = cli(
        {"coeff", "--ring", "f2", "--config", path, "--s-min", "-3", "--w-min", "-3"});
    CHECK(wide.code == 0);
    CHECK(wide.out.find("(-3,-3)") != std::string::npos);
    std::remove(path.c_str());
}
