#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modcong/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = modcong::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("modcong-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("expand: golden csv strings") {
    RunResult r = run({"expand", "--form", "lambda", "--terms", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,-8,44,-192\n");
    r = run({"expand", "--form", "f1", "--terms", "10", "--format", "csv"});
    CHECK(r.out == "1,-4,0,16,-14,0,0,-64,81\n");
    r = run({"expand", "--form", "psi", "--terms", "20", "--format", "csv"});
    CHECK(r.out == "1,0,0,0,-12,0,0,0,54,0,0,0,-88,0,0,0,-99,0\n");
}

TEST_CASE("expand: text and json renderings") {
    RunResult r = run({"expand", "--form", "lambda", "--terms", "5"});
    CHECK(r.out == "q - 8q^2 + 44q^3 - 192q^4 + O(q^5)\n");
    r = run({"expand", "--form", "theta", "--terms", "4"});
    CHECK(r.out == "1 + 4q + 4q^2 + O(q^4)\n");
    r = run({"expand", "--form", "psi", "--terms", "8"});
    CHECK(r.out == "q^2 - 12q^6 + O(q^8)\n");

    r = run({"expand", "--form", "g1", "--terms", "5", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["name"] == "g1");
    CHECK(j["prec"] == 5);
    CHECK(j["coeffs"] == nlohmann::json({"0", "0", "1", "-28", "396"}));
}

TEST_CASE("expand: sequences and modulus") {
    RunResult r = run({"expand", "--form", "A:2", "--terms", "6", "--format", "csv"});
    CHECK(r.out == "1,8,88,1088,14296,195008\n");
    r = run({"expand", "--form", "A:2", "--terms", "6", "--mod", "5", "--format", "csv"});
    CHECK(r.out == "1,3,3,3,1,3\n");
    r = run({"expand", "--form", "aperyB", "--terms", "6", "--format", "csv"});
    CHECK(r.out == "1,3,19,147,1251,11253\n");
    r = run({"expand", "--form", "D3", "--terms", "6", "--format", "csv"});
    CHECK(r.out == "0,1,-4,-36,-368,-4132\n");
    r = run({"expand", "--form", "B:2", "--terms", "6", "--format", "csv"});
    CHECK(r.out == "0,0,0,1,44,1276\n");
    r = run({"expand", "--form", "C:2", "--terms", "6", "--format", "csv"});
    CHECK(r.out == "0,0,1,36,900,19344\n");
}

TEST_CASE("expand: errors exit 2") {
    CHECK(run({"expand", "--form", "bogus", "--terms", "5"}).code == 2);
    CHECK(run({"expand", "--form", "f1", "--terms", "0"}).code == 2);
    CHECK(run({"expand", "--form", "f1", "--terms", "5", "--mod", "1"}).code == 2);
    CHECK(run({"expand", "--form", "f1"}).code == 2); // --terms is required
    RunResult r = run({"expand", "--form", "f:1", "--terms", "5"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("verify: identities") {
    RunResult r = run({"verify", "identity.lemma5", "--terms", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("identity.lemma5") != std::string::npos);
    CHECK(r.out.find("1 pass, 0 fail") != std::string::npos);
    CHECK(run({"verify", "identity.eq1"}).code == 0); // --terms auto default
    CHECK(run({"verify", "identity.eq1", "--terms", "7"}).code == 2);
    CHECK(run({"verify", "nosuch"}).code == 2);
}

TEST_CASE("verify: congruence families, bounds and filters") {
    RunResult r = run({"verify", "theorem1", "--prime-max", "60", "--n", "2"});
    CHECK(r.code == 0);
    r = run({"verify", "cor1.eq1", "--prime-max", "20", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 1);
    CHECK(j[0]["family"] == "cor1.eq1");
    CHECK(j[0]["summary"]["pass"] == 6); // p in {5,7,11,13,17,19}
    CHECK(j[0]["instances"][0]["desc"] == "p=5 A_3(p-1) mod p");
    CHECK(j[0]["instances"][0]["witness"][0] == "29916");

    // --prime-min drops the small primes from the report
    r = run({"verify", "cor1.eq1", "--prime-max", "20", "--prime-min", "11",
             "--format", "json"});
    nlohmann::json j2 = nlohmann::json::parse(r.out);
    CHECK(j2[0]["summary"]["pass"] == 4); // p in {11,13,17,19}

    r = run({"verify", "intro-apery", "--prime-max", "20", "--m-max", "3",
             "--r-max", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("intro-apery") != std::string::npos);
}

TEST_CASE("verify: failing family exits 1 and still reports") {
    // weight 4 is wrong for these coefficients, so instances fail
    RunResult r = run({"hecke", "--form", "f1", "--prime-max", "5", "--range", "10",
                       "--weight", "4"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("total:") != std::string::npos);
}

TEST_CASE("hecke defaults pass") {
    RunResult r = run({"hecke", "--prime-max", "20", "--range", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 fail") != std::string::npos);
    r = run({"hecke", "--form", "psi", "--prime-max", "11", "--range", "10",
             "--weight", "6", "--chi", "trivial"});
    CHECK(r.code == 0);
}

TEST_CASE("cornacchia verb") {
    RunResult r = run({"cornacchia", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "13 = 2^2 + 3^2\n");
    CHECK(run({"cornacchia", "7"}).code == 2);
    CHECK(run({"cornacchia", "during"}).code == 2);
}

TEST_CASE("cache verbs") {
    TempDir tmp;
    std::string dir = tmp.path.string();
    RunResult w = run({"cache", "write", "--form", "g1", "--terms", "8", "--dir", dir});
    CHECK(w.code == 0);
    CHECK(std::filesystem::exists(tmp.path / "g1.json"));
    RunResult rd = run({"cache", "read", "--form", "g1", "--dir", dir});
    CHECK(rd.code == 0);
    CHECK(rd.out == "q^2 - 28q^3 + 396q^4 - 3808q^5 + 28224q^6 - 172872q^7 + O(q^8)\n");
    RunResult h = run({"cache", "write", "--form", "h:2", "--terms", "9", "--dir", dir});
    CHECK(h.code == 0);
    CHECK(std::filesystem::exists(tmp.path / "h_2.json"));
    RunResult cl = run({"cache", "clear", "--dir", dir});
    CHECK(cl.code == 0);
    CHECK(cl.out.find("2") != std::string::npos);
    CHECK(run({"cache", "read", "--form", "g1", "--dir", dir}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("expand") != std::string::npos);
}
