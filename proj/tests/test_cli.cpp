#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "monogen/serialize.hpp"

using monogen::io::Json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = monogen::cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json run_json(std::vector<std::string> args) {
    args.insert(args.end(), {"--format", "json"});
    const auto r = run(args);
    REQUIRE(r.code == 0);
    auto doc = Json::parse(r.out);
    doc.erase("timing_ms");
    return doc;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("envelope and determinism") {
    const auto a = run_json({"analyze", "--n", "27", "--m", "82"});
    const auto b = run_json({"analyze", "--n", "27", "--m", "82"});
    CHECK(a == b);
    CHECK(a["schema_version"] == 1);
    CHECK(a["tool"] == "monogen");
    CHECK(a["command"] == "analyze");
    CHECK(a["config"].contains("simd"));

    const auto s1 = run_json({"search", "--n-range", "27", "--m-range", "70:90", "--jobs", "1"});
    const auto s4 = run_json({"search", "--n-range", "27", "--m-range", "70:90", "--jobs", "4"});
    CHECK(s1["result"] == s4["result"]);
}

TEST_CASE("exit codes and error messages") {
    CHECK(run({"analyze", "--n", "4", "--m", "17"}).code == 0);
    const auto reducible = run({"analyze", "--n", "4", "--m", "16"});
    CHECK(reducible.code == 1);
    CHECK(reducible.err.rfind("error: analyze:", 0) == 0);
    CHECK(run({"analyze", "--n", "4"}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({"analyze", "--n", "4", "--m", "17", "--format", "yaml"}).code != 0);

    const auto not_factor = run({"polygon", "--poly", "x^4 - 17", "--p", "2", "--phi", "x"});
    CHECK(not_factor.code == 1);
    CHECK(not_factor.err.find("phi mod p is not a factor of F mod p") != std::string::npos);
}

TEST_CASE("expressions in integer arguments") {
    const auto a = run_json({"analyze", "--n", "5*7^7", "--m", "7^8-1", "--expand-limit", "0"});
    const auto b = run_json({"analyze", "--n", "4117715", "--m", "5764800", "--expand-limit", "0"});
    CHECK(a["result"] == b["result"]);
    CHECK(a["result"]["discriminant"] == "-4117715^4117715*5764800^4117714");
    const auto small = run_json({"analyze", "--n", "4", "--m", "17"});
    CHECK(small["result"]["discriminant"] == -256 * 17 * 17 * 17);
}

TEST_CASE("ascii rendering stays within 100 columns") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"polygon", "--poly", "x^4 - 17", "--p", "2", "--render", "ascii", "--format", "text"},
             {"polygon", "--n", "243", "--m", "82", "--p", "3", "--render", "ascii", "--format", "text"},
             {"polygon", "--n", "6", "--m", "30", "--p", "5", "--render", "ascii", "--format", "text"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        for (const auto& line : lines(r.out)) CHECK(line.size() <= 100);
        CHECK(r.out.find("S1") != std::string::npos);
    }
}

TEST_CASE("svg rendering") {
    const auto r = run({"polygon", "--poly", "x^4 - 17", "--p", "2", "--phi", "x + 1", "--render", "svg",
                        "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
    CHECK(r.out.find("<polyline") != std::string::npos);
    int depth = 0;
    for (std::size_t pos = 0; (pos = r.out.find('<', pos)) != std::string::npos; ++pos) {
        if (r.out.compare(pos, 2, "<?") == 0) continue;
        const auto close = r.out.find('>', pos);
        REQUIRE(close != std::string::npos);
        if (r.out[pos + 1] == '/') --depth;
        else if (r.out[close - 1] != '/') ++depth;
        CHECK(depth >= 0);
    }
    CHECK(depth == 0);
    CHECK(run({"polygon", "--poly", "x^4 - 17", "--p", "2", "--render", "svg", "--format", "text", "--phi", "x"}).code == 1);
}

TEST_CASE("csv output") {
    const auto r = run({"search", "--n-range", "27", "--m-range", "78:84", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "n,m,status,p,d,L,N,provenance,error");
    CHECK(rows[3].rfind("27,80,NotMonogenic,3,1,4,3,", 0) == 0);

    const auto empty = run({"search", "--n-range", "27", "--m-range", "5:4", "--format", "csv"});
    CHECK(empty.code == 0);
    CHECK(lines(empty.out).size() == 1);
}

TEST_CASE("empty ranges give an empty report") {
    const auto doc = run_json({"search", "--n-range", "27", "--m-range", "5:4"});
    CHECK(doc["result"]["instances"] == 0);
    CHECK(doc["result"]["rows"].empty());
}

TEST_CASE("generator family search") {
    const auto doc = run_json({"search", "--family", "generator", "--n-range", "6", "--a-range", "2:50", "--u", "5"});
    int monogenic = 0;
    for (const auto& row : doc["result"]["rows"]) {
        if (row["status"] == "skipped") continue;
        CHECK(row["status"] == "Monogenic");
        ++monogenic;
    }
    CHECK(monogenic > 0);
}

TEST_CASE("out files resolve against the output directory") {
    const auto dir = std::filesystem::temp_directory_path() / "monogen_cli_test";
    std::filesystem::remove_all(dir);
    ::setenv(monogen::cli::kOutDirVariable, dir.c_str(), 1);
    const auto r = run({"analyze", "--n", "4", "--m", "17", "--out", "sub/report.json"});
    ::unsetenv(monogen::cli::kOutDirVariable);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(dir / "sub" / "report.json");
    REQUIRE(file.good());
    const auto doc = Json::parse(file);
    CHECK(doc["command"] == "analyze");
    std::filesystem::remove_all(dir);
}

TEST_CASE("corollary and cns commands") {
    const auto c = run_json({"corollary", "--family", "3-11", "--r", "2", "--s", "1", "--m", "26"});
    CHECK(c["result"].dump().find("\"agrees\":false") != std::string::npos);
    const auto e = run({"cns", "encode", "--poly", "x^3+2x^2+2x+3", "--element", "5,0,0", "--format", "text"});
    CHECK(e.code == 0);
    CHECK(e.out.find("[2,1,0,1,1]") != std::string::npos);
    const auto d = run_json({"cns", "decode", "--poly", "x^3+2x^2+2x+3", "--digits", "2,1,0,1,1"});
    CHECK(d["result"].dump().find("[5,0,0]") != std::string::npos);
}
