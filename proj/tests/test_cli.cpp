#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qplane/cli.hpp"
#include "qplane/enumeration.hpp"
#include "qplane/errors.hpp"
#include "qplane/serialize.hpp"
#include "qplane/torsion.hpp"

using namespace qplane;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string words(const Json& arr, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i)
        s += (i ? sep : "") + arr[i].dump();
    return s;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_rational") {
    CHECK(cli::parse_rational("3/2") == Rat(3, 2));
    CHECK(cli::parse_rational("-1") == Rat(-1));
    CHECK(cli::parse_rational("4/6").to_string() == "2/3");
    CHECK_THROWS_AS(cli::parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_rational("abc"), InvalidInput);
}

TEST_CASE("sequence and polynomial parsing") {
    CHECK(cli::parse_sequence("1, 1,2") == std::vector<Degree>{1, 1, 2});
    CHECK(cli::parse_sequence("").empty());
    CHECK(cli::parse_sequence("-3") == std::vector<Degree>{-3});
    CHECK_THROWS_AS(cli::parse_sequence("1,,2"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_sequence("1.5"), InvalidInput);
    CHECK(cli::parse_poly("1/2, 3/2, 1") == binom2(0));
    CHECK_THROWS_AS(cli::parse_poly("1,2"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_poly("1,2,3,4"), InvalidInput);
    CHECK(cli::parse_pvalues("1/2,3/2,0") == PValues{Rat(1, 2), Rat(3, 2), Rat(0)});
}

TEST_CASE("quot on the point") {
    Run r = run({"quot", "--l", "1", "--p1", "0,0,1"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["schema_version"] == cli::kSchemaVersion);
    CHECK(doc["command"]["name"] == "quot");
    const Json& res = doc["result"];
    CHECK(res["count"] == 1);
    CHECK(res["tables"][0]["a"] == Json::array({1, 1}));
    CHECK(res["tables"][0]["b"] == Json::array({2}));
    CHECK(res["tables"][0]["hN"]["values"] == Json::array({1, 1, 1}));
    CHECK(res["tables"][0]["hN"]["stable_from"] == 2);
    CHECK(decode_pvalues(res["p_values"]) == PValues{Rat(1, 2), Rat(3, 2), Rat(0)});
    CHECK(res.contains("stats"));
    CHECK(res.contains("query"));
    CHECK_FALSE(doc.contains("timing"));
}

TEST_CASE("quot with zero kernel gives one empty table") {
    Run r = run({"quot", "--l", "2", "--p1", "1,3,2"});
    REQUIRE(r.code == 0);
    Json res = Json::parse(r.out)["result"];
    CHECK(res["zero_kernel"] == true);
    CHECK(res["count"] == 1);
    CHECK(res["tables"][0]["a"].empty());
    CHECK(res["tables"][0]["hN"]["values"] == Json::array({2}));
    CHECK(res["notes"][0] == "M = 0, N = R^2");
}

TEST_CASE("check reports without failing") {
    Run r = run({"check", "--a", "0,1,2", "--b", "1,2"});
    CHECK(r.code == 0);
    Json res = Json::parse(r.out)["result"];
    CHECK(res["admissible"] == false);
    CHECK(res["violations"][0]["r"] == 1);
    CHECK(res["violations"][0]["condition"] == "(*1)");
    Run ok = run({"check", "--a", "1,1", "--b", "2"});
    CHECK(Json::parse(ok.out)["result"]["admissible"] == true);
}

TEST_CASE("reduce prints JSON lines") {
    Run r = run({"reduce", "--a", "1,2", "--b", "3", "--trace"});
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    Json first = Json::parse(lines[0]);
    CHECK(first["kind"] == "state");
    CHECK(decode_pvalues(first["p_values"]).p0 == Rat(-1));
    Json last = Json::parse(lines.back());
    CHECK(last["kind"] == "result");
    CHECK(last["result"]["steps"] == 2);
    CHECK(last["result"]["terminal"]["a"] == Json::array({0}));

    Run quiet = run({"reduce", "--a", "1,2", "--b", "3", "--verify"});
    CHECK(quiet.code == 0);
    REQUIRE(lines_of(quiet.out).size() == 1);
    CHECK(Json::parse(quiet.out)["result"]["verify"]["ok"] == true);
}

TEST_CASE("torsion document") {
    Run r = run({"torsion", "--e", "2", "--d", "2"});
    REQUIRE(r.code == 0);
    Json res = Json::parse(r.out)["result"];
    CHECK(res["label"] == "numerical-candidate");
    CHECK(decode_poly(res["polynomial"]) == HilbPoly::linear(2, 2));
    CHECK(res["count"] == 1);
    CHECK(decode_torsion(res["tables"][0]) == TorsionResolution({0, 0}, {1, 1}));
}

TEST_CASE("verify exits 0 on agreement") {
    Run r = run({"verify", "--mode", "quot", "--l", "1", "--p1", "0,0,1", "--max-value", "6", "--max-len", "6"});
    CHECK(r.code == 0);
    Json res = Json::parse(r.out)["result"];
    CHECK(res["status"] == "exact match");
    CHECK(res["summary"] == "exact match, 1 element");

    Run limited = run({"verify", "--mode", "quot", "--p", "1/2,3/2,-1", "--max-value", "2", "--max-len", "2"});
    CHECK(limited.code == 0);
    CHECK(Json::parse(limited.out)["result"]["status"] == "box-limited");

    Run t = run({"verify", "--mode", "torsion", "--e", "2", "--d", "1", "--max-value", "4", "--max-len", "3"});
    CHECK(t.code == 0);
    CHECK(Json::parse(t.out)["result"]["status"] == "exact match");
}

TEST_CASE("incomplete main search shows up as a mismatch") {
    Run r = run({"verify", "--mode", "quot", "--p", "1,1,-3", "--max-value", "5", "--max-len", "4", "--max-nodes",
                 "2"});
    CHECK(r.code == 2);
    Json res = Json::parse(r.out)["result"];
    CHECK(res["status"] == "mismatch");
    CHECK(res["complete"] == false);
    CHECK_FALSE(res["missing"].empty());
}

TEST_CASE("invalid input exits 1") {
    CHECK(run({}).code == 1);
    Run unknown = run({"frobnicate"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("unknown subcommand") != std::string::npos);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({"quot", "--l", "1"}).code == 1);
    CHECK(run({"quot", "--l", "1", "--p1", "1/0,0,1"}).code == 1);
    CHECK(run({"quot", "--l", "1", "--p1", "2,0,0"}).code == 1);
    CHECK(run({"quot", "--l", "0", "--p1", "0,0,1"}).code == 1);
    CHECK(run({"quot", "--l", "1", "--p1", "0,0,1", "--format", "xml"}).code == 1);
    CHECK(run({"reduce", "--a", "0,1,2", "--b", "1,2"}).code == 1);
    CHECK(run({"reduce", "--a", "-1"}).code == 1);
    CHECK(run({"torsion", "--e", "0", "--d", "1"}).code == 1);
    CHECK(run({"verify", "--mode", "quot", "--max-value", "3"}).code == 1);
    CHECK(run({"verify", "--mode", "dance"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output round-trips") {
    for (const char* p1 : {"0,0,1", "0,0,2", "0,0,3", "1/2,5/2,2"}) {
        Run r = run({"quot", "--l", p1[0] == '1' ? "2" : "1", "--p1", p1, "--threads", "1"});
        REQUIRE(r.code == 0);
        Json res = Json::parse(r.out)["result"];
        QuotQuery q{res["query"]["l"].get<std::int64_t>(), decode_poly(res["query"]["p1"])};
        CHECK(q.p1 == cli::parse_poly(p1));
        EnumerationResult direct = enumerate_quot(q);
        REQUIRE(res["tables"].size() == direct.tables.size());
        for (std::size_t i = 0; i < direct.tables.size(); ++i) {
            const Json& t = res["tables"][i];
            CHECK(decode_betti(t) == direct.tables[i].betti);
            std::vector<BigInt> hn;
            for (const Json& v : t["hN"]["values"])
                hn.push_back(decode_bigint(v));
            CHECK(hn == direct.tables[i].hN);
        }
        CHECK(decode_poly(res["kernel_polynomial"]) == direct.kernel_poly);
        // re-encoding reproduces the same text
        CHECK(encode(decode_pvalues(res["p_values"])) == res["p_values"]);
    }
    CHECK(decode_rat(encode(Rat(-6, 4))) == Rat(-3, 2));
    BigInt huge("1000000000000000000000000");
    CHECK(encode(huge).is_string());
    CHECK(decode_bigint(encode(huge)) == huge);
    CHECK_THROWS_AS(decode_betti(Json::parse(R"({"a":[1]})")), InvalidInput);
    CHECK_THROWS_AS(decode_rat(Json::parse("1.5")), InvalidInput);
}

TEST_CASE("csv and table carry the same tables as JSON") {
    const std::vector<std::string> base{"quot", "--l", "1", "--p1", "0,0,3"};
    auto with = [&](const char* fmt) {
        auto args = base;
        args.insert(args.end(), {"--format", fmt});
        Run r = run(args);
        REQUIRE(r.code == 0);
        return r.out;
    };
    Json tables = Json::parse(with("json"))["result"]["tables"];
    REQUIRE(tables.size() > 1);

    auto csv = lines_of(with("csv"));
    REQUIRE(csv.size() == tables.size() + 1);
    CHECK(csv[0] == "index,a,b,hN,stable_from");
    for (std::size_t i = 0; i < tables.size(); ++i) {
        auto f = split(csv[i + 1], ',');
        REQUIRE(f.size() == 5);
        CHECK(f[0] == std::to_string(i + 1));
        CHECK(f[1] == words(tables[i]["a"], " "));
        CHECK(f[2] == words(tables[i]["b"], " "));
        CHECK(f[3] == words(tables[i]["hN"]["values"], " "));
        CHECK(f[4] == tables[i]["hN"]["stable_from"].dump());
    }

    auto table = lines_of(with("table"));
    auto header = std::find_if(table.begin(), table.end(), [](const std::string& l) { return l.rfind("#", 0) == 0; });
    REQUIRE(header != table.end());
    std::vector<std::string> rows(header + 1, table.end());
    REQUIRE(rows.size() == tables.size());
    for (std::size_t i = 0; i < tables.size(); ++i) {
        std::istringstream is(rows[i]);
        std::string idx, a, b;
        is >> idx >> a >> b;
        CHECK(idx == std::to_string(i + 1));
        CHECK(a == words(tables[i]["a"], ","));
        CHECK(b == words(tables[i]["b"], ","));
    }

    Json tj = Json::parse(run({"torsion", "--e", "3", "--d", "0"}).out)["result"]["tables"];
    auto tcsv = lines_of(run({"torsion", "--e", "3", "--d", "0", "--format", "csv"}).out);
    REQUIRE(tcsv.size() == tj.size() + 1);
    for (std::size_t i = 0; i < tj.size(); ++i) {
        auto f = split(tcsv[i + 1], ',');
        CHECK(f[1] == words(tj[i]["a"], " "));
        CHECK(f[2] == words(tj[i]["b"], " "));
        CHECK(f[3] == tj[i]["slope_constant"].get<std::string>());
    }
}

TEST_CASE("output is deterministic and independent of threads") {
    const std::vector<std::string> q{"quot", "--l", "2", "--p1", "1/2,3/2,4"};
    Run a = run(q);
    Run b = run(q);
    auto single = q;
    single.insert(single.end(), {"--threads", "1"});
    Run c = run(single);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    // the thread count is not echoed, so the documents are identical
    CHECK(a.out == c.out);
}

TEST_CASE("timing is opt-in") {
    Run r = run({"torsion", "--e", "1", "--d", "1", "--timing"});
    Json doc = Json::parse(r.out);
    CHECK(doc["timing"]["milliseconds"].is_number());
}

TEST_CASE("--out writes the document to a file") {
    auto path = std::filesystem::temp_directory_path() / "qplane_cli_test.json";
    Run r = run({"quot", "--l", "1", "--p1", "0,0,1", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(Json::parse(ss.str())["result"]["count"] == 1);
    std::filesystem::remove(path);
    CHECK(run({"quot", "--l", "1", "--p1", "0,0,1", "--out", "/nonexistent/dir/x.json"}).code == 1);
}

}  // TEST_SUITE
