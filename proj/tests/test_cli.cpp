#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lapctrl/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using lapctrl::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(const std::vector<std::string>& args) {
    auto res = invoke(args);
    REQUIRE(res.code >= 0);
    return json::parse(res.out);
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_tmp_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) const {
        std::ofstream f(path);
        f << content;
    }
    std::string read() const {
        std::ifstream f(path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

const char* kFig2Expr = "(J (U (J x x) (J x x)) (U x (J x x)))";

}  // namespace

TEST_CASE("threshold controls --json reports the selection with a verdict") {
    const auto res = invoke({"threshold", "0101001", "controls", "--json"});
    CHECK(res.code == 0);
    const json rep = json::parse(res.out);
    CHECK(rep["seq"] == "0101001");
    CHECK(rep["n"] == 7);
    CHECK(rep["controls"] == json::array({1, 5}));
    CHECK(rep["excluded"] == json::array({6, 3, 2, 4, 7}));
    CHECK(rep["B"].size() == 7);
    CHECK(rep["B"][0][0] == 1);  // e1
    CHECK(rep["B"][4][1] == 1);  // e5
    CHECK(rep["verdicts"]["pbh"]["controllable"] == true);
    CHECK(rep["verdicts"]["pbh"]["witness_lambda"].is_null());
    CHECK(rep["command"][0] == "threshold");
}

TEST_CASE("threshold text actions") {
    auto res = invoke({"threshold", "0101001", "degrees"});
    CHECK(res.code == 0);
    CHECK(res.out.find("degrees: 3 3 2 4 1 1 6") != std::string::npos);

    res = invoke({"threshold", "0101001", "cells"});
    CHECK(res.out.find("{5 6} {3} {1 2} {4} {7}") != std::string::npos);

    res = invoke({"threshold", "0101001", "spectrum"});
    CHECK(res.out.find("spectrum: 0 1 1 2 4 5 7") != std::string::npos);

    res = invoke({"threshold", "0101001", "verify"});
    CHECK(res.code == 0);
    CHECK(res.out.find("pbh: controllable") != std::string::npos);
    CHECK(res.out.find("eigvec: controllable") != std::string::npos);
    CHECK(res.out.find("kalman: controllable") != std::string::npos);
}

TEST_CASE("threshold 0 modal is the trivial report") {
    const json rep = invoke_json({"threshold", "0", "modal", "--json"});
    CHECK(rep["spectrum"] == json::array({0}));
    CHECK(rep["modal"] == json::array({json::array({1})}));
}

TEST_CASE("threshold --exclude overrides the default representatives") {
    const json rep = invoke_json(
        {"threshold", "0101001", "controls", "--json", "--exclude", "1=5", "--exclude", "3=1"});
    CHECK(rep["controls"] == json::array({2, 6}));
    CHECK(rep["verdicts"]["pbh"]["controllable"] == true);

    CHECK(invoke({"threshold", "0101001", "controls", "--exclude", "1=3"}).code == 2);
    CHECK(invoke({"threshold", "0101001", "controls", "--exclude", "nonsense"}).code == 2);
}

TEST_CASE("input errors exit with code 2 and a position") {
    auto res = invoke({"threshold", "01x1", "degrees"});
    CHECK(res.code == 2);
    CHECK(res.err.find("position 3") != std::string::npos);

    res = invoke({"threshold", "10", "degrees"});
    CHECK(res.code == 2);

    res = invoke({"cograph", "(J x)", "spectrum"});
    CHECK(res.code == 2);

    res = invoke({"threshold", "010", "controls"});  // disconnected
    CHECK(res.code == 2);

    res = invoke({"bogus-subcommand"});
    CHECK(res.code == 2);
}

TEST_CASE("cograph input-matrix emits the padded-sum columns") {
    auto res = invoke({"cograph", kFig2Expr, "input-matrix"});
    CHECK(res.code == 0);

    const json rep = invoke_json({"cograph", kFig2Expr, "input-matrix", "--json"});
    CHECK(rep["expr"] == kFig2Expr);
    CHECK(rep["B"] == json::parse("[[6,1],[6,-1],[3,0],[1,0],[-1,0],[-3,0],[-5,0]]"));
    CHECK(rep["verdicts"]["pbh"]["controllable"] == true);
}

TEST_CASE("cograph spectrum, modal, graph actions") {
    const json spec = invoke_json({"cograph", kFig2Expr, "spectrum", "--json"});
    CHECK(spec["spectrum"] == json::array({0, 3, 4, 5, 5, 6, 7}));

    const json modal = invoke_json({"cograph", kFig2Expr, "modal", "--json"});
    CHECK(modal["groups"].size() == 6);
    CHECK(modal["groups"][3]["lambda"] == 5);
    CHECK(modal["groups"][3]["multiplicity"] == 2);

    const auto graph = invoke({"cograph", "(J x x)", "graph"});
    CHECK(graph.out.find("\n1 2\n") != std::string::npos);

    const json gj = invoke_json({"cograph", "(U (J x x) x)", "graph", "--json"});
    CHECK(gj["edges"] == json::array({json::array({1, 2})}));
    CHECK(gj["n"] == 3);
}

TEST_CASE("cograph expression from a file") {
    TempFile expr_file("expr.txt");
    expr_file.write(std::string(kFig2Expr) + "\n");
    const json rep = invoke_json({"cograph", "@" + expr_file.path, "spectrum", "--json"});
    CHECK(rep["spectrum"] == json::array({0, 3, 4, 5, 5, 6, 7}));

    CHECK(invoke({"cograph", "@missing_file.txt", "spectrum"}).code == 2);
}

TEST_CASE("check verdicts round-trip from a verify report") {
    TempFile report("report.json");
    auto res = invoke({"threshold", "0101001", "verify", "--json", "--out", report.path});
    CHECK(res.code == 0);
    const json rep = json::parse(report.read());

    auto write_matrix = [](const TempFile& f, const json& m) {
        std::ostringstream ss;
        ss << m.size() << ' ' << m[0].size() << '\n';
        for (const auto& row : m) {
            for (std::size_t c = 0; c < row.size(); ++c)
                ss << (c ? " " : "") << row[c].get<long long>();
            ss << '\n';
        }
        f.write(ss.str());
    };
    TempFile lap("lap.txt"), input("b.txt");
    write_matrix(lap, rep["laplacian"]);
    write_matrix(input, rep["B"]);

    const auto check = invoke({"check", "--laplacian", lap.path, "--input", input.path,
                               "--spectrum", "0,1,1,2,4,5,7"});
    CHECK(check.code == 0);
    CHECK(check.out.find("pbh: controllable") != std::string::npos);
    CHECK(check.out.find("kalman: controllable") != std::string::npos);
}

TEST_CASE("check reports a witness for an uncontrollable pair") {
    TempFile lap("k3lap.txt"), input("k3b.txt");
    lap.write("3 3\n2 -1 -1\n-1 2 -1\n-1 -1 2\n");
    input.write("3 1\n1\n0\n0\n");
    const auto res = invoke({"check", "--laplacian", lap.path, "--input", input.path,
                             "--spectrum", "0,3", "--json"});
    CHECK(res.code == 1);
    const json rep = json::parse(res.out);
    CHECK(rep["verdicts"]["pbh"]["controllable"] == false);
    CHECK(rep["verdicts"]["pbh"]["witness_lambda"] == 3);
    CHECK(rep["verdicts"]["pbh"]["witness_vector"] == json::array({0, 1, -1}));
    CHECK(rep["verdicts"]["kalman"] == false);
}

TEST_CASE("check rejects malformed input") {
    TempFile lap("badlap.txt"), input("badb.txt");
    lap.write("2 2\n0 1\n-1 0\n");  // not symmetric
    input.write("2 1\n1\n0\n");
    CHECK(invoke({"check", "--laplacian", lap.path, "--input", input.path, "--spectrum", "0,2"})
              .code == 2);

    lap.write("2 2\n1 -1\n-1 1\n");
    CHECK(invoke({"check", "--laplacian", lap.path, "--input", input.path, "--spectrum", "0;2"})
              .code == 2);
    CHECK(invoke({"check", "--laplacian", "no_such.txt", "--input", input.path, "--spectrum",
                  "0,2"})
              .code == 2);
    // incomplete spectrum
    CHECK(invoke({"check", "--laplacian", lap.path, "--input", input.path, "--spectrum", "0"})
              .code == 2);
}

TEST_CASE("min-controls on sequences and expressions") {
    const json seq = invoke_json({"min-controls", "0101001", "--json"});
    CHECK(seq["found"] == true);
    CHECK(seq["size"] == 2);
    CHECK(seq["controls"] == json::array({1, 5}));

    const json expr = invoke_json({"min-controls", "(J x x x)", "--json"});
    CHECK(expr["size"] == 2);

    // guard: 13 nodes is beyond the brute-force limit
    CHECK(invoke({"min-controls", "0000000000001"}).code == 3);

    // a limit below the answer is a verified negative
    const auto limited = invoke({"min-controls", "0101001", "--limit", "1"});
    CHECK(limited.code == 1);
    CHECK(limited.out.find("no controllable node subset") != std::string::npos);
}

TEST_CASE("dot export") {
    TempFile dot("graph.dot");
    const auto res = invoke({"threshold", "01", "degrees", "--dot", dot.path});
    CHECK(res.code == 0);
    const std::string body = dot.read();
    CHECK(body.find("graph G {") != std::string::npos);
    CHECK(body.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("--out writes the same report to a file") {
    TempFile out_file("out.json");
    const auto res =
        invoke({"threshold", "0101001", "spectrum", "--json", "--out", out_file.path});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    const json rep = json::parse(out_file.read());
    CHECK(rep["spectrum"] == json::array({0, 1, 1, 2, 4, 5, 7}));
}

TEST_CASE("single-node controls carry a warning and an honest verdict") {
    const auto res = invoke({"threshold", "0", "controls", "--json"});
    CHECK(res.code == 1);  // zero-column input cannot steer the lone state
    const json rep = json::parse(res.out);
    CHECK(rep["controls"] == json::array());
    CHECK(rep["warning"].is_string());
    CHECK(rep["verdicts"]["pbh"]["controllable"] == false);
}

TEST_CASE("help exits cleanly") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 2);  // a subcommand is required
}
