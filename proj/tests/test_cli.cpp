#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "totref/cli.hpp"
#include "totref/serialize.hpp"

using namespace totref;
using nlohmann::json;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct CliResult {
    int code;
    std::string out;
    std::string err;
    json report;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    json report = json::parse(out.str(), nullptr, false);
    return CliResult{code, out.str(), err.str(), report};
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "totref-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const json& j) {
    auto path = temp_dir() / name;
    save_json_file(path.string(), j);
    return path.string();
}

std::string zero_tuple_file() {
    RingDescriptor s2(2, Q);
    return write_file("zero_tuple.json", to_json(MatrixTuple::zero(s2, 1)));
}

}  // namespace

TEST_CASE("check passes the trivial tuple and rejects bad input") {
    std::string path = zero_tuple_file();
    CliResult ok = run_cli({"check", path, "--oracle"});
    CHECK(ok.code == 0);
    CHECK(ok.report.at("pass") == true);
    CHECK(ok.report.at("total_acyclicity").at("rank_d") == 3);
    CHECK(ok.report.at("matrix_factorization") == true);
    CHECK(ok.report.at("yoshino").at("pass") == true);

    auto bad_path = temp_dir() / "broken.json";
    std::ofstream(bad_path) << "{ not json";
    CHECK(run_cli({"check", bad_path.string()}).code == 2);

    CHECK(run_cli({"check", write_file("bad_schema.json", {{"field", "Q"}, {"i", 2}})}).code == 2);
    CHECK(run_cli({"check"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("check --raw flags the non-example [y1]") {
    RingDescriptor s2(2, Q);
    std::vector<KMatrix> ys(2, KMatrix(1, 1, Q));
    ys[0].at(0, 0) = Scalar::one(Q);
    LinearMatrix y1(s2, KMatrix(1, 1, Q), ys);
    std::string path = write_file("y1_raw.json", to_json(y1));

    CliResult res = run_cli({"check", path, "--raw"});
    CHECK(res.code == 1);
    CHECK(res.report.at("total_acyclicity").at("exact") == false);
    CHECK(res.report.at("total_acyclicity").at("composition_zero") == true);
}

TEST_CASE("normalize handles the pinned cases through the CLI") {
    RingDescriptor s2(2, Q);

    SMatrix dx = SMatrix::scalar_diag(s2, 1, SElement::x(s2));
    CliResult ok = run_cli({"normalize", write_file("dx.json", to_json(dx)), "--factors"});
    CHECK(ok.code == 0);
    MatrixTuple t = tuple_from_json(ok.report.at("tuple"));
    CHECK(t == MatrixTuple::zero(s2, 1));
    CHECK(ok.report.contains("row_ops"));

    SMatrix nonlinear(s2, 1, 1);
    nonlinear.at(0, 0) = SElement::one(s2);
    CliResult bad = run_cli({"normalize", write_file("const.json", to_json(nonlinear))});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("not linear") != std::string::npos);

    SMatrix singular(s2, 1, 1);
    singular.at(0, 0) = SElement::y(s2, 1);
    CliResult sing = run_cli({"normalize", write_file("sing.json", to_json(singular))});
    CHECK(sing.code == 1);
    CHECK(sing.err.find("not normalizable") != std::string::npos);
}

TEST_CASE("conjugate exit codes follow the decision") {
    RingDescriptor s2(2, Q);
    std::string zero = zero_tuple_file();
    CHECK(run_cli({"conjugate", zero, zero}).code == 0);

    MatrixTuple one(s2, {KMatrix::from_int_rows(Q, {{1}}), KMatrix(1, 1, Q)});
    std::string one_path = write_file("one_tuple.json", to_json(one));
    CliResult no = run_cli({"conjugate", zero, one_path});
    CHECK(no.code == 1);
    CHECK(no.report.at("status") == "no");

    MatrixTuple wide = MatrixTuple::zero(s2, 2);
    CliResult mismatch = run_cli({"conjugate", zero, write_file("wide.json", to_json(wide))});
    CHECK(mismatch.code == 2);

    // zero tuples of size 4 have a 16-dimensional intertwiner space; a tiny
    // budget forces the sampled path, which still finds the witness
    MatrixTuple big = MatrixTuple::zero(s2, 4);
    std::string big_path = write_file("big.json", to_json(big));
    CliResult sampled = run_cli({"conjugate", big_path, big_path, "--budget", "10"});
    CHECK(sampled.code == 0);
    CHECK(sampled.report.at("method") == "sampled");
}

TEST_CASE("zerodivisor command speaks the tiny grammar") {
    CliResult ok = run_cli({"zerodivisor", "x+y1", "--i", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.report.at("partner") == "x-y1");

    CliResult no = run_cli({"zerodivisor", "y1+y2", "--i", "2"});
    CHECK(no.code == 1);
    CHECK(no.report.at("exact_zerodivisor") == false);

    CliResult frac = run_cli({"zerodivisor", "2x+y1", "--i", "2"});
    CHECK(frac.code == 0);
    CHECK(frac.report.at("partner") == "x-1/2*y1");

    CliResult modp = run_cli({"zerodivisor", "x+y1", "--i", "2", "--field", "F5"});
    CHECK(modp.code == 0);
    CHECK(modp.report.at("partner") == "x+4*y1");

    CHECK(run_cli({"zerodivisor", "x+", "--i", "2"}).code == 2);
    CHECK(run_cli({"zerodivisor", "1+x", "--i", "2"}).code == 2);   // not a linear form
    CHECK(run_cli({"zerodivisor", "x+y9", "--i", "2"}).code == 2);  // index out of range
}

TEST_CASE("random is deterministic and family verifies itself") {
    auto dir = temp_dir() / "gen";
    std::filesystem::create_directories(dir);

    CliResult first = run_cli({"random", "--n", "2", "--i", "2", "--field", "F5", "--seed", "9",
                               "--count", "3", "--out", dir.string()});
    CHECK(first.code == 0);
    REQUIRE(first.report.at("files").size() == 3);
    std::vector<std::string> snapshots;
    for (const auto& f : first.report.at("files")) {
        std::ifstream in(f.get<std::string>());
        std::stringstream ss;
        ss << in.rdbuf();
        snapshots.push_back(ss.str());
    }

    CliResult again = run_cli({"random", "--n", "2", "--i", "2", "--field", "F5", "--seed", "9",
                               "--count", "3", "--out", dir.string()});
    CHECK(again.code == 0);
    for (std::size_t k = 0; k < snapshots.size(); ++k) {
        std::ifstream in(again.report.at("files").at(k).get<std::string>());
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == snapshots[k]);
    }

    // each generated file parses and round-trips
    for (const auto& f : first.report.at("files"))
        CHECK(run_cli({"check", f.get<std::string>()}).code == 0);

    CliResult fam = run_cli({"family", "--n", "2", "--i", "2", "--lambdas", "0,1,2", "--out",
                             dir.string()});
    CHECK(fam.code == 0);
    CHECK(fam.report.at("pairwise_non_conjugate") == true);
    CHECK(fam.report.at("members").size() == 3);

    CHECK(run_cli({"family", "--n", "1", "--i", "2", "--lambdas", "1,1", "--out", dir.string()})
              .code == 2);
}
