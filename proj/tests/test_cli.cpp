#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hytet/cli.hpp"
#include "hytet/oracle.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hytet::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "cli_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("cli vol: plain output is one parseable real") {
    const Run r = cli({"vol", "--lengths", "1,1,1,1,1,1"});
    CHECK(r.code == 0);
    const double v = std::stod(r.out);
    const auto golden = hytet::read_golden_file(std::string(HYTET_REPO_DIR) + "/data/golden_regular.txt");
    double expect = 0.0;
    for (const auto& g : golden)
        if (g.key == "rho=1") expect = g.volume;
    CHECK(std::abs(v - expect) < 1e-6);
    CHECK(r.out.find('\n') == r.out.size() - 1);  // single line
}

TEST_CASE("cli vol: Euclidean angles print an exact zero") {
    const Run r = cli({"vol", "--angles",
                       "1.230959417340775,1.230959417340775,1.230959417340775,"
                       "1.230959417340775,1.230959417340775,1.230959417340775"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.000000000000\n");
    CHECK(r.err.find("euclidean") != std::string::npos);
}

TEST_CASE("cli vol: json schema") {
    const Run r = cli({"vol", "--lengths", "1,1,1,1,1,1", "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("shape") == "hyperbolic");
    CHECK(j.at("method") == "lengths");
    CHECK(j.at("volume").get<double>() > 0.09);
    CHECK(j.at("z_minus").contains("re"));
    CHECK(j.at("residues").size() == 2);
    CHECK(j.at("partials").size() == 6);
    CHECK(j.at("diagnostics").contains("im_v"));
}

TEST_CASE("cli convert: lengths to angles and back") {
    const Run r = cli({"convert", "--lengths", "1,1,1,1,1,1"});
    CHECK(r.code == 0);
    std::istringstream ss(r.out);
    std::string tok;
    int n = 0;
    const double expect = std::acos(std::cosh(1.0) / (2.0 * std::cosh(1.0) + 1.0));
    while (std::getline(ss, tok, ',')) {
        CHECK(std::stod(tok) == doctest::Approx(expect).epsilon(1e-9));
        ++n;
    }
    CHECK(n == 6);

    std::ostringstream angles_arg;
    angles_arg.precision(17);
    for (int i = 0; i < 6; ++i) angles_arg << (i ? "," : "") << expect;
    const Run r2 = cli({"convert", "--angles", angles_arg.str()});
    CHECK(r2.code == 0);
    std::istringstream ss2(r2.out);
    while (std::getline(ss2, tok, ','))
        CHECK(std::stod(tok) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cli oracle: matches the formula") {
    const Run f = cli({"vol", "--lengths", "0.9,1.1,1.0,1.2,0.8,1.0"});
    const Run o = cli({"oracle", "--lengths", "0.9,1.1,1.0,1.2,0.8,1.0"});
    CHECK(f.code == 0);
    CHECK(o.code == 0);
    CHECK(std::abs(std::stod(f.out) - std::stod(o.out)) < 1e-6);
}

TEST_CASE("cli check: passes on a healthy tetrahedron") {
    const Run r = cli({"check", "--lengths", "1,1,1,1,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all rows passed") != std::string::npos);

    // an impossible oracle tolerance forces a row failure
    const Run strict = cli({"check", "--lengths", "1,1,1,1,1,1", "--tol", "1e-18"});
    CHECK(strict.code == 1);
    CHECK(strict.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli check: honors HYTET_TOL") {
    setenv("HYTET_TOL", "1e-18", 1);
    const Run r = cli({"check", "--lengths", "1,1,1,1,1,1"});
    unsetenv("HYTET_TOL");
    CHECK(r.code == 1);
}

TEST_CASE("cli check: angle inputs") {
    const Run sph = cli({"check", "--angles",
                         "1.5707963267948966,1.5707963267948966,1.5707963267948966,"
                         "1.5707963267948966,1.5707963267948966,1.5707963267948966"});
    CHECK(sph.code == 0);
    const Run hyp = cli({"check", "--angles", "1.2,1.2,1.2,1.2,1.2,1.2"});
    CHECK(hyp.code == 0);
}

TEST_CASE("cli error taxonomy") {
    CHECK(cli({"vol", "--lengths", "1,2,nope"}).code == 2);
    CHECK(cli({"vol", "--lengths", "1,2,3,4,5"}).code == 2);
    CHECK(cli({"vol"}).code == 2);
    CHECK(cli({"vol", "--lengths", "1,1,1,1,1,1", "--angles", "1,1,1,1,1,1"}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    // impossible lengths: exit 3, nothing on the result stream
    const Run r = cli({"vol", "--lengths", "0.1,0.1,0.1,3,3,3"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
    // angles that bound nothing
    CHECK(cli({"vol", "--angles", "0.5113,1.8128,0.4987,1.1497,0.9508,2.7931"}).code == 3);
}

TEST_CASE("cli batch: csv stream with per-record errors") {
    const std::string path = write_temp("batch.csv",
                                        "kind,v1,v2,v3,v4,v5,v6\n"
                                        "lengths,1,1,1,1,1,1\n"
                                        "angles,1.2,1.2,1.2,1.2,1.2,1.2\n"
                                        "lengths,0.1,0.1,0.1,3,3,3\n"
                                        "lengths,1,2,bad,1,1,1\n");
    const Run r = cli({"batch", "--input", path, "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream ss(r.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "index,kind,status,volume,shape,error");
    int ok = 0, errs = 0, idx = 0;
    while (std::getline(ss, line)) {
        CHECK(line.rfind(std::to_string(idx) + ",", 0) == 0);  // order preserved
        if (line.find(",ok,") != std::string::npos) ++ok;
        if (line.find(",error,") != std::string::npos) ++errs;
        ++idx;
    }
    CHECK(ok == 2);
    CHECK(errs == 2);
    CHECK(idx == 4);

    // determinism: byte-identical rerun
    const Run r2 = cli({"batch", "--input", path, "--format", "csv"});
    CHECK(r2.out == r.out);
    std::remove(path.c_str());
}

TEST_CASE("cli batch: jsonl stream") {
    const std::string path = write_temp("batch.jsonl",
                                        "{\"kind\":\"lengths\",\"values\":[1,1,1,1,1,1]}\n"
                                        "{\"kind\":\"angles\",\"values\":[1.2,1.2,1.2,1.2,1.2,1.2]}\n"
                                        "{\"oops\":true}\n");
    const Run r = cli({"batch", "--input", path, "--format", "jsonl"});
    CHECK(r.code == 0);
    std::istringstream ss(r.out);
    std::string line;
    int n = 0;
    while (std::getline(ss, line)) {
        const json j = json::parse(line);
        CHECK(j.at("index") == n);
        if (n < 2) {
            CHECK(j.at("status") == "ok");
            CHECK(j.at("volume").get<double>() > 0.0);
        } else {
            CHECK(j.at("status") == "error");
            CHECK(j.at("code") == 2);
        }
        ++n;
    }
    CHECK(n == 3);
    std::remove(path.c_str());
}

TEST_CASE("cli batch: --output writes to a file") {
    const std::string in_path = write_temp("batch_out.csv",
                                           "kind,v1,v2,v3,v4,v5,v6\n"
                                           "lengths,1,1,1,1,1,1\n");
    const std::string out_path = "cli_test_batch_result.csv";
    const Run r = cli({"batch", "--input", in_path, "--format", "csv", "--output", out_path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out_path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "index,kind,status,volume,shape,error");
    std::string row;
    std::getline(f, row);
    CHECK(row.find(",ok,") != std::string::npos);
    f.close();
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
}

TEST_CASE("cli batch: empty input and missing file") {
    const std::string path = write_temp("empty.csv", "");
    const Run r = cli({"batch", "--input", path, "--format", "csv"});
    CHECK(r.code == 0);
    std::remove(path.c_str());
    CHECK(cli({"batch", "--input", "does_not_exist.csv", "--format", "csv"}).code == 2);
}
