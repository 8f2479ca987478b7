#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/cli.hpp"

using casimir::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        result.push_back(line);
    }
    return result;
}

}  // namespace

TEST_CASE("number formatting keeps nine significant digits") {
    CHECK(casimir::cli::format_number(0.046685030312) == "0.0466850303");
    CHECK(casimir::cli::format_number(-0.0135943579) == "-0.0135943579");
    CHECK(casimir::cli::format_number(0.0) == "0");
}

TEST_CASE("sphere-energy json") {
    const auto r = invoke({"sphere-energy", "--format", "json"});
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(std::abs(doc["total"].get<double>() - 0.04668) < 5e-5);
    CHECK(doc["diameter_sum"].get<double>() == doctest::Approx(std::pow(std::numbers::pi, 3) / 1440.0).epsilon(1e-8));
    CHECK(doc["tail_error"].get<double>() <= 1e-5);
    CHECK(doc["explicit_terms"] == 50);
    CHECK(doc["richardson_order"] == 4);
    CHECK(doc["units"] == "hbar*c/R");
    CHECK(std::abs(doc["ratio_to_reference"].get<double>() - 1.011) < 0.002);
}

TEST_CASE("sphere-energy text and csv") {
    const auto text = invoke({"sphere-energy", "--format", "text"});
    CHECK(text.status == 0);
    CHECK(text.out.find("total = 0.0466850") != std::string::npos);
    const auto csv = invoke({"sphere-energy", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(lines(csv.out).front() == "key,value");
}

TEST_CASE("sphere-energy breakdown") {
    const auto r = invoke({"sphere-energy", "--breakdown", "--terms", "5"});
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "n,diameter_term,generic_term");
    CHECK(rows[2].rfind("2,", 0) == 0);
    CHECK(rows[2].find("0.00732421875") != std::string::npos);
}

TEST_CASE("cylinder-energy variants") {
    const auto q = invoke({"cylinder-energy", "--variant", "quadratic", "--format", "json"});
    REQUIRE(q.status == 0);
    const auto doc = json::parse(q.out);
    CHECK(std::abs(doc["total"].get<double>() + 0.0135940) < 1e-6);
    CHECK(doc["variant"] == "quadratic");
    CHECK(doc["units"] == "hbar*c*L/R^2");
    CHECK(doc["per_n_terms"].size() == 50);
    CHECK(std::abs(doc["diffractive_n1"].get<double>() + 0.0174077) < 1e-6);

    const auto e = json::parse(invoke({"cylinder-energy", "--variant", "expfit", "--format", "json"}).out);
    CHECK(std::abs(e["total"].get<double>() + 0.013533) < 1e-5);

    const auto u = json::parse(invoke({"cylinder-energy", "--variant", "unbounded", "--format", "json"}).out);
    CHECK(u["total"].get<double>() == 0.0);
    CHECK_FALSE(std::signbit(u["total"].get<double>()));
}

TEST_CASE("cylinder-energy breakdown") {
    const auto r = invoke({"cylinder-energy", "--breakdown"});
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 51);
    CHECK(rows[0] == "n,term,cumulative");
    CHECK(rows[1] == "1,-0.5,-0.5");
}

TEST_CASE("exact variant and unknown variant are usage errors") {
    CHECK(invoke({"cylinder-energy", "--variant", "exact"}).status == 2);
    CHECK(invoke({"cylinder-energy", "--variant", "cubic"}).status == 2);
}

TEST_CASE("wkb-zeros csv") {
    const auto r = invoke({"wkb-zeros", "--ell-max", "1", "--n-max", "1", "--bc", "both"});
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "ell,n,bc,x_wkb,x_exact,rel_error,flag");
    bool flagged = false;
    for (const auto& row : rows) {
        if (row.rfind("0,0,N,", 0) == 0) {
            flagged = row.find("anomaly") != std::string::npos;
        }
    }
    CHECK(flagged);
    CHECK(invoke({"wkb-zeros", "--ell-max", "21"}).status == 2);
    CHECK(invoke({"wkb-zeros", "--bc", "X"}).status == 2);
}

TEST_CASE("orbit-table") {
    const auto r = invoke({"orbit-table", "--n-max", "4"});
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "n,w,z_bar,length_over_R,maslov_D,maslov_N,em_contributes");
    CHECK(rows.size() == 5);
    const auto em = lines(invoke({"orbit-table", "--n-max", "4", "--em-only"}).out);
    CHECK(em.size() == 4);
}

TEST_CASE("alpha-integral") {
    const auto r = invoke({"alpha-integral", "--x", "0", "1", "30"});
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "x,exact,semiclassical,exp_fit");
    CHECK(rows[1] == "0,1,1,1");
    const auto grid = lines(invoke({"alpha-integral", "--x-max", "10", "--points", "11"}).out);
    CHECK(grid.size() == 12);
    CHECK(invoke({"alpha-integral", "--x", "45"}).status != 0);
}

TEST_CASE("convergence table") {
    const auto r = invoke({"convergence", "--geometry", "cylinder", "--terms", "20", "--richardson-order", "3"});
    REQUIRE(r.status == 0);
    const auto rows = lines(r.out);
    CHECK(rows[0] == "N,partial_sum,order_1,order_2,order_3,error_estimate");
    CHECK(invoke({"convergence", "--geometry", "torus"}).status == 2);
}

TEST_CASE("output is deterministic") {
    const auto a = invoke({"cylinder-energy", "--format", "json"});
    const auto b = invoke({"cylinder-energy", "--format", "json"});
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"--help"}).status == 0);
    CHECK(invoke({"sphere-energy", "--help"}).status == 0);
    CHECK(invoke({"no-such-command"}).status == 2);
    CHECK(invoke({"sphere-energy", "--terms", "abc"}).status == 2);
    CHECK(invoke({"sphere-energy", "--terms", "3", "--richardson-order", "4"}).status == 2);
    const auto tight = invoke({"sphere-energy", "--terms", "8", "--richardson-order", "1", "--tolerance", "1e-14"});
    CHECK(tight.status == 1);
    CHECK(tight.err.find("error:") != std::string::npos);
}

TEST_CASE("--out writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "casimir_cli_out_test.json";
    std::filesystem::remove(path);
    const auto r = invoke({"sphere-energy", "--format", "json", "--out", path.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto doc = json::parse(in);
    CHECK(std::abs(doc["total"].get<double>() - 0.04668) < 5e-5);
    std::filesystem::remove(path);
}

TEST_CASE("verify status matches its report") {
    const auto r = invoke({"verify"});
    const auto rows = lines(r.out);
    int pass = 0;
    int fail = 0;
    for (const auto& row : rows) {
        pass += row.rfind("[PASS]", 0) == 0;
        fail += row.rfind("[FAIL]", 0) == 0;
    }
    CHECK(pass + fail == 10);
    CHECK(r.status == (fail == 0 ? 0 : 1));
}
