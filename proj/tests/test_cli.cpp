#include "yh/kernel/serialize.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

using namespace yh;

namespace {

AlgebraPtr make(int r, int n, int d) {
    std::vector<Scalar> v = d == 1 ? std::vector<Scalar>{Scalar(1)} : std::vector<Scalar>{Scalar(1), Scalar(5)};
    return Algebra::create(r, n, d, Scalar(2), v);
}

Element random_element(const Algebra& Y, std::size_t terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(Y.dim() - 1));
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    std::set<std::uint32_t> used;
    Element x = Y.zero();
    while (used.size() < terms) {
        std::uint32_t i = idx(rng);
        if (!used.insert(i).second) continue;
        int a = num(rng);
        if (a == 0) a = 1;
        Scalar c = Scalar(BigRational(a, den(rng)));
        if (Y.r() > 2) c += Scalar(BigRational(num(rng), den(rng))) * CyclotomicScalar::zeta_power(Y.r(), 2);
        x += c * Y.basis(i);
    }
    return x;
}

std::string bin() {
    const char* b = std::getenv("YOKONUMA_BIN");
    return b ? b : "";
}

struct CliRun {
    int code;
    Json report;
};

CliRun run(const std::string& args) {
    auto dir = std::filesystem::temp_directory_path();
    std::string out = (dir / ("yk_report_" + std::to_string(std::random_device{}()) + ".json")).string();
    std::string cmd = bin() + " " + args + " --output " + out + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    CliRun r{WIFEXITED(st) ? WEXITSTATUS(st) : -1, Json()};
    std::ifstream in(out);
    if (in) r.report = Json::parse(in);
    std::filesystem::remove(out);
    return r;
}

std::string write_temp(const Json& j, const std::string& name) {
    std::string p = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(p) << j.dump();
    return p;
}

}  // namespace

TEST(ElementIO, IdentityRoundTrip) {
    auto Y = make(2, 2, 2);
    Json j = element_to_json(Y->one(), *Y);
    EXPECT_EQ(element_from_json(j, *Y), Y->one());
    EXPECT_EQ(j["terms"].size(), 1u);
}

TEST(ElementIO, RandomFiftyTermRoundTrip) {
    for (int r : {2, 3}) {
        auto Y = make(r, 3, 2);
        Element x = random_element(*Y, 50, 17);
        ASSERT_EQ(x.size(), 50u);
        Json j = element_to_json(x, *Y);
        EXPECT_EQ(element_from_json(Json::parse(j.dump()), *Y), x);
        // canonical order on output
        Json again = element_to_json(element_from_json(j, *Y), *Y);
        EXPECT_EQ(again, j);
    }
}

TEST(ElementIO, SchemaErrors) {
    auto Y = make(2, 2, 2);
    Json j = element_to_json(Y->X(1), *Y);
    Json bad = j;
    bad["terms"][0]["alpha"][0] = 2;  // alpha_i >= d
    try {
        element_from_json(bad, *Y);
        FAIL() << "expected a schema error";
    } catch (const SchemaError& e) {
        EXPECT_EQ(e.path, "$.terms[0].alpha[0]");
    }
    bad = j;
    bad["terms"][0]["w"] = {1, 1};
    EXPECT_THROW(element_from_json(bad, *Y), SchemaError);
    bad = j;
    bad["d"] = 3;
    EXPECT_THROW(element_from_json(bad, *Y), SchemaError);
    bad = j;
    bad["terms"][0]["coeff"] = "1/0";
    EXPECT_THROW(element_from_json(bad, *Y), SchemaError);
    EXPECT_THROW(element_from_json(Json::array(), *Y), SchemaError);
}

TEST(ElementIO, DuplicateTermsAreSummed) {
    auto Y = make(1, 2, 1);
    Json j = element_to_json(Y->g(1), *Y);
    j["terms"].push_back(j["terms"][0]);
    EXPECT_EQ(element_from_json(j, *Y), Scalar(2) * Y->g(1));
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        if (bin().empty()) GTEST_SKIP() << "YOKONUMA_BIN not set";
    }
};

TEST_F(Cli, RelationsPass) {
    CliRun r = run("--r 2 --n 2 --d 2 --q 2 --v 1,5 relations");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report["command"], "relations");
    ASSERT_FALSE(r.report["checks"].empty());
    for (const auto& c : r.report["checks"]) EXPECT_EQ(c["status"], "pass");
    EXPECT_TRUE(r.report["timing"].contains("seconds"));
}

TEST_F(Cli, GatedIdempotents) {
    CliRun r = run("--r 2 --n 2 --d 2 --q 2 --v 1,4 idempotents");
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.report.contains("error"));
    EXPECT_EQ(run("--r 2 --n 2 --d 2 --q 2 --v 1,4 fusion").code, 2);
}

TEST_F(Cli, SemisimpleIdempotents) { EXPECT_EQ(run("--r 2 --n 2 --d 2 --q 2 --v 1,5 idempotents").code, 0); }

TEST_F(Cli, ExamplePaper) {
    CliRun r = run("--r 2 --n 4 --d 2 --q 2 --v 1,5 example-paper");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report["prefactor"], "-1/380");
    EXPECT_EQ(r.report["prefactor"], r.report["expected_prefactor"]);
    EXPECT_EQ(r.report["trace"].size(), 4u);
    EXPECT_EQ(run("--r 2 --n 3 --d 2 --q 2 --v 1,5 example-paper").code, 2);
}

TEST_F(Cli, BadParameters) {
    EXPECT_EQ(run("--r 2 --n 6 --d 2 --q 2 --v 1,5 cellular").code, 2);  // size guard
    EXPECT_EQ(run("--q 1.5 relations").code, 2);
    EXPECT_EQ(run("--d 2 --v 1 relations").code, 2);
    EXPECT_EQ(run("--q 0 relations").code, 2);
    EXPECT_EQ(run("nonsense").code, 2);
}

TEST_F(Cli, Multiply) {
    auto Y = make(2, 2, 2);
    std::string a = write_temp(element_to_json(Y->g(1) + Y->X(2), *Y), "yk_a.json");
    std::string b = write_temp(element_to_json(Y->t(1) * Y->g(1), *Y), "yk_b.json");
    CliRun r = run("--r 2 --n 2 --d 2 --q 2 --v 1,5 mul --a " + a + " --b " + b);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(element_from_json(r.report["product"], *Y), (Y->g(1) + Y->X(2)) * (Y->t(1) * Y->g(1)));
    Json bad = element_to_json(Y->X(1), *Y);
    bad["terms"][0]["alpha"][0] = 5;
    std::string c = write_temp(bad, "yk_c.json");
    CliRun rb = run("--r 2 --n 2 --d 2 --q 2 --v 1,5 mul --a " + c + " --b " + b);
    EXPECT_EQ(rb.code, 2);
    EXPECT_NE(rb.report["error"].get<std::string>().find("alpha"), std::string::npos);
}

TEST_F(Cli, DeterministicForFixedSeed) {
    CliRun a = run("--r 2 --n 2 --d 2 --v 1,5 --seed 9 basis"), b = run("--r 2 --n 2 --d 2 --v 1,5 --seed 9 basis");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.report["checks"], b.report["checks"]);
}

TEST_F(Cli, Tableaux) {
    CliRun r = run("--r 2 --n 2 --d 1 tableaux");
    EXPECT_EQ(r.code, 0);
    std::size_t count = 0;
    for (const auto& s : r.report["shapes"]) count += s["standard"].size();
    EXPECT_EQ(count, 6u);
}
