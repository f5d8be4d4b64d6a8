// Batch front end: one verification suite per subcommand, JSON report on
// stdout (or --output). Exit 0 all checks pass, 1 a check failed, 2 bad or
// gated parameters.

#include "yh/fusion/fusion.hpp"
#include "yh/kernel/relations.hpp"
#include "yh/kernel/serialize.hpp"
#include "yh/kernel/tower.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace yh;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int r = 1, n = 2, d = 1;
    std::string q = "2", v = "1";
    std::uint64_t seed = 1;
    int samples = 100;
    std::string output, a_path, b_path;
};

constexpr std::uint64_t kSizeLimit = 50000;

std::uint64_t algebra_dim(int r, int d, int n) {
    std::uint64_t x = 1;
    for (int k = 1; k <= n; ++k) {
        x *= static_cast<std::uint64_t>(r * d) * static_cast<std::uint64_t>(k);
        if (x > kSizeLimit) return x;
    }
    return x;
}

std::vector<Scalar> parse_v(const std::string& s) {
    std::vector<Scalar> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.emplace_back(BigRational::parse(item));
    return out;
}

AlgebraPtr build(const Config& c, int n) {
    if (c.r < 1 || c.d < 1 || n < 1) throw UsageError("r, d, n must be positive");
    std::uint64_t dim = algebra_dim(c.r, c.d, n);
    if (dim > kSizeLimit) throw UsageError("(rd)^n n! exceeds " + std::to_string(kSizeLimit));
    Scalar q, zero;
    std::vector<Scalar> v;
    try {
        q = Scalar(BigRational::parse(c.q));
        v = parse_v(c.v);
    } catch (const std::exception& e) {
        throw UsageError(std::string("q and v must be exact rationals: ") + e.what());
    }
    try {
        return Algebra::create(c.r, n, c.d, q, v);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Json checks_json(const std::vector<CheckResult>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) {
        Json j{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.passed) j["witness"] = clip(c.witness, 2000);
        out.push_back(j);
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

struct Outcome {
    std::vector<CheckResult> checks;
    Json extra = Json::object();
};

Outcome run_command(const std::string& cmd, const Config& c) {
    Outcome o;
    if (cmd == "relations") {
        auto Y = build(c, c.n);
        o.checks = relation_checks(*Y);
    } else if (cmd == "basis") {
        auto Y = build(c, c.n);
        o.checks = basis_checks(*Y, c.seed, c.samples);
        o.extra["dimension"] = Y->dim();
    } else if (cmd == "tower") {
        auto S = build(c, c.n);
        auto B = build(c, c.n + 1);
        Tower T(S, B);
        o.checks = tower_checks(T, c.seed, c.samples);
        o.extra["rank"] = T.rank();
    } else if (cmd == "frobenius") {
        auto Y = build(c, c.n);
        Matrix G = frobenius_gram(Y->r(), Y->n(), Y->d(), Y->q(), Y->v());
        Scalar det = determinant(G);
        CheckBuilder b("theta-pairing Gram matrix is nonsingular");
        b.expect(!det.is_zero(), "determinant is zero");
        o.checks = {b.result()};
        o.extra["size"] = G.size();
        o.extra["determinant"] = det.str();
    } else if (cmd == "tableaux") {
        if (c.r < 1 || c.d < 1 || c.n < 0) throw UsageError("r, d must be positive and n nonnegative");
        Json shapes = Json::array();
        std::uint64_t sq = 0;
        for (const auto& lam : enumerate_rd_partitions(c.r, c.d, c.n)) {
            Json tabs = Json::array();
            auto st = standard_tableaux(lam);
            for (const auto& t : st) tabs.push_back(t.str());
            sq += st.size() * st.size();
            shapes.push_back({{"shape", lam.str()}, {"standard", tabs}});
        }
        o.extra["shapes"] = shapes;
        CheckBuilder b("sum of |Std|^2 equals (rd)^n n!");
        b.expect(sq == tower_expected_rank(c.r, c.d, c.n), std::to_string(sq));
        o.checks = {b.result()};
    } else if (cmd == "cellular") {
        CellularBasis C(build(c, c.n));
        o.checks = verify_cellularity(C);
        o.extra["size"] = C.size();
    } else if (cmd == "jm") {
        CellularBasis C(build(c, c.n));
        o.checks = verify_jm(C);
    } else if (cmd == "idempotents") {
        auto Y = build(c, c.n);
        require_semisimple(*Y);
        CellularBasis C(Y);
        SeminormalDatum S = seminormal_basis(C);
        o.checks = verify_seminormal(C, S, c.seed);
        Json g = Json::array();
        for (std::size_t a = 0; a < C.shapes().size(); ++a)
            for (std::size_t t = 0; t < C.tableaux(a).size(); ++t) g.push_back({{"tableau", C.tableaux(a)[t].str()}, {"gamma", S.gamma[a][t].str()}});
        o.extra["gamma"] = g;
    } else if (cmd == "fusion") {
        auto Y = build(c, c.n);
        o.checks = verify_fusion(*Y, c.n);
    } else if (cmd == "example-paper") {
        auto Y = build(c, c.n);
        if (Y->r() != 2 || Y->d() != 2 || Y->n() != 4) throw UsageError("example-paper needs r = d = 2, n = 4");
        ExampleReport rep = worked_example(*Y);
        o.checks = rep.checks;
        o.extra["tableau"] = worked_example_tableau().str();
        o.extra["prefactor"] = rep.fusion.prefactor.str();
        o.extra["expected_prefactor"] = worked_example_prefactor(*Y).str();
        o.extra["trace"] = rep.fusion.trace();
    } else if (cmd == "mul") {
        auto Y = build(c, c.n);
        if (c.a_path.empty() || c.b_path.empty()) throw UsageError("mul needs --a and --b");
        Element a = element_from_json(read_json_file(c.a_path), *Y);
        Element b = element_from_json(read_json_file(c.b_path), *Y);
        o.extra["product"] = element_to_json(a * b, *Y);
    } else {
        throw UsageError("unknown command " + cmd);
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the cyclotomic Yokonuma-Hecke algebra Y_{r,n}^d"};
    app.require_subcommand(1, 1);
    Config c;
    app.add_option("--r", c.r, "order of the framing generators")->capture_default_str();
    app.add_option("--n", c.n, "number of strands")->capture_default_str();
    app.add_option("--d", c.d, "degree of the cyclotomic relation")->capture_default_str();
    app.add_option("--q", c.q, "q as an exact rational, e.g. 3/2")->capture_default_str();
    app.add_option("--v", c.v, "v_1,...,v_d as exact rationals")->capture_default_str();
    app.add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
    app.add_option("--samples", c.samples, "sample count for randomized checks")->capture_default_str();
    app.add_option("--output,-o", c.output, "write the report here instead of stdout");
    for (const char* name : {"relations", "basis", "tower", "frobenius", "tableaux", "cellular", "jm", "idempotents", "fusion", "example-paper"})
        app.add_subcommand(name);
    auto* mul = app.add_subcommand("mul", "product of two elements in JSON form");
    mul->add_option("--a", c.a_path, "left factor")->required();
    mul->add_option("--b", c.b_path, "right factor")->required();
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();

    Json report{{"command", cmd},
                {"params", {{"r", c.r}, {"n", c.n}, {"d", c.d}, {"q", c.q}, {"v", c.v}, {"seed", c.seed}}},
                {"checks", Json::array()}};
    int rc = 0;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Outcome o = run_command(cmd, c);
        report["checks"] = checks_json(o.checks);
        for (auto& [k, val] : o.extra.items()) report[k] = val;
        rc = all_passed(o.checks) ? 0 : 1;
    } catch (const GateError& e) {
        report["error"] = std::string("gated: ") + e.what();
        rc = 2;
    } catch (const UsageError& e) {
        report["error"] = e.what();
        rc = 2;
    } catch (const SchemaError& e) {
        report["error"] = std::string("schema: ") + e.what();
        rc = 2;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        rc = 1;
    }
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};

    std::string text = report.dump(2);
    if (c.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(c.output);
        if (!out) {
            std::cerr << "cannot write " << c.output << "\n";
            return 2;
        }
        out << text << "\n";
    }
    if (rc != 0 && report.contains("error")) std::cerr << report["error"].get<std::string>() << "\n";
    return rc;
}
