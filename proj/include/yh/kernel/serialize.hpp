#pragma once
// JSON form of scalars and elements. Reading validates every field and
// reports the JSON path of the first problem.

#include "yh/kernel/algebra.hpp"

#include "json.hpp"

namespace yh {

using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string p, const std::string& msg) : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

inline Json scalar_to_json(const Scalar& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.den_str() == "1" ? c.num_str() : c.num_str() + "/" + c.den_str());
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline Scalar scalar_from_json(const Json& j, const std::string& path = "$") {
    if (j.is_number_integer()) return Scalar(BigRational(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Scalar(BigRational::parse(j.get<std::string>()));
        } catch (const std::exception& e) {
            throw SchemaError(path, std::string("bad rational: ") + e.what());
        }
    }
    if (!j.is_object()) throw SchemaError(path, "scalar must be an object {order, coeffs}");
    if (!j.contains("order") || !j["order"].is_number_integer()) throw SchemaError(path + ".order", "missing integer");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw SchemaError(path + ".coeffs", "missing array");
    int order = j["order"].get<int>();
    if (order < 1) throw SchemaError(path + ".order", "must be positive");
    const Json& cs = j["coeffs"];
    if (static_cast<int>(cs.size()) != euler_phi(order))
        throw SchemaError(path + ".coeffs", "length must be phi(order) = " + std::to_string(euler_phi(order)));
    CyclotomicScalar::Coeffs c;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        std::string p = path + ".coeffs[" + std::to_string(k) + "]";
        if (cs[k].is_number_integer()) {
            c.emplace_back(cs[k].get<std::int64_t>());
        } else if (cs[k].is_string()) {
            try {
                c.push_back(BigRational::parse(cs[k].get<std::string>()));
            } catch (const std::exception& e) {
                throw SchemaError(p, std::string("bad rational: ") + e.what());
            }
        } else {
            throw SchemaError(p, "coefficient must be a \"num/den\" string");
        }
    }
    return CyclotomicScalar(order, c);
}

inline Json element_to_json(const Element& x, const Algebra& Y) {
    Json terms = Json::array();
    for (const auto& [idx, c] : x.terms()) {
        Word w = Y.word(idx);
        std::vector<int> im;
        for (int i = 1; i <= Y.n(); ++i) im.push_back(w.w(i));
        terms.push_back(Json{{"alpha", w.alpha}, {"beta", w.beta}, {"w", im}, {"coeff", scalar_to_json(c)}});
    }
    return Json{{"r", Y.r()}, {"n", Y.n()}, {"d", Y.d()}, {"terms", terms}};
}

inline Element element_from_json(const Json& j, const Algebra& Y) {
    if (!j.is_object()) throw SchemaError("$", "element must be an object");
    for (const char* key : {"r", "n", "d"}) {
        if (!j.contains(key) || !j[key].is_number_integer()) throw SchemaError(std::string("$.") + key, "missing integer");
    }
    if (j["r"].get<int>() != Y.r() || j["n"].get<int>() != Y.n() || j["d"].get<int>() != Y.d())
        throw SchemaError("$", "r, n, d do not match the algebra");
    if (!j.contains("terms") || !j["terms"].is_array()) throw SchemaError("$.terms", "missing array");
    Accumulator acc(Y.dim());
    const Json& ts = j["terms"];
    for (std::size_t k = 0; k < ts.size(); ++k) {
        std::string p = "$.terms[" + std::to_string(k) + "]";
        const Json& t = ts[k];
        if (!t.is_object()) throw SchemaError(p, "term must be an object");
        auto ints = [&](const char* key, int lo, int hi) {
            std::string kp = p + "." + key;
            if (!t.contains(key) || !t[key].is_array()) throw SchemaError(kp, "missing array");
            if (static_cast<int>(t[key].size()) != Y.n()) throw SchemaError(kp, "length must be n = " + std::to_string(Y.n()));
            std::vector<int> v;
            for (std::size_t i = 0; i < t[key].size(); ++i) {
                const Json& e = t[key][i];
                std::string ep = kp + "[" + std::to_string(i) + "]";
                if (!e.is_number_integer()) throw SchemaError(ep, "must be an integer");
                int x = e.get<int>();
                if (x < lo || x > hi) throw SchemaError(ep, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
                v.push_back(x);
            }
            return v;
        };
        Word w;
        w.alpha = ints("alpha", 0, Y.d() - 1);
        w.beta = ints("beta", 0, Y.r() - 1);
        std::vector<int> im = ints("w", 1, Y.n());
        try {
            w.w = Permutation(im);
        } catch (const std::exception&) {
            throw SchemaError(p + ".w", "not a permutation");
        }
        if (!t.contains("coeff")) throw SchemaError(p + ".coeff", "missing");
        Scalar c = scalar_from_json(t["coeff"], p + ".coeff");
        try {
            acc.add(Y.index(w), c);
        } catch (const ArithmeticError& e) {
            throw SchemaError(p + ".coeff", e.what());
        }
    }
    return Y.make(acc.take());
}

}  // namespace yh
