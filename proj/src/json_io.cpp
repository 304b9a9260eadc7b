#include "schurq/json_io.hpp"

#include <sstream>

namespace schurq {

json to_json(const Monomial& m) {
    json arr = json::array();
    for (auto& [k, e] : m.exponents()) arr.push_back(json::array({k, e}));
    return arr;
}

Monomial monomial_from_json(const json& j) {
    Monomial m;
    for (auto& pair : j) {
        m = m * Monomial::power(pair.at(0).get<int>(), pair.at(1).get<int>());
    }
    return m;
}

json to_json(const OddPoly& p) {
    json arr = json::array();
    for (auto& [m, c] : p.terms()) {
        arr.push_back({{"monomial", to_json(m)}, {"coeff", rational_str(c)}});
    }
    return arr;
}

OddPoly poly_from_json(const json& j) {
    OddPoly p;
    for (auto& term : j) {
        p.add_term(monomial_from_json(term.at("monomial")),
                   parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

json to_json(const QExpansion& e) {
    json arr = json::array();
    for (auto& [sp, c] : e.coeffs()) {
        arr.push_back({{"partition", sp.parts()}, {"coeff", rational_str(c)}});
    }
    return arr;
}

QExpansion qexpansion_from_json(const json& j) {
    QExpansion e;
    for (auto& term : j) {
        e.add_term(StrictPartition(term.at("partition").get<std::vector<int>>()),
                   parse_rational(term.at("coeff").get<std::string>()));
    }
    return e;
}

json to_json(const HbarSeries& s) {
    json arr = json::array();
    for (auto& [a, p] : s.slices()) {
        arr.push_back({{"hbar_order", a}, {"poly", to_json(p)}});
    }
    return arr;
}

HbarSeries hbar_series_from_json(const json& j, int truncation_degree) {
    HbarSeries s(truncation_degree);
    for (auto& entry : j) {
        s.set_slice(entry.at("hbar_order").get<int>(), poly_from_json(entry.at("poly")));
    }
    return s;
}

json to_json(const IdentityReport& r) {
    return {{"identity", r.identity},
            {"input", r.input},
            {"residual", rational_str(r.residual)},
            {"pass", r.pass}};
}

IntVector parse_int_vector(const std::string& text) {
    IntVector out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list: '" + text + "'");
        out.push_back(value);
    }
    return out;
}

}  // namespace schurq
