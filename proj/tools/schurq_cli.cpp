#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "schurq/json_io.hpp"
#include "schurq/special_eval.hpp"
#include "schurq/virasoro.hpp"

using namespace schurq;

namespace {

struct Output {
    std::string path;  // empty: stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::map<int, Rational> parse_assignment(const std::string& text) {
    std::map<int, Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected k=value: '" + item + "'");
        out[std::stoi(item.substr(0, eq))] = parse_rational(item.substr(eq + 1));
    }
    return out;
}

int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schur Q-polynomial engine and tau-function verifier"};
    app.require_subcommand(1);

    std::string partition_arg, ks_arg, at_arg, identity_arg = "all", out_path;
    int degree = 12, m_index = -1, max_weight = 12, max_length = 5;
    int workers = default_workers();
    app.add_option("--out", out_path, "write JSON to this file instead of stdout");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "write JSON to this file instead of stdout");
        sub->add_option("--workers", workers, "worker pool width");
    };

    auto* qpoly = app.add_subcommand("qpoly", "Q-polynomial of an index vector");
    qpoly->add_option("--partition", partition_arg, "comma-separated parts")->required();
    add_common(qpoly);

    auto* eval = app.add_subcommand("eval", "evaluate a Q-polynomial at a point");
    eval->add_option("--partition", partition_arg)->required();
    eval->add_option("--at", at_arg, "assignment like 1=1,3=1/3 (others 0)");
    add_common(eval);

    auto* avalue = app.add_subcommand("avalue", "A-value (Q at t_k = delta_{k,3}/3)");
    avalue->add_option("--partition", partition_arg)->required();
    add_common(avalue);

    auto* taumm = app.add_subcommand("tau-mm", "Q-basis tau series");
    taumm->add_option("--degree", degree);
    add_common(taumm);

    auto* taukw = app.add_subcommand("tau-kw", "constraint-solved tau series");
    taukw->add_option("--degree", degree);
    add_common(taukw);

    auto* compare = app.add_subcommand("compare", "diff the two tau constructions");
    compare->add_option("--degree", degree);
    add_common(compare);

    auto* correlator = app.add_subcommand("correlator", "intersection number from log tau");
    correlator->add_option("--ks", ks_arg, "comma-separated indices")->required();
    correlator->add_option("--degree", degree);
    add_common(correlator);

    auto* vcheck = app.add_subcommand("virasoro-check", "constraint residual of the Q-basis tau");
    vcheck->add_option("--m", m_index, "Virasoro index >= -1");
    vcheck->add_option("--degree", degree);
    add_common(vcheck);

    auto* icheck = app.add_subcommand("identity-check", "run an identity family");
    icheck->add_option("--identity", identity_arg, "family name or 'all'");
    icheck->add_option("--max-weight", max_weight, "bound on total weight of inputs");
    icheck->add_option("--max-length", max_length, "bound on input length");
    add_common(icheck);

    auto* hcheck = app.add_subcommand("hyper-check", "diagonal-form coefficient checks");
    hcheck->add_option("--max-weight", max_weight);
    add_common(hcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    Output out{out_path};
    try {
        QEngine engine;
        if (app.got_subcommand(qpoly)) {
            IntVector v = parse_int_vector(partition_arg);
            json j{{"partition", v}, {"poly", to_json(engine.q_poly(v))}};
            out.write(dump(j));
            return 0;
        }
        if (app.got_subcommand(eval)) {
            IntVector v = parse_int_vector(partition_arg);
            Rational value = engine.q_poly(v).evaluate(parse_assignment(at_arg));
            out.write(dump(json{{"partition", v}, {"value", rational_str(value)}}));
            return 0;
        }
        if (app.got_subcommand(avalue)) {
            IntVector v = parse_int_vector(partition_arg);
            out.write(dump(json{{"partition", v}, {"value", rational_str(a_const(v))}}));
            return 0;
        }
        if (app.got_subcommand(taumm)) {
            auto tau = build_tau_mm(degree, engine, workers);
            out.write(dump(json{{"degree", degree}, {"series", to_json(tau.series)}}));
            return 0;
        }
        if (app.got_subcommand(taukw)) {
            auto tau = build_tau_kw(degree);
            out.write(dump(json{{"degree", degree}, {"series", to_json(tau.series)}}));
            return 0;
        }
        if (app.got_subcommand(compare)) {
            auto diffs = compare_tau(build_tau_mm(degree, engine, workers), build_tau_kw(degree),
                                     degree);
            json arr = json::array();
            for (auto& d : diffs) {
                arr.push_back({{"hbar_order", d.hbar_order},
                               {"monomial", to_json(d.monomial)},
                               {"tau_mm", rational_str(d.coeff_a)},
                               {"tau_kw", rational_str(d.coeff_b)}});
            }
            out.write(dump(json{{"degree", degree}, {"differences", arr}}));
            return diffs.empty() ? 0 : 1;
        }
        if (app.got_subcommand(correlator)) {
            std::vector<int> ks = parse_int_vector(ks_arg);
            auto tau = build_tau_kw(degree);
            auto c = extract_correlator(tau, ks);
            out.write(dump(json{{"ks", c.ks},
                                {"genus", c.genus},
                                {"dimension_ok", c.dimension_ok},
                                {"value", rational_str(c.value)}}));
            return 0;
        }
        if (app.got_subcommand(vcheck)) {
            auto tau = build_tau_mm(degree, engine, workers);
            auto res = constraint_residual(m_index, tau.series);
            json slices = json::array();
            for (int a : res.reliable_orders) {
                auto it = res.residual_slices.find(a);
                std::size_t nterms = it == res.residual_slices.end() ? 0 : it->second.term_count();
                slices.push_back({{"hbar_order", a}, {"residual_terms", nterms}});
            }
            out.write(dump(json{{"m", m_index},
                                {"degree", degree},
                                {"slices", slices},
                                {"pass", res.all_zero()}}));
            return res.all_zero() ? 0 : 1;
        }
        if (app.got_subcommand(icheck)) {
            SuiteConfig cfg;
            cfg.max_part = max_weight;  // parts are bounded by the weight bound anyway
            cfg.max_weight = max_weight;
            cfg.max_length = max_length;
            cfg.workers = workers;
            auto reports = run_identity_suite(identity_arg, cfg);
            std::string lines;
            bool pass = true;
            for (auto& r : reports) {
                lines += to_json(r).dump() + "\n";
                pass = pass && r.pass;
            }
            out.write(lines);
            return pass ? 0 : 1;
        }
        if (app.got_subcommand(hcheck)) {
            const HbarScalar one{1, 0}, minus16{rational(-1, 16), 1};
            json arr = json::array();
            bool pass = true;
            for (auto& sp : enumerate_strict(max_weight)) {
                for (auto [c1, c2] : {std::make_pair(one, minus16), std::make_pair(minus16, one)}) {
                    auto check = hypergeometric_check(sp, c1, c2);
                    bool ok = check.theta_eta_residual == 0 && check.diagonal_residual == 0;
                    pass = pass && ok;
                    arr.push_back({{"partition", sp.parts()},
                                   {"contributing", check.contributing},
                                   {"theta_eta_residual", rational_str(check.theta_eta_residual)},
                                   {"diagonal_residual", rational_str(check.diagonal_residual)},
                                   {"pass", ok}});
                }
            }
            out.write(dump(json{{"max_weight", max_weight}, {"checks", arr}, {"pass", pass}}));
            return pass ? 0 : 1;
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
