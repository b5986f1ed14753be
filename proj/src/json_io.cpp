#include "gca/json_io.hpp"

#include <sstream>

namespace gca {

Json to_json(const TrigPoly& p) {
    Json j;
    j["const"] = to_string(p.constant());
    Json cosv = Json::array(), sinv = Json::array();
    for (int k = 1; k <= p.degree(); ++k) {
        cosv.push_back(to_string(p.cos_coeff(k)));
        sinv.push_back(to_string(p.sin_coeff(k)));
    }
    j["cos"] = std::move(cosv);
    j["sin"] = std::move(sinv);
    return j;
}

TrigPoly trig_from_json(const Json& j) {
    TrigPoly p(parse_rational(j.value("const", "0")));
    if (j.contains("cos")) {
        int k = 1;
        for (const auto& v : j.at("cos")) p.set_cos(k++, parse_rational(v.get<std::string>()));
    }
    if (j.contains("sin")) {
        int k = 1;
        for (const auto& v : j.at("sin")) p.set_sin(k++, parse_rational(v.get<std::string>()));
    }
    return p;
}

Json to_json(const AlgebraElement& x) {
    Json j = Json::object();
    for (const auto& [g, c] : x.terms()) j[g.str()] = to_string(c);
    return j;
}

AlgebraElement element_from_json(const Json& j) {
    AlgebraElement x;
    for (auto it = j.begin(); it != j.end(); ++it) {
        x.add(GenLabel::parse(it.key()), parse_rational(it.value().get<std::string>()));
    }
    return x;
}

Json to_json(const DensityVector& gamma) {
    Json j;
    j["gamma0"] = to_json(gamma.gamma0);
    j["gamma1"] = to_json(gamma.gamma1);
    j["gamma2"] = to_json(gamma.gamma2);
    j["gamma3"] = to_json(gamma.gamma3);
    j["a"] = to_string(gamma.a);
    j["b"] = to_string(gamma.b);
    return j;
}

DensityVector density_from_json(const Json& j) {
    DensityVector g;
    if (j.contains("gamma0")) g.gamma0 = trig_from_json(j.at("gamma0"));
    if (j.contains("gamma1")) g.gamma1 = trig_from_json(j.at("gamma1"));
    if (j.contains("gamma2")) g.gamma2 = trig_from_json(j.at("gamma2"));
    if (j.contains("gamma3")) g.gamma3 = trig_from_json(j.at("gamma3"));
    g.a = parse_rational(j.value("a", "0"));
    g.b = parse_rational(j.value("b", "0"));
    return g;
}

Json to_json(const CurrentElement& x) {
    Json j;
    j["f0"] = to_json(x.f0);
    j["f1"] = to_json(x.f1);
    j["f2"] = to_json(x.f2);
    j["f3"] = to_json(x.f3);
    j["alpha"] = to_string(x.alpha);
    j["beta"] = to_string(x.beta);
    return j;
}

CurrentElement current_from_json(const Json& j) {
    CurrentElement x;
    if (j.contains("f0")) x.f0 = trig_from_json(j.at("f0"));
    if (j.contains("f1")) x.f1 = trig_from_json(j.at("f1"));
    if (j.contains("f2")) x.f2 = trig_from_json(j.at("f2"));
    if (j.contains("f3")) x.f3 = trig_from_json(j.at("f3"));
    x.alpha = parse_rational(j.value("alpha", "0"));
    x.beta = parse_rational(j.value("beta", "0"));
    return x;
}

GroupElement group_from_json(const Json& j, std::size_t check_grid) {
    TrigPoly p, xi, eta1, eta2;
    if (j.contains("p")) p = trig_from_json(j.at("p"));
    if (j.contains("xi")) xi = trig_from_json(j.at("xi"));
    if (j.contains("eta1")) eta1 = trig_from_json(j.at("eta1"));
    if (j.contains("eta2")) eta2 = trig_from_json(j.at("eta2"));
    return GroupElement::make(std::move(p), std::move(xi), std::move(eta1), std::move(eta2),
                              check_grid);
}

Json gram_to_json(int level, const std::vector<std::vector<WeightPolynomial>>& entries) {
    Json j;
    j["level"] = level;
    Json basis = Json::array();
    for (const auto& m : pbw_basis(level)) basis.push_back(m.str());
    j["basis"] = std::move(basis);
    Json rows = Json::array();
    for (const auto& row : entries) {
        Json cells = Json::array();
        for (const auto& e : row) cells.push_back(e.str());
        rows.push_back(std::move(cells));
    }
    j["entries"] = std::move(rows);
    return j;
}

Json gram_to_json(int level, const RationalMatrix& entries, const WeightPoint& point) {
    Json j;
    j["level"] = level;
    j["weights"] = weights_to_json(point);
    Json basis = Json::array();
    for (const auto& m : pbw_basis(level)) basis.push_back(m.str());
    j["basis"] = std::move(basis);
    Json rows = Json::array();
    for (const auto& row : entries) {
        Json cells = Json::array();
        for (const auto& e : row) cells.push_back(to_string(e));
        rows.push_back(std::move(cells));
    }
    j["entries"] = std::move(rows);
    return j;
}

std::string gram_to_csv(const RationalMatrix& entries) {
    std::ostringstream out;
    for (const auto& row : entries) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << to_string(row[i]);
        }
        out << "\n";
    }
    return out.str();
}

WeightPoint parse_weights(const std::string& spec) {
    WeightPoint w{};
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("weights: expected name=value, got \"" + item + "\"");
        }
        const std::string name = item.substr(0, eq);
        const Rational value = parse_rational(item.substr(eq + 1));
        bool found = false;
        for (std::size_t i = 0; i < kNumWeightSymbols; ++i) {
            if (name == weight_symbol_name(static_cast<WeightSymbol>(i))) {
                w[i] = value;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("weights: unknown symbol \"" + name + "\"");
    }
    return w;
}

Json weights_to_json(const WeightPoint& w) {
    Json j;
    for (std::size_t i = 0; i < kNumWeightSymbols; ++i) {
        j[weight_symbol_name(static_cast<WeightSymbol>(i))] = to_string(w[i]);
    }
    return j;
}

Json to_json(const KacPrediction& prediction) {
    Json j;
    j["level"] = prediction.level;
    j["power"] = prediction.power.str();
    j["paper_c"] = prediction.reference_constant
                       ? Json(to_string(*prediction.reference_constant))
                       : Json(nullptr);
    return j;
}

Json to_json(const KacReport& report) {
    Json j;
    j["level"] = report.level;
    j["power_formula"] = report.power.str();
    j["power_paper"] = report.level >= 1 && report.level <= 3
                           ? Json(std::vector<int>{2, 12, 48}[report.level - 1])
                           : Json(nullptr);
    j["K"] = to_string(report.constant);
    j["paper_c"] =
        report.reference_constant ? Json(to_string(*report.reference_constant)) : Json(nullptr);
    j["K_over_paper_c"] =
        report.constant_ratio ? Json(to_string(*report.constant_ratio)) : Json(nullptr);
    j["trials"] = report.trials.size();
    j["seed"] = report.seed;
    Json trials = Json::array();
    for (const auto& t : report.trials) {
        Json jt;
        jt["weights"] = weights_to_json(t.weights);
        jt["det"] = to_string(t.determinant);
        jt["quotient"] = to_string(t.quotient);
        trials.push_back(std::move(jt));
    }
    j["trial_results"] = std::move(trials);
    j["constant_across_trials"] = report.constant_across_trials;
    j["independent_of_other_weights"] = report.independent_of_other_weights;
    j["vanishes_at_zero_rho"] = report.vanishes_at_zero_rho;
    j["pass"] = report.pass;
    if (!report.failure.empty()) j["failure"] = report.failure;
    return j;
}

Json to_json(const CocycleReport& report) {
    Json j;
    j["window"] = report.window;
    j["dimension"] = report.dimension;
    j["solution_dimension"] = report.solution_dimension;
    j["coboundary_rank"] = report.coboundary_rank;
    j["coboundaries_are_cocycles"] = report.coboundaries_are_cocycles;
    Json reps = Json::array();
    for (const auto& rep : report.representatives) {
        Json entries = Json::array();
        for (const auto& e : rep) {
            Json je;
            je["pair"] = e.pair;
            je["mode"] = e.mode;
            je["value"] = to_string(e.value);
            entries.push_back(std::move(je));
        }
        reps.push_back(std::move(entries));
    }
    j["representatives"] = std::move(reps);
    j["exotic_possible"] = report.exotic_possible;
    return j;
}

Json to_json(const VfReport& report) {
    Json j;
    j["window"] = report.window;
    j["pairs_checked"] = report.pairs_checked;
    j["monomials_per_pair"] = report.monomials_per_pair;
    j["pass"] = report.pass;
    if (report.first_failure) {
        Json f;
        f["x"] = report.first_failure->x.str();
        f["y"] = report.first_failure->y.str();
        f["detail"] = report.first_failure->detail;
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

Json to_json(const IsotropyReport& report) {
    Json j;
    j["degree"] = report.degree;
    j["dimension"] = report.dimension;
    j["dimension_at_next_degree"] = report.dimension_next;
    j["truncation_unstable"] = report.truncation_unstable;
    Json basis = Json::array();
    for (const auto& x : report.basis) basis.push_back(to_json(x));
    j["basis"] = std::move(basis);
    return j;
}

Json to_json(const LinearizeReport& report) {
    Json j;
    j["eps"] = report.eps;
    j["deviation"] = report.deviation;
    j["ratios"] = report.ratios;
    j["noise_floor"] = report.noise_floor;
    j["ratios_ok"] = report.ratios_ok;
    j["limit_error"] = report.limit_error;
    j["limit_tol"] = report.limit_tol;
    j["limit_ok"] = report.limit_ok;
    return j;
}

Json to_json(const GridFunction& g) {
    Json j = Json::array();
    for (double v : g.samples) j.push_back(v);
    return j;
}

std::string grid_to_csv(const GridFunction& g) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t k = 0; k < g.size(); ++k) {
        out << g.theta(k) << "," << g.samples[k] << "\n";
    }
    return out.str();
}

Json to_json(const GridDensity& g) {
    Json j;
    j["gamma0"] = to_json(g.g0);
    j["gamma1"] = to_json(g.g1);
    j["gamma2"] = to_json(g.g2);
    j["gamma3"] = to_json(g.g3);
    j["a"] = to_string(g.a);
    j["b"] = to_string(g.b);
    return j;
}

}  // namespace gca
