#include "cli_io.hpp"

#include <fstream>

namespace projinv::cli {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedInput("invalid JSON in '" + path + "': " + e.what());
    }
}

Rational scalar_exact(const json& v) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            throw MalformedInput(e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return Rational(v.get<double>());  // exact binary expansion
    throw MalformedInput("scalar must be a number or a \"num/den\" string");
}

double scalar_float(const json& v) {
    if (v.is_string()) return to_double(scalar_exact(v));
    if (v.is_number()) return v.get<double>();
    throw MalformedInput("scalar must be a number or a \"num/den\" string");
}

namespace {

template <class S, class Fn>
Configuration<S> parse_config(const json& j, Fn scalar) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw MalformedInput("config must be an object with a \"points\" array");
    Configuration<S> c;
    for (const json& pt : j["points"]) {
        if (!pt.is_object() || !pt.contains("x") || !pt.contains("y") || !pt.contains("p") ||
            !pt.contains("q"))
            throw MalformedInput("each point needs fields x, y, p, q");
        c.samples.push_back({scalar(pt["x"]), scalar(pt["y"]), scalar(pt["p"]), scalar(pt["q"])});
    }
    if (c.size() < 2) throw MalformedInput("configuration needs at least 2 points");
    return c;
}

template <class S, class Fn>
Homography<S> parse_homography(const json& j, Fn scalar) {
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array() ||
        j["matrix"].size() != 3)
        throw MalformedInput("homography must be an object with a 3x3 \"matrix\" array");
    std::array<Vec3<S>, 3> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        const json& row = j["matrix"][i];
        if (!row.is_array() || row.size() != 3) throw MalformedInput("matrix rows must have 3 entries");
        for (std::size_t k = 0; k < 3; ++k) rows[i][k] = scalar(row[k]);
    }
    try {
        return Homography<S>::from_rows(rows[0], rows[1], rows[2]);
    } catch (const SingularMatrixError&) {
        throw MalformedInput("homography matrix has zero determinant");
    }
}

}  // namespace

Configuration<Rational> parse_config_exact(const json& j) {
    return parse_config<Rational>(j, scalar_exact);
}
Configuration<double> parse_config_float(const json& j) {
    return parse_config<double>(j, scalar_float);
}
Homography<Rational> parse_homography_exact(const json& j) {
    return parse_homography<Rational>(j, scalar_exact);
}
Homography<double> parse_homography_float(const json& j) {
    return parse_homography<double>(j, scalar_float);
}

KeypointSet parse_keypoints(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw MalformedInput("keypoints must be an object with a \"points\" array");
    KeypointSet pts;
    for (const json& pt : j["points"]) {
        if (!pt.is_object() || !pt.contains("x") || !pt.contains("y"))
            throw MalformedInput("each keypoint needs fields x and y");
        pts.push_back({scalar_float(pt["x"]), scalar_float(pt["y"])});
    }
    return pts;
}

json descriptor_to_json(const InvariantDescriptor& d) {
    json indices = json::array();
    for (int a = 0; a < d.arity; ++a) indices.push_back(d.idx[a]);
    return json{{"name", d.name()}, {"indices", indices}};
}

json signature_to_json(const Signature<Rational>& sig) {
    json out = json::array();
    for (const auto& [d, v] : sig.entries) {
        json e = descriptor_to_json(d);
        e["value"] = rational_to_string(v);
        out.push_back(e);
    }
    return out;
}

json signature_to_json(const Signature<double>& sig) {
    json out = json::array();
    for (const auto& [d, v] : sig.entries) {
        json e = descriptor_to_json(d);
        e["value"] = v;
        out.push_back(e);
    }
    return out;
}

json report_to_json(const TrialReport& r) {
    json out{{"name", r.name},
             {"trials", r.trials},
             {"failures", r.failures},
             {"mode", r.exact_mode ? "exact" : "float"},
             {"redrawn", r.redrawn}};
    if (r.exact_mode)
        out["exact_pass"] = r.failures == 0;
    else
        out["worst_residual"] = r.worst_residual;
    out["failing_seeds"] = r.failing_seeds;
    return out;
}

json config_to_json(const Configuration<Rational>& c) {
    json pts = json::array();
    for (const auto& s : c.samples)
        pts.push_back(json{{"x", rational_to_string(s.x)},
                           {"y", rational_to_string(s.y)},
                           {"p", rational_to_string(s.p)},
                           {"q", rational_to_string(s.q)}});
    return json{{"points", pts}};
}

json certificate_to_json(const RankCertificate& c) {
    json attempts = json::array();
    for (const RankAttempt& a : c.attempts)
        attempts.push_back(json{{"seed", a.seed}, {"rank", a.rank}});
    return json{{"n", c.n},
                {"witness", c.witness},
                {"expected_rank", c.expected_rank},
                {"computed_rank", c.computed_rank},
                {"pivot_columns", c.pivot_columns},
                {"config", config_to_json(c.config)},
                {"attempts", attempts},
                {"passed", c.passed()}};
}

std::string triple_key(const Triple& t) {
    return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

json weight_solution_to_json(int n, const WeightSolution& sol, bool verified) {
    json exps = json::object();
    for (const auto& [t, v] : sol.exponents) {
        if (sol.integral)
            exps[triple_key(t)] = static_cast<long>(v.get_num().get_si());
        else
            exps[triple_key(t)] = rational_to_string(v);
    }
    return json{{"n", n},
                {"omega", rational_to_string(sol.omega)},
                {"feasible", sol.feasible},
                {"integral", sol.integral},
                {"exponents", exps},
                {"verified", verified}};
}

}  // namespace projinv::cli
