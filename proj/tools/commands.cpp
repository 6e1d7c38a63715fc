#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>

#include "cli_io.hpp"

namespace projinv::cli {

namespace {

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
}

std::string zn_weight_string(int n) {
    return rational_to_string(zn_exponents(n).omega);
}

template <class S>
json eval_payload(const Configuration<S>& c) {
    const int n = c.size();
    json out;
    out["n"] = n;
    out["generators"] = signature_to_json(evaluate(c, generating_set(n)));
    if (n >= 3) {
        try {
            S z = z_invariant(c);
            if constexpr (scalar_traits<S>::is_exact)
                out["zn"] = rational_to_string(z);
            else
                out["zn"] = z;
        } catch (const SingularConfiguration&) {
            out["zn"] = "singular";
        }
        out["zn_weight"] = zn_weight_string(n);
    } else {
        out["zn"] = nullptr;
        out["zn_weight"] = nullptr;
    }
    return out;
}

double rel_dev(double a, double b) {
    const double diff = std::fabs(a - b);
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale > 0.0 ? diff / scale : diff;
}

}  // namespace

int cmd_eval(const EvalOptions& opt) {
    try {
        const json j = load_json_file(opt.config_path);
        json out;
        std::vector<std::string> violations;
        if (opt.mode == "exact") {
            Configuration<Rational> c = parse_config_exact(j);
            violations = genericity_violations(c);
            if (violations.empty()) out = eval_payload(c);
        } else {
            Configuration<double> c = parse_config_float(j);
            violations = genericity_violations(c);
            if (violations.empty()) out = eval_payload(c);
        }
        if (!violations.empty()) {
            for (const std::string& v : violations) std::cerr << "non-generic: " << v << "\n";
            return kExitNonGeneric;
        }
        emit(out, opt.out_path);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return kExitMalformed;
    }
}

int cmd_verify(const VerifyOptions& opt) {
    const ArithmeticMode mode =
        opt.mode == "exact" ? ArithmeticMode::Exact : ArithmeticMode::Float;
    int failures = 0;
    auto print = [&failures](const TrialReport& r) {
        failures += r.failures;
        std::cout << report_to_json(r).dump() << "\n";
    };
    for (const TrialReport& r : check_absolute(opt.n, opt.trials, opt.seed, mode)) print(r);
    if (opt.n >= 3) print(check_zn_weight(opt.n, opt.trials, opt.seed, mode));
    print(prolongation_consistency(opt.trials, opt.seed));
    return failures == 0 ? kExitOk : kExitMalformed;
}

int cmd_rank(const RankOptions& opt) {
    RankCertificate cert;
    if (opt.paper_witness)
        cert = rank_certificate_at(witness_config7(), true);
    else
        cert = invariant_jacobian_rank(opt.n, opt.seed);
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return cert.passed() ? kExitOk : kExitRankDeficient;
}

int cmd_weights(const WeightsOptions& opt) {
    Rational omega;
    try {
        omega = parse_rational(opt.omega);
    } catch (const std::exception& e) {
        std::cerr << "weights: " << e.what() << "\n";
        return kExitUsage;
    }
    const WeightSolution sol = solve_weight_system(opt.n, omega);
    if (!sol.feasible) {
        std::cout << weight_solution_to_json(opt.n, sol, false).dump(2) << "\n";
        return kExitMalformed;
    }
    const bool verified = verify_weight_solution(opt.n, sol);
    std::cout << weight_solution_to_json(opt.n, sol, verified).dump(2) << "\n";
    return kExitOk;
}

int cmd_demo(const DemoOptions& opt) {
    try {
        const RasterField original = load_pgm_file(opt.image_path);
        const Homography<double> h = parse_homography_float(load_json_file(opt.homography_path));
        const KeypointSet pts = parse_keypoints(load_json_file(opt.keypoints_path));
        if (pts.size() < 2) throw MalformedInput("need at least 2 keypoints");

        KeypointSet warped_pts;
        warped_pts.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto [wx, wy] = apply_point(h, pts[i].x, pts[i].y);
            warped_pts.push_back({wx, wy});
        }
        const RasterField warped = warp_raster(h, original);

        // Domain checks happen inside sample_config; OutOfDomain names the index.
        const Signature<double> before = signature_extract(original, pts);
        const Signature<double> after = signature_extract(warped, warped_pts);

        json gens = json::array();
        double max_dev = 0.0, sum_dev = 0.0;
        for (std::size_t i = 0; i < before.entries.size(); ++i) {
            const auto& [d, a] = before.entries[i];
            const double b = after.entries[i].second;
            const double dev = rel_dev(a, b);
            max_dev = std::max(max_dev, dev);
            sum_dev += dev;
            json e = descriptor_to_json(d);
            e["original"] = a;
            e["warped"] = b;
            e["relative_deviation"] = dev;
            gens.push_back(e);
        }
        json out{{"n", static_cast<int>(pts.size())},
                 {"generators", gens},
                 {"summary",
                  json{{"max_relative_deviation", max_dev},
                       {"mean_relative_deviation", sum_dev / static_cast<double>(gens.size())}}}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "demo: " << e.what() << "\n";
        return kExitMalformed;
    }
}

}  // namespace projinv::cli
