#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include <projinv/imaging.hpp>
#include <projinv/invariants.hpp>
#include <projinv/verification.hpp>
#include <projinv/weights.hpp>

namespace projinv::cli {

using nlohmann::json;

/// Input file failed schema or value validation (CLI exit code 1).
class MalformedInput : public std::runtime_error {
public:
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

json load_json_file(const std::string& path);

/// Scalars in files are JSON numbers or exact "num/den" strings.
Rational scalar_exact(const json& v);
double scalar_float(const json& v);

Configuration<Rational> parse_config_exact(const json& j);
Configuration<double> parse_config_float(const json& j);
Homography<Rational> parse_homography_exact(const json& j);
Homography<double> parse_homography_float(const json& j);
KeypointSet parse_keypoints(const json& j);

json descriptor_to_json(const InvariantDescriptor& d);
json signature_to_json(const Signature<Rational>& sig);
json signature_to_json(const Signature<double>& sig);
json report_to_json(const TrialReport& r);
json certificate_to_json(const RankCertificate& c);
json config_to_json(const Configuration<Rational>& c);

/// Triple key "i,j,k" (1-based), unambiguous for n >= 10.
std::string triple_key(const Triple& t);
json weight_solution_to_json(int n, const WeightSolution& sol, bool verified);

}  // namespace projinv::cli
