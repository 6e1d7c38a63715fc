#pragma once

#include <cstdint>
#include <string>

namespace projinv::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitNonGeneric = 2;
inline constexpr int kExitRankDeficient = 3;
inline constexpr int kExitUsage = 64;

struct EvalOptions {
    std::string config_path;
    std::string mode = "float";
    std::string out_path;  // empty: stdout
};

struct VerifyOptions {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 1;
    std::string mode = "exact";
};

struct RankOptions {
    int n = 0;  // 0: unset (allowed only with paper_witness, which implies 7)
    std::uint64_t seed = 1;
    bool paper_witness = false;
};

struct WeightsOptions {
    int n = 0;
    std::string omega;
};

struct DemoOptions {
    std::string image_path;
    std::string homography_path;
    std::string keypoints_path;
};

int cmd_eval(const EvalOptions& opt);
int cmd_verify(const VerifyOptions& opt);
int cmd_rank(const RankOptions& opt);
int cmd_weights(const WeightsOptions& opt);
int cmd_demo(const DemoOptions& opt);

}  // namespace projinv::cli
