#include <cstdint>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "cli_io.hpp"
#include "commands.hpp"

using namespace projinv::cli;

int main(int argc, char** argv) {
    CLI::App app{"projinv: first-order joint projective invariants of planar point"
                 " configurations with gradient data"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "Evaluate the invariant signature of a configuration");
    eval->add_option("--config", eval_opt.config_path, "Configuration JSON file")->required();
    eval->add_option("--mode", eval_opt.mode, "Arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    eval->add_option("--out", eval_opt.out_path, "Output path (default: stdout)");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Machine-check the invariance laws on random input");
    verify->add_option("--n", verify_opt.n, "Number of points")
        ->required()
        ->check(CLI::Range(2, 1000));
    verify->add_option("--trials", verify_opt.trials, "Random trials per law")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    verify->add_option("--seed", verify_opt.seed, "Master seed")->envname("PROJINV_SEED");
    verify->add_option("--mode", verify_opt.mode, "Arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();

    RankOptions rank_opt;
    auto* rank = app.add_subcommand("rank", "Certify algebraic independence via exact Jacobian rank");
    auto* rank_n = rank->add_option("--n", rank_opt.n, "Number of points")->check(CLI::Range(2, 1000));
    rank->add_option("--seed", rank_opt.seed, "Master seed")->envname("PROJINV_SEED");
    rank->add_flag("--paper-witness", rank_opt.paper_witness,
                   "Use the built-in 7-point witness configuration");

    WeightsOptions weights_opt;
    auto* weights = app.add_subcommand("weights", "Solve the exponent system for a given weight");
    weights->add_option("--n", weights_opt.n, "Number of points")
        ->required()
        ->check(CLI::Range(3, 1000));
    weights->add_option("--omega", weights_opt.omega, "Target weight, e.g. -1 or -1/3")->required();

    DemoOptions demo_opt;
    auto* demo = app.add_subcommand("demo", "Signature stability report on a warped raster image");
    demo->add_option("--image", demo_opt.image_path, "Binary PGM (P5) image")->required();
    demo->add_option("--homography", demo_opt.homography_path, "Homography JSON file")->required();
    demo->add_option("--keypoints", demo_opt.keypoints_path, "Keypoints JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(eval_opt);
        if (*verify) return cmd_verify(verify_opt);
        if (*rank) {
            if (rank_opt.paper_witness) {
                if (rank_n->count() > 0 && rank_opt.n != 7) {
                    std::cerr << "rank: --paper-witness is a 7-point configuration\n";
                    return kExitUsage;
                }
                rank_opt.n = 7;
            } else if (rank_n->count() == 0) {
                std::cerr << "rank: --n is required without --paper-witness\n";
                return kExitUsage;
            }
            return cmd_rank(rank_opt);
        }
        if (*weights) return cmd_weights(weights_opt);
        if (*demo) return cmd_demo(demo_opt);
    } catch (const MalformedInput& e) {
        std::cerr << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitUsage;
}
