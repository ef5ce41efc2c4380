#ifndef BR_EXPERIMENTS_HPP
#define BR_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace br {

/// Command-line overrides applied on top of the JSON config.
struct RunOptions {
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    int threads = 0;  // 0 = leave the global setting alone
};

struct CommandResult {
    std::vector<std::string> artifacts;  // paths written, in write order
};

/// FNV-1a over the canonical dump of the effective config; stamped into
/// every JSON artifact for provenance.
std::string config_hash_hex(const std::string& canonical_config);

/// Injected in tests to bypass training and feed planted risk values to the
/// rate-study slope plumbing.
using RiskOracle =
    std::function<double(const std::string& method, std::size_t d, std::size_t n,
                         std::size_t seed_idx)>;

CommandResult cmd_train(const std::string& config_text, const RunOptions& opts);
CommandResult cmd_rate_study(const std::string& config_text, const RunOptions& opts,
                             const RiskOracle* oracle = nullptr);
CommandResult cmd_width_sweep(const std::string& config_text, const RunOptions& opts);
CommandResult cmd_init_sweep(const std::string& config_text, const RunOptions& opts);
CommandResult cmd_mnist_bench(const std::string& config_text, const RunOptions& opts);
CommandResult cmd_bound_report(const std::string& config_text, const RunOptions& opts);

/// Dispatch by subcommand name (train, rate-study, width-sweep, init-sweep,
/// mnist-bench, bound-report). Unknown names throw.
CommandResult run_command(const std::string& command, const std::string& config_text,
                          const RunOptions& opts);

}  // namespace br

#endif
