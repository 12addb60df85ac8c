#ifndef FCEXT_CHECKPOINT_HPP
#define FCEXT_CHECKPOINT_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "fcext/chainmap.hpp"
#include "fcext/resolution.hpp"

namespace fcext {

/* Everything that must agree between a checkpoint and a resuming run.
 * Thread count and degree caps are deliberately absent: they do not affect
 * results. */
struct RunStamp {
    std::string module_source;
    bool literal_step1 = false;
    bool triple_criterion = false;

    std::string hash() const;
};

struct CheckpointInfo {
    int format = 0;
    std::string config_hash;
    int t_done = -1;
    int s_max = 0;
    std::string module_source;
    bool literal_step1 = false;
    bool triple_criterion = false;

    RunStamp stamp() const { return RunStamp{module_source, literal_step1, triple_criterion}; }
};

namespace checkpoint {

bool exists(const std::filesystem::path& dir);
std::optional<CheckpointInfo> read_info(const std::filesystem::path& dir);

/* Write a complete snapshot; the manifest is renamed into place last so a
 * kill at any moment leaves the previous barrier intact. */
void save(const std::filesystem::path& dir, const Resolution& res, const RunStamp& stamp);

/* Load the snapshot the manifest names.  Throws on config-hash mismatch,
 * on s_max mismatch, and on corrupt files. */
Resolution load(const std::filesystem::path& dir, std::shared_ptr<const Algebra> alg, const RunStamp& stamp,
                int s_max, GroebnerOptions gb_opt);

void save_chainmaps(const std::filesystem::path& dir, int t_done, const std::vector<ChainMapBlob>& maps);
std::vector<ChainMapBlob> load_chainmaps(const std::filesystem::path& dir, int t_done, const Algebra& alg);

}  // namespace checkpoint

}  // namespace fcext

#endif
