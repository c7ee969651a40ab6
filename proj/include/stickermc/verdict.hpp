#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stickermc/ctl.hpp"
#include "stickermc/model.hpp"

namespace stickermc {

/// Model-checking answer with per-run evidence. per_run holds, for every
/// enumerated run, whether the run satisfies the *reduced obligation*;
/// for existential constructs the final answer is the inverted
/// conjunction, and the witness (present for universal-no and
/// existential-yes) is the first run refuting the obligation.
struct Verdict {
    bool yes = false;
    CtlConstruct construct;
    Reduction reduction;
    std::uint64_t bound = 0;
    std::size_t runs_checked = 0;
    std::vector<std::pair<RunPath, bool>> per_run;
    std::optional<RunPath> witness;
    bool run_cap_exceeded = false;
};

}  // namespace stickermc
