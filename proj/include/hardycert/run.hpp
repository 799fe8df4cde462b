#pragma once

#include <string>

#include "hardycert/config.hpp"
#include "hardycert/report.hpp"
#include "hardycert/weights.hpp"

namespace hardy {

// "file:PATH" loads a one-column list; everything else goes to WeightSpec::parse
WeightSpec resolve_weight_spec(const std::string& text);

Report run_command(const RunConfig& cfg);

// serializes to cfg.out, or stdout when cfg.out is empty; a non-null captured
// diverts the text there instead.  Exit code: 0 clean, 1 when a certify-style
// assertion failed.
int execute(const RunConfig& cfg, std::string* captured = nullptr);

}  // namespace hardy
