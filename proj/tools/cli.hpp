#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace reesgb::cli {

/// Everything a run needs; identical configs (seed included) produce
/// byte-identical output.
struct RunConfig {
    std::string command;
    std::string graph_path;
    std::vector<std::string> order_specs;
    int samples = 25;
    unsigned long long seed = 0;
    int max_s = 3;
    bool rees = false;
    int power = 0;
    std::optional<std::pair<int, int>> window;
    std::string format = "text";
    int cap_edges = 24;
    int cap_vars = 12;
    bool full_audit = false;
    long long mod_p = 0;  // 0 = exact arithmetic
    int drop_ugb_index = -1;  // verify-only mutation hook for test harnesses
};

/// Exit codes: 0 all checks pass, 1 a mathematical check failed,
/// 2 input error, 3 size cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace reesgb::cli
