#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supertree::cli {

enum class OutputFormat { human, json, csv };

struct CliConfig {
    double tol = 1e-10;
    int max_iter = 100000;
    std::string method = "power";  // power | alpha | formula | auto
    OutputFormat output = OutputFormat::human;
    unsigned long long seed = 20140623ULL;
};

/// Exit status: 0 success, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supertree::cli
