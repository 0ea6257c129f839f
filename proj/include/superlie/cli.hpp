#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superlie::cli {

/// Dispatches a command line to the engine. Exit codes: 0 success/all-pass,
/// 1 verification found violations, 2 usage/parse/budget error. All output
/// is deterministic for fixed inputs.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace superlie::cli
