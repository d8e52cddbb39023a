#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgx::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgx::cli
