#pragma once

#include <string>
#include <vector>

namespace dvis {

// Command dispatch. Exit codes: 0 success, 1 domain failure (for example a
// failed verification), 2 usage or parse error.
int dispatch(const std::vector<std::string>& args);

}  // namespace dvis
