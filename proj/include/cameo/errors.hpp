#pragma once

#include <stdexcept>

namespace cameo {

// Thrown when a per-call work budget (node expansions, memory guard) is
// exceeded. Distinct from std::domain_error so the CLI can map it to its
// own exit code.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace cameo
