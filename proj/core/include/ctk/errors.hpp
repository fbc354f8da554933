#pragma once

#include <stdexcept>
#include <string>

namespace ctk {

/// Two independent evaluation routes disagreed (e.g. the symbolic and
/// the sampled answer of a containment question). Always a bug, never
/// a user error; the CLI maps it to its own exit code.
class internal_consistency_error : public std::logic_error {
 public:
  explicit internal_consistency_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace ctk
