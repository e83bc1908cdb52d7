#pragma once

#include <stdexcept>
#include <string>

namespace svc {

// All recoverable failures throw Error. Pipeline stages prepend a stage tag
// ("separate: ...") so CLI diagnostics identify where a scene aborted.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace svc
