#include "pfas/errors.hpp"

#include <cstdio>
#include <sstream>

namespace pfas {

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

namespace {

std::string unknown_process_message(const std::string& id, const std::vector<std::string>& known) {
  std::ostringstream os;
  os << "unknown process '" << id << "'; known processes:";
  for (const auto& k : known) os << ' ' << k;
  return os.str();
}

std::string violations_message(const std::vector<Violation>& vs) {
  std::ostringstream os;
  os << "stack validation failed with " << vs.size() << " violation" << (vs.size() == 1 ? "" : "s");
  for (const auto& v : vs) {
    os << "\n  [" << v.rule << "]";
    if (!v.layer.empty()) os << " layer " << v.layer << ":";
    os << ' ' << v.message;
  }
  return os.str();
}

}  // namespace

UnknownProcessError::UnknownProcessError(std::string id, std::vector<std::string> known)
    : PfasError(unknown_process_message(id, known)), id_(std::move(id)), known_(std::move(known)) {}

StackValidationError::StackValidationError(std::vector<Violation> violations)
    : PfasError(violations_message(violations)), violations_(std::move(violations)) {}

}  // namespace pfas
