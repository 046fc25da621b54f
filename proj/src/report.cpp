#include "hyperlab/report.hpp"

namespace hyperlab {

std::string Witness::to_string() const {
  std::string out;
  for (const auto& [name, value] : bindings) {
    if (!out.empty()) {
      out += ", ";
    }
    out += name + "=" + value;
  }
  if (!lhs.empty() || !rhs.empty()) {
    if (!out.empty()) {
      out += ", ";
    }
    out += "lhs=" + lhs + ", rhs=" + rhs;
  }
  return out;
}

}  // namespace hyperlab
