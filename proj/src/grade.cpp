#include "hyperlab/grade.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hyperlab {

Grade::Grade(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw std::invalid_argument("grade denominator must be positive, got " +
                                std::to_string(den));
  }
  if (num < 0 || num > den) {
    throw std::invalid_argument("grade " + std::to_string(num) + "/" +
                                std::to_string(den) + " lies outside [0,1]");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Grade::to_string() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Grade Grade::parse(const std::string& text) {
  std::size_t pos = 0;
  std::int64_t num = 0;
  std::int64_t den = 1;
  try {
    num = std::stoll(text, &pos);
    if (pos < text.size()) {
      if (text[pos] != '/') {
        throw std::invalid_argument("");
      }
      std::size_t den_pos = 0;
      den = std::stoll(text.substr(pos + 1), &den_pos);
      if (pos + 1 + den_pos != text.size()) {
        throw std::invalid_argument("");
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse grade '" + text +
                                "' (expected \"p\" or \"p/q\")");
  }
  return Grade(num, den);
}

std::ostream& operator<<(std::ostream& os, const Grade& g) {
  return os << g.to_string();
}

}  // namespace hyperlab
