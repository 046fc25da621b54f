#ifndef HYPERLAB_GRADE_HPP
#define HYPERLAB_GRADE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hyperlab {

/// An exact rational truth value in [0,1].
///
/// Grades form the bounded distributive lattice ([0,1] cap Q, max, min).
/// Values are kept in canonical reduced form: gcd(num, den) == 1, den >= 1,
/// so 0 is 0/1 and 1 is 1/1, and equality is plain field equality.
class Grade {
public:
  constexpr Grade() = default;

  /// Builds num/den, reducing to canonical form.
  /// Throws std::invalid_argument unless 0 <= num <= den and den > 0.
  Grade(std::int64_t num, std::int64_t den);

  static constexpr Grade zero() { return Grade{}; }
  static constexpr Grade one() {
    Grade g;
    g.num_ = 1;
    return g;
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const Grade& a, const Grade& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Grade& a, const Grade& b) { return !(a == b); }
  friend bool operator<(const Grade& a, const Grade& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Grade& a, const Grade& b) { return b < a; }
  friend bool operator<=(const Grade& a, const Grade& b) { return !(b < a); }
  friend bool operator>=(const Grade& a, const Grade& b) { return !(a < b); }

  /// "0", "1" or "p/q".
  std::string to_string() const;

  /// Parses the to_string format. Throws std::invalid_argument on bad input.
  static Grade parse(const std::string& text);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Grade meet(const Grade& a, const Grade& b) { return a <= b ? a : b; }
inline Grade join(const Grade& a, const Grade& b) { return a <= b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Grade& g);

}  // namespace hyperlab

#endif  // HYPERLAB_GRADE_HPP
