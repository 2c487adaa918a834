#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qcat/extended.hpp"
#include "qcat/quantaloid.hpp"

namespace qcat {

/// Lawvere's quantale of extended nonnegative rationals: one object, order
/// reversed (a <= b iff a >= b numerically), composition is addition,
/// identity 0. Joins are numeric infima, meets numeric suprema, so the bottom
/// is infinity and the top is 0.
class Lawvere {
 public:
  using value_type = Extended;
  static constexpr bool is_enumerable = false;

  static const std::string& name() {
    static const std::string n = "lawvere";
    return n;
  }

  std::size_t object_count() const noexcept { return 1; }
  std::string object_name(QObject) const { return "*"; }

  Extended identity(QObject) const { return Extended(); }
  Extended bottom(QObject, QObject) const { return Extended::infinity(); }
  Extended top(QObject, QObject) const { return Extended(); }

  bool leq(QObject, QObject, const Extended& a, const Extended& b) const { return a >= b; }
  Extended join(QObject, QObject, const Extended& a, const Extended& b) const { return a <= b ? a : b; }
  Extended meet(QObject, QObject, const Extended& a, const Extended& b) const { return a >= b ? a : b; }
  Extended compose(QObject, QObject, QObject, const Extended& g, const Extended& f) const { return g + f; }

  /// Smallest numeric x with g + x >= h.
  Extended lifting(QObject, QObject, QObject, const Extended& g, const Extended& h) const { return monus(h, g); }
  /// Smallest numeric x with x + f >= h.
  Extended extension(QObject, QObject, QObject, const Extended& f, const Extended& h) const { return monus(h, f); }

  friend bool operator==(const Lawvere&, const Lawvere&) { return true; }

  std::string format(QObject, QObject, const Extended& v) const { return v.str(); }
  Extended parse(QObject, QObject, std::string_view text) const { return Extended::parse(text); }
};

/// Shared instance; every Lawvere category may point here.
inline const std::shared_ptr<const Lawvere>& lawvere() {
  static const auto q = std::make_shared<const Lawvere>();
  return q;
}

static_assert(Quantaloid<Lawvere>);
static_assert(!EnumerableQuantaloid<Lawvere>);

}  // namespace qcat
