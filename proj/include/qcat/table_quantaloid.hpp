#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/lattice.hpp"
#include "qcat/quantaloid.hpp"

namespace qcat {

/// A quantaloid given by explicit finite tables: one sup-lattice per hom, one
/// composition table per composable triple, one identity per object.
///
/// The constructor checks only the shape of the tables; call
/// validate_quantaloid() before trusting user-supplied algebra. Residuation
/// tables are precomputed, so a constructed value is immutable and can be read
/// concurrently.
class TableQuantaloid {
 public:
  using value_type = Element;
  static constexpr bool is_enumerable = true;

  /// `homs[x * n + y]` is hom(x, y); `compose[(x * n + y) * n + z]` holds, at
  /// index g * |hom(x,y)| + f, the composite g o f of f : x -> y, g : y -> z.
  TableQuantaloid(std::vector<std::string> objects, std::vector<SupLattice> homs,
                  std::vector<std::vector<Element>> compose, std::vector<Element> identities, std::string name = {})
      : objects_(std::move(objects)),
        homs_(std::move(homs)),
        compose_(std::move(compose)),
        identities_(std::move(identities)),
        name_(std::move(name)) {
    const auto n = objects_.size();
    if (homs_.size() != n * n) throw Error("table quantaloid: need one hom per ordered pair of objects");
    if (compose_.size() != n * n * n) throw Error("table quantaloid: need one composition table per triple");
    if (identities_.size() != n) throw Error("table quantaloid: need one identity per object");
    for (QObject x = 0; x < n; ++x) {
      if (!hom(x, x).contains(identities_[x])) throw ElementNotInLattice("identity outside hom");
      for (QObject y = 0; y < n; ++y)
        for (QObject z = 0; z < n; ++z) {
          const auto& t = compose_[triple(x, y, z)];
          if (t.size() != hom(x, y).size() * hom(y, z).size())
            throw Error("table quantaloid: composition table " + object_name(x) + "|" + object_name(y) + "|" +
                        object_name(z) + " has wrong size");
          for (auto e : t)
            if (!hom(x, z).contains(e)) throw ElementNotInLattice("composite outside hom");
        }
    }
    elements_.reserve(n * n);
    for (const auto& h : homs_) elements_.push_back(h.elements());
    precompute_residuals();
  }

  /// The two-element quantale {false < true} with conjunction.
  static TableQuantaloid boolean() {
    auto two = SupLattice::chain({"false", "true"});
    const Element f{0}, t{1};
    return TableQuantaloid({"*"}, {two}, {{f, f, f, t}}, {t}, "bool");
  }

  /// The n-element chain 0 < 1 < ... < n-1 with composition min and identity top.
  static TableQuantaloid chain(std::size_t n) {
    if (n < 1 || n > 255) throw Error("chain quantale needs 1..255 elements");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    auto lattice = SupLattice::chain(names);
    std::vector<Element> table(n * n);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t f = 0; f < n; ++f) table[g * n + f] = Element{static_cast<std::uint16_t>(std::min(g, f))};
    return TableQuantaloid({"*"}, {lattice}, {table}, {Element{static_cast<std::uint16_t>(n - 1)}},
                           "chain:" + std::to_string(n));
  }

  /// Builtin name ("bool", "chain:n") or empty for user tables.
  const std::string& name() const noexcept { return name_; }

  std::size_t object_count() const noexcept { return objects_.size(); }
  const std::string& object_name(QObject x) const { return objects_.at(x); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  std::optional<QObject> find_object(std::string_view id) const {
    for (QObject x = 0; x < objects_.size(); ++x)
      if (objects_[x] == id) return x;
    return std::nullopt;
  }

  const SupLattice& hom(QObject x, QObject y) const { return homs_.at(x * objects_.size() + y); }
  std::span<const Element> elements(QObject x, QObject y) const { return elements_[x * objects_.size() + y]; }

  Element identity(QObject x) const { return identities_.at(x); }
  Element bottom(QObject x, QObject y) const { return hom(x, y).bottom(); }
  Element top(QObject x, QObject y) const { return hom(x, y).top(); }
  bool leq(QObject x, QObject y, Element a, Element b) const { return hom(x, y).leq(a, b); }
  Element join(QObject x, QObject y, Element a, Element b) const { return hom(x, y).join(a, b); }
  Element meet(QObject x, QObject y, Element a, Element b) const { return hom(x, y).meet(a, b); }

  Element compose(QObject x, QObject y, QObject z, Element g, Element f) const {
    return compose_[triple(x, y, z)][g.index * hom(x, y).size() + f.index];
  }
  Element lifting(QObject a, QObject b, QObject c, Element g, Element h) const {
    return lifting_[triple(a, b, c)][g.index * hom(a, c).size() + h.index];
  }
  Element extension(QObject a, QObject b, QObject c, Element f, Element h) const {
    return extension_[triple(a, b, c)][f.index * hom(a, c).size() + h.index];
  }

  std::string format(QObject x, QObject y, Element v) const { return hom(x, y).name(v); }
  Element parse(QObject x, QObject y, std::string_view text) const { return hom(x, y).element(text); }

  /// Same objects, homs, composition and identities; the name is ignored.
  friend bool operator==(const TableQuantaloid& a, const TableQuantaloid& b) {
    return a.objects_ == b.objects_ && a.homs_ == b.homs_ && a.compose_ == b.compose_ &&
           a.identities_ == b.identities_;
  }

  /// Raw composition table for triple (x, y, z); see the constructor.
  const std::vector<Element>& compose_table(QObject x, QObject y, QObject z) const { return compose_[triple(x, y, z)]; }

 private:
  std::size_t triple(QObject x, QObject y, QObject z) const {
    const auto n = objects_.size();
    return (x * n + y) * n + z;
  }

  // [g, h] = join{x : g o x <= h} and {f, h} = join{x : x o f <= h}.
  void precompute_residuals() {
    const auto n = objects_.size();
    lifting_.resize(n * n * n);
    extension_.resize(n * n * n);
    for (QObject a = 0; a < n; ++a)
      for (QObject b = 0; b < n; ++b)
        for (QObject c = 0; c < n; ++c) {
          const auto& ab = hom(a, b);
          const auto& bc = hom(b, c);
          const auto& ac = hom(a, c);
          auto& lift = lifting_[triple(a, b, c)];
          lift.resize(bc.size() * ac.size());
          for (auto g : elements(b, c))
            for (auto h : elements(a, c)) {
              Element acc = ab.bottom();
              for (auto x : elements(a, b))
                if (ac.leq(compose(a, b, c, g, x), h)) acc = ab.join(acc, x);
              lift[g.index * ac.size() + h.index] = acc;
            }
          auto& ext = extension_[triple(a, b, c)];
          ext.resize(ab.size() * ac.size());
          for (auto f : elements(a, b))
            for (auto h : elements(a, c)) {
              Element acc = bc.bottom();
              for (auto x : elements(b, c))
                if (ac.leq(compose(a, b, c, x, f), h)) acc = bc.join(acc, x);
              ext[f.index * ac.size() + h.index] = acc;
            }
        }
  }

  std::vector<std::string> objects_;
  std::vector<SupLattice> homs_;
  std::vector<std::vector<Element>> compose_;
  std::vector<Element> identities_;
  std::string name_;
  std::vector<std::vector<Element>> elements_;
  std::vector<std::vector<Element>> lifting_, extension_;
};

static_assert(EnumerableQuantaloid<TableQuantaloid>);

}  // namespace qcat
