#pragma once

#include <initializer_list>
#include <utility>

#include "oracles.hpp"

namespace testing_support {

using namespace qcat;

inline std::shared_ptr<const TableQuantaloid> boolq() {
  static const auto q = std::make_shared<const TableQuantaloid>(TableQuantaloid::boolean());
  return q;
}

inline std::shared_ptr<const TableQuantaloid> chainq(std::size_t n) {
  return std::make_shared<const TableQuantaloid>(TableQuantaloid::chain(n));
}

inline std::shared_ptr<const TableQuantaloid> splitq() {
  static const auto q = std::make_shared<const TableQuantaloid>(fixtures::split_quantaloid());
  return q;
}

/// Preorder on n elements a0.. generated by the pairs (i <= j).
inline CategoryPtr<TableQuantaloid> preorder(std::size_t n, std::initializer_list<std::pair<int, int>> below) {
  std::vector<Element> hom(n * n, Element{0});
  for (auto [i, j] : below) hom[i * n + j] = Element{1};
  return fixtures::close_category<TableQuantaloid>(boolq(), fixtures::labels(n), std::vector<QObject>(n, 0),
                                                   std::move(hom));
}

/// Metric-like Lawvere category from a distance table (not closed).
inline CategoryPtr<Lawvere> space(std::vector<std::string> names, std::vector<std::vector<Extended>> d) {
  std::vector<Extended> flat;
  for (auto& row : d)
    for (auto& v : row) flat.push_back(v);
  const auto n = names.size();
  return make_category<Lawvere>(lawvere(), std::move(names), std::vector<QObject>(n, 0), std::move(flat));
}

/// Every bool matrix between A and B that satisfies the distributor axioms.
inline std::vector<Distributor<TableQuantaloid>> all_bool_distributors(const CategoryPtr<TableQuantaloid>& A,
                                                                        const CategoryPtr<TableQuantaloid>& B) {
  std::vector<Distributor<TableQuantaloid>> out;
  const auto cells = A->size() * B->size();
  for (unsigned mask = 0; mask < (1u << cells); ++mask) {
    std::vector<Element> m;
    for (std::size_t i = 0; i < cells; ++i) m.push_back(Element{static_cast<std::uint16_t>(mask >> i & 1)});
    Distributor<TableQuantaloid> d(A, B, std::move(m));
    if (validate_distributor(d).ok()) out.push_back(std::move(d));
  }
  return out;
}

inline Element truth(bool b) { return Element{static_cast<std::uint16_t>(b)}; }

}  // namespace testing_support
