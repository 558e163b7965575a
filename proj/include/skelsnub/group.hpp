#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"

namespace skelsnub {

struct GeneratorTriple {
  Isometry s1, s2, s0;
};

inline bool consistent(const GeneratorTriple& g, double tol = 1e-12) {
  return approx_equal(compose(g.s1, g.s2), g.s0, tol);
}

inline GeneratorTriple dual_generators(const GeneratorTriple& g) {
  return {inverse(g.s2), inverse(g.s1), g.s0};
}

class FiniteGroup {
 public:
  static FiniteGroup close(const GeneratorTriple& gens, std::size_t cap = 10000) {
    FiniteGroup g;
    g.build({gens.s1, gens.s2}, cap);
    g.s1_ = g.index_of(gens.s1);
    g.s2_ = g.index_of(gens.s2);
    g.s0_ = g.index_of(gens.s0);
    return g;
  }

  static FiniteGroup generated_by(const std::vector<Isometry>& gens, std::size_t cap = 10000) {
    FiniteGroup g;
    g.build(gens, cap);
    return g;
  }

  // elements must already form a group
  static FiniteGroup from_elements(const std::vector<Isometry>& elems) {
    FiniteGroup g;
    g.add(Isometry::identity());
    for (const auto& e : elems)
      if (!g.index_of(e)) g.add(e);
    g.build_table();
    return g;
  }

  std::size_t size() const { return elements_.size(); }
  const Isometry& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Isometry>& elements() const { return elements_; }
  std::size_t product(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  std::size_t inverse_of(std::size_t i) const { return inverses_[i]; }

  std::optional<std::size_t> index_of(const Isometry& iso) const {
    return index_.find_if(apply(iso, probe()), [&](std::size_t i) { return approx_equal(elements_[i], iso); });
  }

  std::optional<std::size_t> s1() const { return s1_; }
  std::optional<std::size_t> s2() const { return s2_; }
  std::optional<std::size_t> s0() const { return s0_; }

  std::vector<std::size_t> cyclic_subgroup(std::size_t i) const {
    std::vector<std::size_t> out{0};
    std::size_t cur = i;
    while (cur != 0) {
      out.push_back(cur);
      cur = product(i, cur);
    }
    return out;
  }

  std::size_t order_of(std::size_t i) const { return cyclic_subgroup(i).size(); }

 private:
  // generic point; distinct group elements move it to distinct places
  static Vector3 probe() { return {0.3183098861837907, 0.5772156649015329, 0.7071067811865476}; }

  void add(const Isometry& iso) {
    elements_.push_back(iso);
    index_.push(apply(iso, probe()));
  }

  void build(const std::vector<Isometry>& gens, std::size_t cap) {
    add(Isometry::identity());
    std::queue<std::size_t> work;
    work.push(0);
    while (!work.empty()) {
      std::size_t cur = work.front();
      work.pop();
      for (const auto& g : gens) {
        Isometry next = compose(g, elements_[cur]);
        if (index_of(next)) continue;
        if (elements_.size() >= cap)
          throw Error(ErrorCode::GroupTooLarge, "closure exceeded " + std::to_string(cap) + " elements");
        add(next);
        work.push(elements_.size() - 1);
      }
    }
    build_table();
  }

  void build_table() {
    const std::size_t n = size();
    table_.assign(n * n, 0);
    inverses_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto k = index_of(compose(elements_[i], elements_[j]));
        if (!k) throw Error(ErrorCode::PreconditionViolated, "element set is not closed under composition");
        table_[i * n + j] = *k;
        if (*k == 0) inverses_[i] = j;
      }
  }

  std::vector<Isometry> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
  PointIndex index_{1e-7};
  std::optional<std::size_t> s1_, s2_, s0_;
};

inline std::vector<std::size_t> stabilizer(const FiniteGroup& g, Vector3 v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (fixes(g.element(i), v)) out.push_back(i);
  return out;
}

inline std::vector<Vector3> orbit(const FiniteGroup& g, Vector3 v) {
  PointIndex idx;
  for (const auto& e : g.elements()) idx.insert(apply(e, v));
  return idx.points();
}

inline bool satisfies_ipc(const FiniteGroup& g, Vector3 v) { return stabilizer(g, v).size() == 1; }

struct TypeSet {
  std::array<bool, 3> members{};

  bool contains(int i) const { return members[static_cast<std::size_t>(i)]; }
  std::vector<int> list() const {
    std::vector<int> out;
    for (int i = 0; i < 3; ++i)
      if (members[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
  }
  std::string str() const {
    std::string s = "{";
    for (int i : list()) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
  }
  bool operator==(const TypeSet&) const = default;
};

inline TypeSet type_set(const GeneratorTriple& gens, Vector3 v) {
  bool f0 = fixes(gens.s0, v), f1 = fixes(gens.s1, v), f2 = fixes(gens.s2, v);
  int count = f0 + f1 + f2;
  if (count == 3) throw Error(ErrorCode::CenterPoint, "point is fixed by every generator");
  if (count == 2) throw Error(ErrorCode::InconsistentFixedPoint, "point is fixed by exactly two generators");
  if (f0) return {{false, true, true}};
  if (f1) return {{false, false, true}};
  if (f2) return {{false, true, false}};
  return {{true, true, true}};
}

}  // namespace skelsnub
