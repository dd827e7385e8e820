#pragma once

// Brute-force recomputation engines: definitional H/Q/R, orbit closure,
// conjugacy partitions, and small-group isomorphism search.
//
// Nothing in this header knows a closed formula. Everything is derived from
// group multiplication, inversion, and pointwise application of a supplied
// map, so these routines can stand as independent cross-checks for the
// formula paths elsewhere in the library.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dicyclic/group.hpp"
#include "dicyclic/table_automorphism.hpp"

namespace dicyclic {

using ElementMap = std::function<Element(const Element&)>;

// { g : phi(g) = g }
inline ElementSet definitional_H(GroupParams params, const ElementMap& phi) {
  ElementSet out;
  for (const auto& g : enumerate_group(params)) {
    if (phi(g) == g) out.push_back(g);
  }
  return out;
}

// { g phi(g)^-1 : g in G }
inline ElementSet definitional_Q(GroupParams params, const ElementMap& phi) {
  ElementSet out;
  for (const auto& g : enumerate_group(params)) {
    out.push_back(multiply(g, inverse(phi(g))));
  }
  canonicalize_set(out);
  return out;
}

// { g : phi(g) = g^-1 }
inline ElementSet definitional_R(GroupParams params, const ElementMap& phi) {
  ElementSet out;
  for (const auto& g : enumerate_group(params)) {
    if (phi(g) == inverse(g)) out.push_back(g);
  }
  return out;
}

class closure_violation : public std::runtime_error {
 public:
  closure_violation(const Element& actor, const Element& point)
      : std::runtime_error("action leaves the carrier: actor " + element_name(actor) +
                           " applied to " + element_name(point)),
        actor_name(element_name(actor)),
        point_name(element_name(point)) {}
  std::string actor_name;
  std::string point_name;
};

// A finite action to be closed: actors from `generators` act on points of
// `carrier` through `act`. The action must stay inside the carrier.
struct ActionClosureProblem {
  std::vector<Element> carrier;
  std::vector<Element> generators;
  std::function<Element(const Element& actor, const Element& point)> act;
};

// Least act-closed subset of the carrier containing seed. Breadth-first with
// canonical visitation order, so the result is deterministic.
inline ElementSet orbit_closure(const ActionClosureProblem& problem, const Element& seed) {
  ElementSet carrier = problem.carrier;
  canonicalize_set(carrier);
  if (!set_contains(carrier, seed)) {
    throw std::invalid_argument("orbit seed " + element_name(seed) + " is not in the carrier");
  }
  ElementSet orbit{seed};
  std::vector<Element> frontier{seed};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& point : frontier) {
      for (const auto& actor : problem.generators) {
        Element moved = problem.act(actor, point);
        if (!set_contains(carrier, moved)) throw closure_violation(actor, point);
        if (!set_contains(orbit, moved)) {
          orbit.push_back(moved);
          canonicalize_set(orbit);
          next.push_back(moved);
        }
      }
    }
    frontier = std::move(next);
  }
  return orbit;
}

// Partition of the whole carrier into orbits, seeded in canonical order.
inline std::vector<ElementSet> orbit_partition(const ActionClosureProblem& problem) {
  ElementSet carrier = problem.carrier;
  canonicalize_set(carrier);
  std::vector<ElementSet> orbits;
  ElementSet covered;
  for (const auto& seed : carrier) {
    if (set_contains(covered, seed)) continue;
    ElementSet orbit = orbit_closure(problem, seed);
    for (const auto& g : orbit) covered.push_back(g);
    canonicalize_set(covered);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Smallest subgroup of Dc_n containing the given elements.
inline ElementSet subgroup_closure(GroupParams params, const std::vector<Element>& generators) {
  ElementSet span{identity(params)};
  std::vector<Element> frontier{identity(params)};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& g : frontier) {
      for (const auto& gen : generators) {
        for (const Element& product : {multiply(g, gen), multiply(gen, g)}) {
          if (!set_contains(span, product)) {
            span.push_back(product);
            canonicalize_set(span);
            next.push_back(product);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return span;
}

// Greedy generating set for a subgroup given by its full element list.
inline std::vector<Element> generating_set(GroupParams params, const ElementSet& subgroup) {
  std::vector<Element> gens;
  ElementSet span{identity(params)};
  for (const auto& g : subgroup) {
    if (!set_contains(span, g)) {
      gens.push_back(g);
      span = subgroup_closure(params, gens);
    }
  }
  return gens;
}

// Conjugacy classes of a finite group given by its table.
inline std::vector<std::vector<int>> conjugacy_classes(const GroupTable& table) {
  const int m = table.order;
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) inv[i] = table_inverse(table, i);
  std::vector<char> covered(m, 0);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < m; ++i) {
    if (covered[i]) continue;
    std::vector<char> in_class(m, 0);
    for (int s = 0; s < m; ++s) in_class[table.at(table.at(s, i), inv[s])] = 1;
    std::vector<int> cls;
    for (int j = 0; j < m; ++j) {
      if (in_class[j]) {
        cls.push_back(j);
        covered[j] = 1;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Builds a table over a list of automorphisms under composition. Throws if
// the list is not composition-closed (i.e. not a group).
inline GroupTable table_from_automorphisms(const std::vector<TableAutomorphism>& autos) {
  const int m = static_cast<int>(autos.size());
  if (m == 0) throw std::invalid_argument("empty automorphism list");
  GroupTable table;
  table.order = m;
  table.identity_index = -1;
  for (int i = 0; i < m; ++i) {
    table.elements.push_back("aut" + std::to_string(i));
    if (is_identity(autos[i])) table.identity_index = i;
  }
  if (table.identity_index < 0) {
    throw std::invalid_argument("automorphism list does not contain the identity");
  }
  table.product.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      TableAutomorphism prod = compose(autos[i], autos[j]);
      int index = -1;
      for (int k = 0; k < m; ++k) {
        if (autos[k] == prod) {
          index = k;
          break;
        }
      }
      if (index < 0) {
        throw std::invalid_argument("automorphism list is not closed under composition (at " +
                                    std::to_string(i) + " o " + std::to_string(j) + ")");
      }
      table.product[static_cast<size_t>(i) * m + j] = index;
    }
  }
  return table;
}

// Conjugacy partition of a composition-closed automorphism list; indices
// refer to positions in the input list.
inline std::vector<std::vector<int>> aut_conjugacy_classes(
    const std::vector<TableAutomorphism>& autos) {
  return conjugacy_classes(table_from_automorphisms(autos));
}

namespace detail {

// Extends a partial generator-image assignment to the multiplicative span,
// failing on any inconsistency. img is the partial map (-1 = unset).
inline bool close_partial_map(const GroupTable& g1, const GroupTable& g2, std::vector<int>& img,
                              std::vector<int>& defined) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p < defined.size(); ++p) {
      for (size_t q = 0; q < defined.size(); ++q) {
        int u = defined[p];
        int v = defined[q];
        int w = g1.at(u, v);
        int w_img = g2.at(img[u], img[v]);
        if (img[w] == -1) {
          img[w] = w_img;
          defined.push_back(w);
          changed = true;
        } else if (img[w] != w_img) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool extend_isomorphism(const GroupTable& g1, const GroupTable& g2,
                               const std::vector<int>& gens, size_t gen_pos,
                               const std::vector<int>& orders1, const std::vector<int>& orders2,
                               std::vector<int>& img, std::vector<int>& defined) {
  if (gen_pos == gens.size()) {
    std::vector<char> used(g2.order, 0);
    for (int v : img) {
      if (v < 0 || used[v]) return false;
      used[v] = 1;
    }
    return true;
  }
  const int gen = gens[gen_pos];
  for (int candidate = 0; candidate < g2.order; ++candidate) {
    if (orders2[candidate] != orders1[gen]) continue;
    std::vector<int> img_copy = img;
    std::vector<int> defined_copy = defined;
    if (img_copy[gen] == -1) {
      img_copy[gen] = candidate;
      defined_copy.push_back(gen);
    } else if (img_copy[gen] != candidate) {
      continue;
    }
    if (close_partial_map(g1, g2, img_copy, defined_copy) &&
        extend_isomorphism(g1, g2, gens, gen_pos + 1, orders1, orders2, img_copy, defined_copy)) {
      img = img_copy;
      defined = defined_copy;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Backtracking isomorphism search over generator images, pruned by element
// order. Returns an index map g1 -> g2 that is a verified bijective
// homomorphism, or nullopt.
inline std::optional<std::vector<int>> isomorphism_search(const GroupTable& g1,
                                                          const GroupTable& g2) {
  if (g1.order != g2.order) return std::nullopt;
  const int m = g1.order;
  std::vector<int> orders1(m), orders2(m);
  for (int i = 0; i < m; ++i) {
    orders1[i] = table_element_order(g1, i);
    orders2[i] = table_element_order(g2, i);
  }
  std::vector<int> profile1 = orders1, profile2 = orders2;
  std::sort(profile1.begin(), profile1.end());
  std::sort(profile2.begin(), profile2.end());
  if (profile1 != profile2) return std::nullopt;

  // Greedy generating sequence for g1.
  std::vector<int> gens;
  std::vector<char> in_span(m, 0);
  in_span[g1.identity_index] = 1;
  int span_size = 1;
  for (int i = 0; i < m && span_size < m; ++i) {
    if (in_span[i]) continue;
    gens.push_back(i);
    // Regenerate the span from scratch.
    std::fill(in_span.begin(), in_span.end(), 0);
    in_span[g1.identity_index] = 1;
    std::vector<int> frontier{g1.identity_index};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int u : frontier) {
        for (int gen : gens) {
          for (int w : {g1.at(u, gen), g1.at(gen, u)}) {
            if (!in_span[w]) {
              in_span[w] = 1;
              next.push_back(w);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    span_size = static_cast<int>(std::count(in_span.begin(), in_span.end(), 1));
  }

  std::vector<int> img(m, -1);
  img[g1.identity_index] = g2.identity_index;
  std::vector<int> defined{g1.identity_index};
  if (!detail::extend_isomorphism(g1, g2, gens, 0, orders1, orders2, img, defined)) {
    return std::nullopt;
  }
  // Verify before returning.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (img[g1.at(i, j)] != g2.at(img[i], img[j])) {
        throw consistency_error("isomorphism search returned a non-homomorphism");
      }
    }
  }
  return img;
}

// Reference tables for the small-group comparisons.

inline GroupTable cyclic_group_table(int m) {
  GroupTable table;
  table.order = m;
  table.identity_index = 0;
  for (int i = 0; i < m; ++i) table.elements.push_back("g^" + std::to_string(i));
  table.product.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) table.product[static_cast<size_t>(i) * m + j] = (i + j) % m;
  }
  return table;
}

inline GroupTable klein_four_table() {
  GroupTable table;
  table.order = 4;
  table.identity_index = 0;
  table.elements = {"e", "a", "b", "ab"};
  // XOR on two bits.
  table.product.resize(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) table.product[static_cast<size_t>(i) * 4 + j] = i ^ j;
  }
  return table;
}

// Symmetric group S_k as permutations of {0,..,k-1} under composition
// (p * q)(i) = p(q(i)), in lexicographic permutation order.
inline GroupTable symmetric_group_table(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  const int m = static_cast<int>(perms.size());
  GroupTable table;
  table.order = m;
  table.identity_index = 0;  // lexicographically first permutation is the identity
  for (const auto& p : perms) {
    std::string label;
    for (int v : p) label += std::to_string(v);
    table.elements.push_back(label);
  }
  auto perm_index = [&](const std::vector<int>& p) {
    for (int i = 0; i < m; ++i) {
      if (perms[i] == p) return i;
    }
    throw consistency_error("permutation lookup failed");
  };
  table.product.resize(static_cast<size_t>(m) * m);
  std::vector<int> composed(k);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int v = 0; v < k; ++v) composed[v] = perms[i][perms[j][v]];
      table.product[static_cast<size_t>(i) * m + j] = perm_index(composed);
    }
  }
  return table;
}

}  // namespace dicyclic
