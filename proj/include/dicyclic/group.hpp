#pragma once

// Exact arithmetic for the dicyclic group
//
//   Dc_n = < x, y | x^(2n) = 1, y^2 = x^n, y^-1 x y = x^-1 >,   n >= 2,
//
// of order 4n. Every element has the unique normal form y^a x^b with
// a in {0,1} and 0 <= b < 2n; Dc_2 is the quaternion group.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicyclic {

// Thrown when two computation routes that must agree do not.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

// Least non-negative residue, correct for negative v.
constexpr long long floor_mod(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

struct GroupParams {
  int n;

  explicit GroupParams(int n_) : n(n_) {
    if (n < 2) {
      throw std::invalid_argument("Dc_n requires n >= 2 (Dc_1 is cyclic, not dicyclic); got n = " +
                                  std::to_string(n_));
    }
  }

  int two_n() const { return 2 * n; }
  int order() const { return 4 * n; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

// Normal form y^a x^b. Equality is componentwise on (a, b, n).
struct Element {
  int a;  // 0 or 1
  int b;  // in [0, 2n)
  GroupParams params;

  friend bool operator==(const Element&, const Element&) = default;
};

// Position in the canonical enumeration 1, x, ..., x^(2n-1), y, yx, ..., yx^(2n-1).
inline int element_index(const Element& g) { return g.a * g.params.two_n() + g.b; }

inline bool canonical_less(const Element& lhs, const Element& rhs) {
  return element_index(lhs) < element_index(rhs);
}

inline void require_same_group(const Element& g, const Element& h) {
  if (g.params != h.params) {
    throw std::invalid_argument("elements belong to different Dc_n (n = " +
                                std::to_string(g.params.n) + " vs n = " +
                                std::to_string(h.params.n) + ")");
  }
}

// Reduces arbitrary integer exponents into the normal form, absorbing
// y^2 = x^n and x^(2n) = 1. Accepts a >= 2 and negative a or b so that
// word-building code can compose freely.
inline Element make_element(long long a, long long b, GroupParams params) {
  long long a0 = floor_mod(a, 2);
  long long y_pairs = (a - a0) / 2;  // each contributes x^n
  long long b0 = floor_mod(b + y_pairs * params.n, params.two_n());
  return Element{static_cast<int>(a0), static_cast<int>(b0), params};
}

inline Element identity(GroupParams params) { return make_element(0, 0, params); }
inline Element x_power(long long k, GroupParams params) { return make_element(0, k, params); }
inline Element y_x_power(long long k, GroupParams params) { return make_element(1, k, params); }

inline Element element_from_index(int index, GroupParams params) {
  if (index < 0 || index >= params.order()) {
    throw std::invalid_argument("element index out of range: " + std::to_string(index));
  }
  return Element{index / params.two_n(), index % params.two_n(), params};
}

// (y^a1 x^b1)(y^a2 x^b2) = y^(a1+a2) x^(b2 + (-1)^a2 b1), using x y = y x^-1;
// make_element absorbs y^2 = x^n when a1 + a2 = 2.
inline Element multiply(const Element& g, const Element& h) {
  require_same_group(g, h);
  long long c = static_cast<long long>(h.b) + (h.a == 1 ? -g.b : g.b);
  return make_element(g.a + h.a, c, g.params);
}

// (x^b)^-1 = x^(2n-b), (y x^b)^-1 = y x^(b+n).
inline Element inverse(const Element& g) {
  if (g.a == 0) return make_element(0, -static_cast<long long>(g.b), g.params);
  return make_element(1, static_cast<long long>(g.b) + g.params.n, g.params);
}

inline Element power(const Element& g, long long k) {
  Element acc = identity(g.params);
  Element base = k < 0 ? inverse(g) : g;
  long long reps = k < 0 ? -k : k;
  for (long long i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

inline Element conjugate(const Element& g, const Element& h) {
  // g h g^-1
  return multiply(multiply(g, h), inverse(g));
}

// Elements y x^b have order 4; x^b has order 2n / gcd(b, 2n).
inline int element_order(const Element& g) {
  if (g.a == 1) return 4;
  return g.params.two_n() / std::gcd(g.b, g.params.two_n());
}

// Sorted-by-canonical-index, duplicate-free element collection. All set
// outputs in this library use this representation so results are diffable.
using ElementSet = std::vector<Element>;

inline void canonicalize_set(ElementSet& set) {
  std::sort(set.begin(), set.end(), canonical_less);
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

inline bool set_contains(const ElementSet& set, const Element& g) {
  auto it = std::lower_bound(set.begin(), set.end(), g, canonical_less);
  return it != set.end() && *it == g;
}

inline std::vector<Element> enumerate_group(GroupParams params) {
  std::vector<Element> all;
  all.reserve(params.order());
  for (int i = 0; i < params.order(); ++i) all.push_back(element_from_index(i, params));
  return all;
}

// Z(Dc_n) = {1, x^n}.
inline ElementSet center(GroupParams params) {
  return ElementSet{identity(params), x_power(params.n, params)};
}

inline bool is_central(const Element& g) { return g.a == 0 && (g.b == 0 || g.b == g.params.n); }

// Renders the normal form as "1", "x", "x^3", "y", "yx", "yx^4".
inline std::string element_name(const Element& g) {
  std::string s = g.a == 1 ? "y" : "";
  if (g.b == 1) {
    s += "x";
  } else if (g.b != 0) {
    s += "x^" + std::to_string(g.b);
  }
  return s.empty() ? "1" : s;
}

// A finite group as element labels plus a full multiplication table over
// indices. Used both as the Dc_2 output format and as the substrate for
// group-agnostic searches (isomorphism, conjugacy).
struct GroupTable {
  int order = 0;
  std::vector<std::string> elements;
  std::vector<int> product;  // row-major: product[i * order + j] = index of e_i * e_j
  int identity_index = 0;

  int at(int i, int j) const { return product[static_cast<size_t>(i) * order + j]; }
};

inline GroupTable cayley_table(GroupParams params) {
  GroupTable table;
  table.order = params.order();
  table.identity_index = 0;
  auto all = enumerate_group(params);
  table.elements.reserve(all.size());
  for (const auto& g : all) table.elements.push_back(element_name(g));
  table.product.resize(static_cast<size_t>(table.order) * table.order);
  for (int i = 0; i < table.order; ++i) {
    for (int j = 0; j < table.order; ++j) {
      table.product[static_cast<size_t>(i) * table.order + j] =
          element_index(multiply(all[i], all[j]));
    }
  }
  return table;
}

// Checks the GroupTable invariants: entries in range, Latin square,
// two-sided identity, inverses, associativity.
inline void validate_group_table(const GroupTable& table) {
  const int m = table.order;
  if (m <= 0 || static_cast<int>(table.elements.size()) != m ||
      static_cast<int>(table.product.size()) != m * m) {
    throw consistency_error("group table: inconsistent sizes");
  }
  for (int v : table.product) {
    if (v < 0 || v >= m) throw consistency_error("group table: entry out of range");
  }
  const int e = table.identity_index;
  for (int i = 0; i < m; ++i) {
    if (table.at(e, i) != i || table.at(i, e) != i) {
      throw consistency_error("group table: identity law fails at " + table.elements[i]);
    }
  }
  std::vector<char> seen(m);
  for (int i = 0; i < m; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < m; ++j) seen[table.at(i, j)] = 1;
    for (int j = 0; j < m; ++j) {
      if (!seen[j]) throw consistency_error("group table: row " + table.elements[i] + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < m; ++j) seen[table.at(j, i)] = 1;
    for (int j = 0; j < m; ++j) {
      if (!seen[j]) throw consistency_error("group table: column " + table.elements[i] + " is not a permutation");
    }
  }
  for (int i = 0; i < m; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < m; ++j) {
      if (table.at(i, j) == e && table.at(j, i) == e) has_inverse = true;
    }
    if (!has_inverse) throw consistency_error("group table: no inverse for " + table.elements[i]);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (table.at(table.at(i, j), k) != table.at(i, table.at(j, k))) {
          throw consistency_error("group table: associativity fails at (" + table.elements[i] +
                                  ", " + table.elements[j] + ", " + table.elements[k] + ")");
        }
      }
    }
  }
}

inline int table_inverse(const GroupTable& table, int i) {
  for (int j = 0; j < table.order; ++j) {
    if (table.at(i, j) == table.identity_index) return j;
  }
  throw consistency_error("group table: no inverse for index " + std::to_string(i));
}

inline int table_element_order(const GroupTable& table, int i) {
  int acc = i;
  int order = 1;
  while (acc != table.identity_index) {
    acc = table.at(acc, i);
    ++order;
    if (order > table.order) throw consistency_error("group table: order search diverged");
  }
  return order;
}

}  // namespace dicyclic
