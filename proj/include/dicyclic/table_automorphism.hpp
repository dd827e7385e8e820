#pragma once

// Automorphisms of Dc_n as explicit bijections on the 4n canonical elements.
// This representation is complete for every n; for n = 2 it is the only
// complete one, since maps such as x |-> y x^2 exist there.

#include <optional>
#include <vector>

#include "dicyclic/group.hpp"

namespace dicyclic {

class TableAutomorphism {
 public:
  // images[element_index(g)] = element_index(phi(g)). Bijectivity and the
  // homomorphism law are checked on construction.
  TableAutomorphism(GroupParams params, std::vector<int> images)
      : params_(params), images_(std::move(images)) {
    validate();
  }

  static TableAutomorphism identity_map(GroupParams params) {
    std::vector<int> images(params.order());
    for (int i = 0; i < params.order(); ++i) images[i] = i;
    return TableAutomorphism(params, std::move(images));
  }

  // Extends generator images phi(x) = gx, phi(y) = gy along the normal form:
  // y^a x^b |-> gy^a gx^b. The caller is responsible for gx, gy satisfying
  // the defining relations; validation rejects anything that is not an
  // automorphism.
  static TableAutomorphism from_generator_images(const Element& gx, const Element& gy) {
    require_same_group(gx, gy);
    const GroupParams params = gx.params;
    std::vector<int> images(params.order());
    Element xp = identity(params);
    for (int b = 0; b < params.two_n(); ++b) {
      images[element_index(Element{0, b, params})] = element_index(xp);
      images[element_index(Element{1, b, params})] = element_index(multiply(gy, xp));
      xp = multiply(xp, gx);
    }
    return TableAutomorphism(params, std::move(images));
  }

  GroupParams params() const { return params_; }
  const std::vector<int>& images() const { return images_; }

  Element operator()(const Element& g) const {
    if (g.params != params_) throw std::invalid_argument("automorphism applied across groups");
    return element_from_index(images_[element_index(g)], params_);
  }

  Element image_of_x() const { return element_from_index(images_[1], params_); }
  Element image_of_y() const { return element_from_index(images_[params_.two_n()], params_); }

  friend bool operator==(const TableAutomorphism&, const TableAutomorphism&) = default;

 private:
  void validate() const {
    const int m = params_.order();
    if (static_cast<int>(images_.size()) != m) {
      throw std::invalid_argument("table automorphism: wrong image count");
    }
    std::vector<char> seen(m, 0);
    for (int v : images_) {
      if (v < 0 || v >= m || seen[v]) {
        throw std::invalid_argument("table automorphism: images are not a bijection");
      }
      seen[v] = 1;
    }
    auto all = enumerate_group(params_);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        int lhs = images_[element_index(multiply(all[i], all[j]))];
        int rhs = element_index(multiply(element_from_index(images_[i], params_),
                                         element_from_index(images_[j], params_)));
        if (lhs != rhs) {
          throw std::invalid_argument("table automorphism: not a homomorphism at (" +
                                      element_name(all[i]) + ", " + element_name(all[j]) + ")");
        }
      }
    }
  }

  GroupParams params_;
  std::vector<int> images_;
};

// compose(f, g) applies g first: (f o g)(z) = f(g(z)).
inline TableAutomorphism compose(const TableAutomorphism& f, const TableAutomorphism& g) {
  if (f.params() != g.params()) throw std::invalid_argument("composing automorphisms across groups");
  std::vector<int> images(f.params().order());
  for (int i = 0; i < f.params().order(); ++i) images[i] = f.images()[g.images()[i]];
  return TableAutomorphism(f.params(), std::move(images));
}

inline TableAutomorphism invert(const TableAutomorphism& f) {
  std::vector<int> images(f.params().order());
  for (int i = 0; i < f.params().order(); ++i) images[f.images()[i]] = i;
  return TableAutomorphism(f.params(), std::move(images));
}

inline bool is_identity(const TableAutomorphism& f) {
  for (int i = 0; i < f.params().order(); ++i) {
    if (f.images()[i] != i) return false;
  }
  return true;
}

inline int exact_order(const TableAutomorphism& f) {
  TableAutomorphism acc = f;
  int k = 1;
  while (!is_identity(acc)) {
    acc = compose(f, acc);
    ++k;
    if (k > f.params().order() * f.params().order()) {
      throw consistency_error("automorphism order search diverged");
    }
  }
  return k;
}

}  // namespace dicyclic
