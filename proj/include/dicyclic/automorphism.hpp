#pragma once

// The (r,s) parametrization of Aut(Dc_n): for n >= 3 every automorphism is
//
//   phi_(r,s):  x |-> x^r,  y |-> y x^s,   r a unit mod 2n, s in Z_2n,
//
// with composition (r,s)(p,q) = (rp, s + rq) and inverse (r^-1, -r^-1 s).
// For n = 2 this family is valid but incomplete (8 of 24 maps); the complete
// automorphism group is reached through brute-force enumeration in table
// form and handled by the Dc_2 helpers at the bottom of this header.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dicyclic/group.hpp"
#include "dicyclic/oracle.hpp"
#include "dicyclic/table_automorphism.hpp"

namespace dicyclic {

inline long long mod_pow(long long base, long long exp, long long m) {
  long long acc = 1 % m;
  base = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) acc = acc * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return acc;
}

// Inverse of a unit mod m via extended Euclid.
inline long long mod_inverse(long long a, long long m) {
  long long t = 0, new_t = 1;
  long long r = m, new_r = floor_mod(a, m);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument(std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return floor_mod(t, m);
}

// Ascending units mod m.
inline std::vector<int> units_mod(int m) {
  std::vector<int> units;
  for (int r = 1; r < m; ++r) {
    if (std::gcd(r, m) == 1) units.push_back(r);
  }
  return units;
}

inline int euler_phi(int m) { return static_cast<int>(units_mod(m).size()); }

// The subgroup <m> of Z_modulus, materialized by its gcd: k is a member iff
// gcd(m, modulus) divides k.
struct CyclicSubgroup {
  int modulus;
  int step;  // gcd(generator, modulus), in [1, modulus]

  CyclicSubgroup(long long generator, int modulus_)
      : modulus(modulus_),
        step(static_cast<int>(std::gcd(floor_mod(generator, modulus_),
                                       static_cast<long long>(modulus_)))) {
    if (step == 0) step = modulus;  // <0> = {0}
  }

  bool contains(long long k) const { return floor_mod(k, modulus) % step == 0; }

  std::vector<int> exponents() const {
    std::vector<int> out;
    for (int k = 0; k < modulus; k += step) out.push_back(k);
    return out;
  }
};

struct RsAutomorphism {
  int r;
  int s;
  GroupParams params;

  // The (r,s) family covers all of Aut(Dc_n) only for n >= 3.
  bool family_incomplete() const { return params.n == 2; }

  friend bool operator==(const RsAutomorphism&, const RsAutomorphism&) = default;
};

inline RsAutomorphism make_rs(long long r, long long s, GroupParams params) {
  const int two_n = params.two_n();
  long long r0 = floor_mod(r, two_n);
  if (std::gcd(r0, static_cast<long long>(two_n)) != 1) {
    throw std::invalid_argument("r = " + std::to_string(r) + " is not a unit mod " +
                                std::to_string(two_n));
  }
  return RsAutomorphism{static_cast<int>(r0), static_cast<int>(floor_mod(s, two_n)), params};
}

inline RsAutomorphism identity_rs(GroupParams params) { return make_rs(1, 0, params); }

inline bool is_identity(const RsAutomorphism& phi) { return phi.r == 1 && phi.s == 0; }

// x^b |-> x^(rb),  y x^b |-> y x^(s + rb).
inline Element apply(const RsAutomorphism& phi, const Element& g) {
  if (g.params != phi.params) throw std::invalid_argument("automorphism applied across groups");
  long long image_exp = static_cast<long long>(phi.r) * g.b + (g.a == 1 ? phi.s : 0);
  return make_element(g.a, image_exp, g.params);
}

// compose(f, g) applies g first: (r,s)(p,q) = (rp, s + rq).
inline RsAutomorphism compose(const RsAutomorphism& f, const RsAutomorphism& g) {
  if (f.params != g.params) throw std::invalid_argument("composing automorphisms across groups");
  long long r = static_cast<long long>(f.r) * g.r;
  long long s = static_cast<long long>(f.s) + static_cast<long long>(f.r) * g.s;
  return make_rs(r, s, f.params);
}

// (r,s)^-1 = (r^-1, -r^-1 s).
inline RsAutomorphism invert(const RsAutomorphism& phi) {
  long long r_inv = mod_inverse(phi.r, phi.params.two_n());
  return make_rs(r_inv, -r_inv * phi.s, phi.params);
}

inline TableAutomorphism to_table(const RsAutomorphism& phi) {
  std::vector<int> images(phi.params.order());
  for (const auto& g : enumerate_group(phi.params)) {
    images[element_index(g)] = element_index(apply(phi, g));
  }
  return TableAutomorphism(phi.params, std::move(images));
}

// Succeeds iff the map fixes <x> setwise, i.e. phi(x) = x^r; phi(y) is then
// automatically of the form y x^s.
inline std::optional<RsAutomorphism> to_rs(const TableAutomorphism& phi) {
  Element gx = phi.image_of_x();
  if (gx.a != 0) return std::nullopt;
  Element gy = phi.image_of_y();
  if (gy.a != 1) throw consistency_error("automorphism fixes <x> but moves y into <x>");
  return make_rs(gx.b, gy.b, phi.params());
}

// phi^k = id  iff  r^k = 1 and s (1 + r + ... + r^(k-1)) = 0, both mod 2n.
inline bool order_divides(const RsAutomorphism& phi, long long k) {
  if (k < 1) throw std::invalid_argument("order_divides requires k >= 1");
  const long long two_n = phi.params.two_n();
  if (mod_pow(phi.r, k, two_n) != 1) return false;
  long long geometric = 0, r_pow = 1;
  for (long long i = 0; i < k; ++i) {
    geometric = (geometric + r_pow) % two_n;
    r_pow = r_pow * phi.r % two_n;
  }
  return phi.s * geometric % two_n == 0;
}

// Least k >= 1 with phi^k = id, by iterated composition with early exit.
inline int exact_order(const RsAutomorphism& phi) {
  RsAutomorphism acc = phi;
  int k = 1;
  const int bound = 2 * phi.params.two_n() * phi.params.two_n();
  while (!is_identity(acc)) {
    acc = compose(phi, acc);
    ++k;
    if (k > bound) throw consistency_error("automorphism order search diverged");
  }
  return k;
}

// Involution: exact order 2, characterized by r^2 = 1 and s(1 + r) = 0.
inline bool is_involution(const RsAutomorphism& phi) {
  if (is_identity(phi)) return false;
  const long long two_n = phi.params.two_n();
  return static_cast<long long>(phi.r) * phi.r % two_n == 1 &&
         static_cast<long long>(phi.s) * (1 + phi.r) % two_n == 0;
}

// Inn(x^b) = (1, -2b),  Inn(y x^b) = (2n-1, 2b).
inline RsAutomorphism inner_from(const Element& g) {
  if (g.a == 0) return make_rs(1, -2LL * g.b, g.params);
  return make_rs(g.params.two_n() - 1, 2LL * g.b, g.params);
}

// Conjugation by g as an explicit table (valid for every n, including n = 2).
inline TableAutomorphism inner_table(const Element& g) {
  std::vector<int> images(g.params.order());
  for (const auto& h : enumerate_group(g.params)) {
    images[element_index(h)] = element_index(conjugate(g, h));
  }
  return TableAutomorphism(g.params, std::move(images));
}

struct InnerCheck {
  bool inner = false;
  std::optional<Element> conjugator;  // set when inner: Inn(conjugator) = phi
};

// phi_(r,s) is inner iff s is even and r is 1 or 2n-1. The conjugating
// element is x^(-s/2) when r = 1 and y x^(s/2) when r = 2n-1.
inline InnerCheck is_inner(const RsAutomorphism& phi) {
  if (phi.s % 2 != 0) return {};
  if (phi.r == 1) return {true, x_power(-phi.s / 2, phi.params)};
  if (phi.r == phi.params.two_n() - 1) return {true, y_x_power(phi.s / 2, phi.params)};
  return {};
}

// Brute-force inner test for table automorphisms: search all 4n conjugators.
inline std::optional<Element> find_conjugator(const TableAutomorphism& phi) {
  for (const auto& g : enumerate_group(phi.params())) {
    if (inner_table(g) == phi) return g;
  }
  return std::nullopt;
}

// Inn(g) is an involution iff g has order 4.
inline bool inner_is_involution(const Element& g) { return element_order(g) == 4; }

enum class InnerOrderCase {
  power_of_x_identity,  // g = x^b, g^k = 1,   bk = 0 mod 2n
  power_of_x_central,   // g = x^b, g^k = x^n, bk = n mod 2n
  y_coset_involution,   // g = y x^b, Inn(g) an involution
};

// Classifies Inn(g) given that Inn(g)^k = id (order dividing k), n > 2.
inline InnerOrderCase classify_inner_order(const Element& g, int k) {
  if (g.params.n <= 2) throw std::domain_error("inner-order classification requires n > 2");
  if (k < 1) throw std::invalid_argument("classification requires k >= 1");
  if (!order_divides(inner_from(g), k)) {
    throw std::domain_error("Inn(" + element_name(g) + ")^" + std::to_string(k) +
                            " != id; hypotheses not met");
  }
  if (g.a == 1) return InnerOrderCase::y_coset_involution;
  long long bk = floor_mod(static_cast<long long>(g.b) * k, g.params.two_n());
  if (bk == 0) return InnerOrderCase::power_of_x_identity;
  if (bk == g.params.n) return InnerOrderCase::power_of_x_central;
  throw consistency_error("inner-order classification: bk = " + std::to_string(bk) +
                          " is neither 0 nor n although Inn(g)^k = id");
}

struct IsomorphyWitness {
  int u;
  int v;
};

// phi_(r,s) ~ phi_(p,q) iff r = p and qu - s lies in <r - 1> for some unit u.
// On success returns sigma = phi_(u,v) with sigma o phi_(p,q) = phi_(r,s) o sigma.
inline std::optional<IsomorphyWitness> are_isomorphic(const RsAutomorphism& phi,
                                                      const RsAutomorphism& theta) {
  if (phi.params != theta.params) throw std::invalid_argument("automorphisms across groups");
  if (phi.params.n == 2) {
    throw std::domain_error("(r,s) isomorphy criterion requires n >= 3; use conjugacy on tables");
  }
  if (phi.r != theta.r) return std::nullopt;
  const int two_n = phi.params.two_n();
  const CyclicSubgroup span(phi.r - 1, two_n);
  for (int u : units_mod(two_n)) {
    long long c = floor_mod(static_cast<long long>(theta.s) * u - phi.s, two_n);
    if (!span.contains(c)) continue;
    // Solve v (r - 1) = c mod 2n.
    long long v = 0;
    long long a = floor_mod(phi.r - 1, two_n);
    if (a != 0) {
      long long d = std::gcd(a, static_cast<long long>(two_n));
      v = c / d * mod_inverse(a / d, two_n / d) % (two_n / d);
    }
    RsAutomorphism sigma = make_rs(u, v, phi.params);
    if (!(compose(sigma, theta) == compose(phi, sigma))) {
      throw consistency_error("isomorphy witness failed verification");
    }
    return IsomorphyWitness{u, static_cast<int>(v)};
  }
  return std::nullopt;
}

// All 2n * phi(2n) automorphisms, ascending in (r, s).
inline std::vector<RsAutomorphism> enumerate_rs_automorphisms(GroupParams params) {
  std::vector<RsAutomorphism> out;
  for (int r : units_mod(params.two_n())) {
    for (int s = 0; s < params.two_n(); ++s) out.push_back(make_rs(r, s, params));
  }
  return out;
}

// Partition of the (r,s) family into isomorphy classes. Classes are listed
// by their lexicographically least member, members ascending.
inline std::vector<std::vector<RsAutomorphism>> isomorphy_classes(GroupParams params) {
  auto all = enumerate_rs_automorphisms(params);
  std::vector<char> assigned(all.size(), 0);
  std::vector<std::vector<RsAutomorphism>> classes;
  for (size_t i = 0; i < all.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<RsAutomorphism> cls{all[i]};
    assigned[i] = 1;
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (!assigned[j] && are_isomorphic(all[i], all[j])) {
        cls.push_back(all[j]);
        assigned[j] = 1;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace detail {

inline std::vector<int> generator_images_along_normal_form(const Element& gx, const Element& gy) {
  const GroupParams params = gx.params;
  std::vector<int> images(params.order());
  Element xp = identity(params);
  for (int b = 0; b < params.two_n(); ++b) {
    images[element_index(Element{0, b, params})] = element_index(xp);
    images[element_index(Element{1, b, params})] = element_index(multiply(gy, xp));
    xp = multiply(xp, gx);
  }
  return images;
}

}  // namespace detail

// Every bijective homomorphism Dc_n -> Dc_n, found by trying all pairs of
// generator images and validating the defining relations plus bijectivity.
// Deterministic order: ascending (index of phi(x), index of phi(y)).
inline std::vector<TableAutomorphism> enumerate_automorphisms_bruteforce(GroupParams params) {
  std::vector<TableAutomorphism> out;
  auto all = enumerate_group(params);
  for (const auto& gx : all) {
    if (params.two_n() % element_order(gx) != 0) continue;  // x^(2n) = 1
    const Element gx_inv = inverse(gx);
    const Element gx_n = power(gx, params.n);
    for (const auto& gy : all) {
      if (!(multiply(gy, gy) == gx_n)) continue;                                  // y^2 = x^n
      if (!(conjugate(inverse(gy), gx) == gx_inv)) continue;                      // y^-1 x y = x^-1
      auto images = detail::generator_images_along_normal_form(gx, gy);
      std::vector<char> seen(images.size(), 0);
      bool bijective = true;
      for (int v : images) {
        if (seen[v]) {
          bijective = false;
          break;
        }
        seen[v] = 1;
      }
      if (!bijective) continue;
      out.emplace_back(params, std::move(images));
    }
  }
  return out;
}

// Number of distinct prime factors.
inline int omega(long long k) {
  int count = 0;
  for (long long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      ++count;
      while (k % p == 0) k /= p;
    }
  }
  if (k > 1) ++count;
  return count;
}

// |{ r : r^2 = 1 mod 2n }| by the three-case closed form on n = 2^alpha k,
// k odd: 2^omega(k) for alpha = 0, 2^(omega(k)+1) for alpha = 1, and
// 2^(omega(k)+2) for alpha > 1.
inline long long count_square_roots_of_unity(GroupParams params) {
  long long k = params.n;
  int alpha = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++alpha;
  }
  int exponent = omega(k) + (alpha == 0 ? 0 : alpha == 1 ? 1 : 2);
  return 1LL << exponent;
}

// Pairs (phi, g) under (phi, g)(theta, h) = (phi o theta, g phi(h)).
struct HolomorphElement {
  RsAutomorphism phi;
  Element g;

  friend bool operator==(const HolomorphElement&, const HolomorphElement&) = default;
};

inline HolomorphElement holomorph_identity(GroupParams params) {
  return {identity_rs(params), identity(params)};
}

inline HolomorphElement holomorph_compose(const HolomorphElement& e1, const HolomorphElement& e2) {
  if (e1.g.params != e2.g.params) throw std::invalid_argument("holomorph elements across groups");
  return {compose(e1.phi, e2.phi), multiply(e1.g, apply(e1.phi, e2.g))};
}

inline HolomorphElement holomorph_inverse(const HolomorphElement& e) {
  RsAutomorphism phi_inv = invert(e.phi);
  return {phi_inv, apply(phi_inv, inverse(e.g))};
}

// ---------------------------------------------------------------------------
// Dc_2: the quaternion group. All non-central elements have order 4, so maps
// like x |-> y x^2 are automorphisms and the (r,s) family is incomplete.
// ---------------------------------------------------------------------------

// id, Inn(x), Inn(y), Inn(yx): the four distinct inner automorphisms.
inline std::vector<TableAutomorphism> dc2_inner_automorphisms() {
  const GroupParams q(2);
  return {TableAutomorphism::identity_map(q), inner_table(x_power(1, q)),
          inner_table(y_x_power(0, q)), inner_table(y_x_power(1, q))};
}

inline std::vector<std::string> dc2_inner_names() { return {"id", "Inn(x)", "Inn(y)", "Inn(yx)"}; }

// Coset representatives id, phi1..phi5 of Aut(Dc_2)/Inn(Dc_2), given by their
// generator images.
inline std::vector<TableAutomorphism> dc2_outer_representatives() {
  const GroupParams q(2);
  auto from = [&](int ax, int bx, int ay, int by) {
    return TableAutomorphism::from_generator_images(make_element(ax, bx, q),
                                                    make_element(ay, by, q));
  };
  return {
      from(0, 1, 1, 0),  // id:   x -> x,    y -> y
      from(0, 3, 1, 3),  // phi1: x -> x^3,  y -> yx^3
      from(1, 2, 0, 3),  // phi2: x -> yx^2, y -> x^3
      from(1, 3, 1, 2),  // phi3: x -> yx^3, y -> yx^2
      from(1, 0, 1, 1),  // phi4: x -> y,    y -> yx
      from(1, 1, 0, 1),  // phi5: x -> yx,   y -> x
  };
}

inline std::vector<std::string> dc2_representative_names() {
  return {"id", "phi1", "phi2", "phi3", "phi4", "phi5"};
}

// Canonical label "rep*Inn(g)" from the unique decomposition
// phi = rep o Inn(g) with rep among the six representatives.
inline std::string dc2_automorphism_name(const TableAutomorphism& phi) {
  if (phi.params().n != 2) throw std::invalid_argument("Dc_2 naming requires n = 2");
  auto reps = dc2_outer_representatives();
  auto rep_names = dc2_representative_names();
  auto inners = dc2_inner_automorphisms();
  auto inner_names = dc2_inner_names();
  for (size_t i = 0; i < reps.size(); ++i) {
    TableAutomorphism residue = compose(invert(reps[i]), phi);
    for (size_t j = 0; j < inners.size(); ++j) {
      if (residue == inners[j]) {
        if (i == 0) return inner_names[j];
        if (j == 0) return rep_names[i];
        return rep_names[i] + "*" + inner_names[j];
      }
    }
  }
  throw consistency_error("Dc_2 automorphism has no rep*inner decomposition");
}

struct Dc2AutStructure {
  std::vector<TableAutomorphism> automorphisms;  // all 24, brute-force order
  std::vector<std::string> names;
  std::vector<int> orders;
  std::vector<int> inner_indices;
  bool inner_orders_are_1_2_2_2 = false;
  bool inn_isomorphic_to_klein_four = false;
  bool aut_isomorphic_to_s4 = false;
  int quotient_order = 0;
  bool quotient_nonabelian = false;
  bool table_s3_map_is_isomorphism = false;
};

namespace detail {

// Index of the representative whose coset contains phi.
inline int dc2_coset_of(const std::vector<TableAutomorphism>& reps,
                        const std::vector<TableAutomorphism>& inners,
                        const TableAutomorphism& phi) {
  for (size_t i = 0; i < reps.size(); ++i) {
    TableAutomorphism residue = compose(invert(reps[i]), phi);
    for (const auto& inn : inners) {
      if (residue == inn) return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace detail

inline Dc2AutStructure dc2_aut_structure() {
  const GroupParams q(2);
  Dc2AutStructure report;
  report.automorphisms = enumerate_automorphisms_bruteforce(q);
  for (const auto& phi : report.automorphisms) {
    report.names.push_back(dc2_automorphism_name(phi));
    report.orders.push_back(exact_order(phi));
  }

  auto inners = dc2_inner_automorphisms();
  for (const auto& inn : inners) {
    for (size_t i = 0; i < report.automorphisms.size(); ++i) {
      if (report.automorphisms[i] == inn) report.inner_indices.push_back(static_cast<int>(i));
    }
  }
  std::vector<int> inner_orders;
  for (const auto& inn : inners) inner_orders.push_back(exact_order(inn));
  std::sort(inner_orders.begin(), inner_orders.end());
  report.inner_orders_are_1_2_2_2 = inner_orders == std::vector<int>{1, 2, 2, 2};

  report.inn_isomorphic_to_klein_four =
      isomorphism_search(table_from_automorphisms(inners), klein_four_table()).has_value();
  report.aut_isomorphic_to_s4 =
      isomorphism_search(table_from_automorphisms(report.automorphisms), symmetric_group_table(4))
          .has_value();

  // Quotient Aut/Inn through the six representatives.
  auto reps = dc2_outer_representatives();
  std::vector<int> coset_of(report.automorphisms.size());
  for (size_t i = 0; i < report.automorphisms.size(); ++i) {
    coset_of[i] = detail::dc2_coset_of(reps, inners, report.automorphisms[i]);
    if (coset_of[i] < 0) throw consistency_error("Dc_2 coset decomposition failed");
  }
  std::vector<int> coset_sizes(reps.size(), 0);
  for (int c : coset_of) ++coset_sizes[c];
  bool even_cosets = true;
  for (int size : coset_sizes) even_cosets = even_cosets && size == 4;
  report.quotient_order = even_cosets ? static_cast<int>(reps.size()) : 0;

  auto coset_product = [&](int i, int j) {
    return detail::dc2_coset_of(reps, inners, compose(reps[i], reps[j]));
  };
  for (size_t i = 0; i < reps.size() && !report.quotient_nonabelian; ++i) {
    for (size_t j = 0; j < reps.size(); ++j) {
      if (coset_product(static_cast<int>(i), static_cast<int>(j)) !=
          coset_product(static_cast<int>(j), static_cast<int>(i))) {
        report.quotient_nonabelian = true;
        break;
      }
    }
  }

  // The explicit correspondence id, phi1..phi5 <-> id, (12), (13), (23),
  // (123), (132), checked as a homomorphism on all 36 coset products.
  const std::vector<std::vector<int>> s3 = {
      {0, 1, 2},  // id
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123)
      {2, 0, 1},  // (132)
  };
  auto s3_compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[q[i]];
    return out;
  };
  report.table_s3_map_is_isomorphism = true;
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = 0; j < reps.size(); ++j) {
      int k = coset_product(static_cast<int>(i), static_cast<int>(j));
      if (s3[k] != s3_compose(s3[i], s3[j])) {
        report.table_s3_map_is_isomorphism = false;
      }
    }
  }
  return report;
}

}  // namespace dicyclic
