#pragma once

// Generalized symmetric spaces of Dc_n for an automorphism phi:
//
//   H = { g : phi(g) = g }            fixed-point group
//   Q = { g phi(g)^-1 : g in G }      generalized symmetric space
//   R = { g : phi(g) = g^-1 }         elements split by phi
//
// together with the phi-twisted conjugation action g * q = g q phi(g)^-1
// and its H- and G-orbit partitions of Q.
//
// For phi = phi_(r,s) everything has a closed form in the exponents:
//   H = {x^b : b(1-r) = 0} u {y x^b : b(1-r) = s}
//   Q = {x^j : j in <1-r> u (s + <r-1>)}
//   R = {x^b : b(r+1) = 0} u {y x^b : s + rb = n + b}
// (all congruences mod 2n). Every closed-form result is recomputed from the
// definitions; a disagreement is a hard consistency error.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dicyclic/automorphism.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/oracle.hpp"
#include "dicyclic/table_automorphism.hpp"

namespace dicyclic {

using AnyAutomorphism = std::variant<RsAutomorphism, TableAutomorphism>;

inline Element apply_auto(const RsAutomorphism& phi, const Element& g) { return apply(phi, g); }
inline Element apply_auto(const TableAutomorphism& phi, const Element& g) { return phi(g); }
inline Element apply_auto(const AnyAutomorphism& phi, const Element& g) {
  return std::visit([&](const auto& f) { return apply_auto(f, g); }, phi);
}

inline GroupParams params_of(const RsAutomorphism& phi) { return phi.params; }
inline GroupParams params_of(const TableAutomorphism& phi) { return phi.params(); }
inline GroupParams params_of(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return params_of(f); }, phi);
}

inline int exact_order(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return exact_order(f); }, phi);
}

inline bool is_involution(const TableAutomorphism& phi) { return exact_order(phi) == 2; }
inline bool is_involution(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return is_involution(f); }, phi);
}

// The (r,s) form of phi when it has one (always for n >= 3).
inline std::optional<RsAutomorphism> rs_form(const AnyAutomorphism& phi) {
  if (std::holds_alternative<RsAutomorphism>(phi)) return std::get<RsAutomorphism>(phi);
  return to_rs(std::get<TableAutomorphism>(phi));
}

inline ElementMap as_element_map(const AnyAutomorphism& phi) {
  return [phi](const Element& g) { return apply_auto(phi, g); };
}

// --- Fixed-point group -------------------------------------------------

inline ElementSet fixed_point_group(const RsAutomorphism& phi) {
  const int two_n = phi.params.two_n();
  ElementSet out;
  for (int b = 0; b < two_n; ++b) {
    long long drift = static_cast<long long>(b) * (1 - phi.r);
    if (floor_mod(drift, two_n) == 0) out.push_back(x_power(b, phi.params));
    if (floor_mod(drift - phi.s, two_n) == 0) out.push_back(y_x_power(b, phi.params));
  }
  canonicalize_set(out);
  return out;
}

inline ElementSet fixed_point_group(const TableAutomorphism& phi) {
  return definitional_H(phi.params(), [&phi](const Element& g) { return phi(g); });
}

inline ElementSet fixed_point_group(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return fixed_point_group(f); }, phi);
}

// --- Generalized symmetric space ----------------------------------------

inline ElementSet generalized_symmetric_space(const RsAutomorphism& phi) {
  const CyclicSubgroup span(1 - phi.r, phi.params.two_n());
  ElementSet out;
  for (int j : span.exponents()) {
    out.push_back(x_power(j, phi.params));
    out.push_back(x_power(j + phi.s, phi.params));
  }
  canonicalize_set(out);
  return out;
}

inline ElementSet generalized_symmetric_space(const TableAutomorphism& phi) {
  return definitional_Q(phi.params(), [&phi](const Element& g) { return phi(g); });
}

inline ElementSet generalized_symmetric_space(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return generalized_symmetric_space(f); }, phi);
}

// --- Inner special case --------------------------------------------------

struct InnerQH {
  ElementSet Q;
  ElementSet H;
};

// For a nontrivial inner automorphism (s even, r in {1, 2n-1}):
//   r = 1:    Q = {1, x^s},          H = <x>
//   r = 2n-1: Q = even powers of x,  H = {1, x^n, y x^(s/2), y x^(s/2+n)}
inline InnerQH inner_QH(const RsAutomorphism& phi) {
  if (!is_inner(phi).inner || is_identity(phi)) {
    throw std::domain_error("inner Q/H form requires a nontrivial inner automorphism");
  }
  const GroupParams params = phi.params;
  InnerQH out;
  if (phi.r == 1) {
    out.Q = {identity(params), x_power(phi.s, params)};
    for (int b = 0; b < params.two_n(); ++b) out.H.push_back(x_power(b, params));
  } else {
    for (int j = 0; j < params.two_n(); j += 2) out.Q.push_back(x_power(j, params));
    out.H = {identity(params), x_power(params.n, params), y_x_power(phi.s / 2, params),
             y_x_power(phi.s / 2 + params.n, params)};
  }
  canonicalize_set(out.Q);
  canonicalize_set(out.H);
  return out;
}

// --- Split elements -------------------------------------------------------

inline ElementSet split_elements(const RsAutomorphism& phi) {
  const int two_n = phi.params.two_n();
  ElementSet out;
  for (int b = 0; b < two_n; ++b) {
    if (floor_mod(static_cast<long long>(b) * (phi.r + 1), two_n) == 0) {
      out.push_back(x_power(b, phi.params));
    }
    long long lhs = phi.s + static_cast<long long>(phi.r) * b;
    if (floor_mod(lhs - (phi.params.n + b), two_n) == 0) {
      out.push_back(y_x_power(b, phi.params));
    }
  }
  canonicalize_set(out);
  return out;
}

inline ElementSet split_elements(const TableAutomorphism& phi) {
  return definitional_R(phi.params(), [&phi](const Element& g) { return phi(g); });
}

inline ElementSet split_elements(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return split_elements(f); }, phi);
}

// --- R - Q -----------------------------------------------------------------

inline ElementSet set_difference(const ElementSet& lhs, const ElementSet& rhs) {
  ElementSet out;
  for (const auto& g : lhs) {
    if (!set_contains(rhs, g)) out.push_back(g);
  }
  return out;
}

// Closed form: the whole y-part of R (Q has none), plus split x^k whose
// exponent lies in neither <1-r> nor s + <r-1>.
inline ElementSet r_minus_q(const RsAutomorphism& phi) {
  const int two_n = phi.params.two_n();
  const CyclicSubgroup span(1 - phi.r, two_n);
  ElementSet out;
  for (int k = 0; k < two_n; ++k) {
    if (floor_mod(static_cast<long long>(k) * (phi.r + 1), two_n) == 0 && !span.contains(k) &&
        !span.contains(k - phi.s)) {
      out.push_back(x_power(k, phi.params));
    }
    long long lhs = phi.s + static_cast<long long>(phi.r) * k;
    if (floor_mod(lhs - (phi.params.n + k), two_n) == 0) {
      out.push_back(y_x_power(k, phi.params));
    }
  }
  canonicalize_set(out);
  return out;
}

inline ElementSet r_minus_q(const TableAutomorphism& phi) {
  return set_difference(split_elements(phi), generalized_symmetric_space(phi));
}

inline ElementSet r_minus_q(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return r_minus_q(f); }, phi);
}

// --- Twisted conjugation and orbits ----------------------------------------

// g * q = g q phi(g)^-1
template <class Phi>
Element twisted_conjugate(const Element& g, const Element& q, const Phi& phi) {
  return multiply(multiply(g, q), inverse(apply_auto(phi, g)));
}

template <class Phi>
ActionClosureProblem twisted_action_on_Q(const Phi& phi, std::vector<Element> actors) {
  ActionClosureProblem problem;
  problem.carrier = generalized_symmetric_space(phi);
  problem.generators = std::move(actors);
  problem.act = [phi](const Element& actor, const Element& point) {
    return twisted_conjugate(actor, point, phi);
  };
  return problem;
}

// The two-case H\Q closed form for phi_(r,s): singletons {x^j} when
// s is not in <1-r>, otherwise pairs {x^j, x^-j}.
inline std::vector<ElementSet> h_orbits_closed_form(const RsAutomorphism& phi) {
  const CyclicSubgroup span(1 - phi.r, phi.params.two_n());
  ElementSet q_set = generalized_symmetric_space(phi);
  std::vector<ElementSet> orbits;
  if (!span.contains(phi.s)) {
    for (const auto& q : q_set) orbits.push_back({q});
    return orbits;
  }
  ElementSet placed;
  for (const auto& q : q_set) {
    if (set_contains(placed, q)) continue;
    ElementSet orbit{q, x_power(-static_cast<long long>(q.b), phi.params)};
    canonicalize_set(orbit);
    for (const auto& g : orbit) placed.push_back(g);
    canonicalize_set(placed);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace detail {

template <class Phi>
std::vector<ElementSet> h_orbits_by_closure(const Phi& phi) {
  const GroupParams params = params_of(phi);
  ElementSet h_set = fixed_point_group(phi);
  auto gens = generating_set(params, h_set);
  return orbit_partition(twisted_action_on_Q(phi, std::move(gens)));
}

}  // namespace detail

// H-orbits of Q under twisted conjugation, computed by breadth-first closure
// over a generating set of H. For (r,s) automorphisms the two-case closed
// form must agree; a mismatch is a consistency error.
inline std::vector<ElementSet> h_orbits(const RsAutomorphism& phi) {
  auto closure = detail::h_orbits_by_closure(phi);
  if (closure != h_orbits_closed_form(phi)) {
    throw consistency_error("H-orbit closed form disagrees with orbit closure");
  }
  return closure;
}

inline std::vector<ElementSet> h_orbits(const TableAutomorphism& phi) {
  if (auto rs = to_rs(phi)) return h_orbits(*rs);
  return detail::h_orbits_by_closure(phi);
}

inline std::vector<ElementSet> h_orbits(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return h_orbits(f); }, phi);
}

// G-orbits of Q: always the single orbit {Q}, verified by closure under the
// group generators x and y.
template <class Phi>
std::vector<ElementSet> g_orbits_impl(const Phi& phi, GroupParams params) {
  auto problem = twisted_action_on_Q(phi, {x_power(1, params), y_x_power(0, params)});
  auto orbits = orbit_partition(problem);
  if (orbits.size() != 1 || orbits.front() != problem.carrier) {
    throw consistency_error("G does not act transitively on Q");
  }
  return orbits;
}

inline std::vector<ElementSet> g_orbits(const RsAutomorphism& phi) {
  return g_orbits_impl(phi, phi.params);
}
inline std::vector<ElementSet> g_orbits(const TableAutomorphism& phi) {
  return g_orbits_impl(phi, phi.params());
}
inline std::vector<ElementSet> g_orbits(const AnyAutomorphism& phi) {
  return std::visit([](const auto& f) { return g_orbits(f); }, phi);
}

// --- Coset bijection for involutions --------------------------------------

// For an involution, g |-> g phi(g)^-1 identifies G/H with Q: it must be
// constant exactly on left cosets of H, giving |Q| * |H| = |G|.
template <class Phi>
bool coset_bijection_check(const Phi& phi) {
  const GroupParams params = params_of(phi);
  if (exact_order(phi) != 2) {
    throw std::domain_error("coset bijection requires an involution");
  }
  ElementSet h_set = fixed_point_group(phi);
  auto all = enumerate_group(params);

  std::vector<std::pair<Element, ElementSet>> fibers;  // Q value -> preimage
  for (const auto& g : all) {
    Element value = multiply(g, inverse(apply_auto(phi, g)));
    bool found = false;
    for (auto& [key, fiber] : fibers) {
      if (key == value) {
        fiber.push_back(g);
        found = true;
      }
    }
    if (!found) fibers.push_back({value, {g}});
  }
  if (fibers.size() * h_set.size() != all.size()) return false;
  for (auto& [key, fiber] : fibers) {
    canonicalize_set(fiber);
    ElementSet coset;
    for (const auto& h : h_set) coset.push_back(multiply(fiber.front(), h));
    canonicalize_set(coset);
    if (coset != fiber) return false;
  }
  return true;
}

// --- Aggregate report -------------------------------------------------------

// Which computation paths produced each set of a report.
struct SpaceProvenance {
  std::string H;
  std::string Q;
  std::string R;
  std::string orbits;
  bool r_beyond_paper = false;  // R is reported although phi is not an involution
};

struct SpaceReport {
  explicit SpaceReport(AnyAutomorphism phi_) : phi(std::move(phi_)) {}

  AnyAutomorphism phi;
  int order = 0;
  bool inner = false;
  ElementSet H;
  ElementSet Q;
  ElementSet R;
  ElementSet R_minus_Q;
  std::vector<ElementSet> h_orbits;
  std::vector<ElementSet> g_orbits;
  SpaceProvenance provenance;
};

inline bool is_subgroup(GroupParams params, const ElementSet& set) {
  if (!set_contains(set, identity(params))) return false;
  for (const auto& g : set) {
    if (!set_contains(set, inverse(g))) return false;
    for (const auto& h : set) {
      if (!set_contains(set, multiply(g, h))) return false;
    }
  }
  return true;
}

// Builds the full (H, Q, R, orbits) record. Closed-form values are used when
// phi has an (r,s) form and must agree with the definitional recomputation;
// the first disagreeing set is reported in a consistency error.
inline SpaceReport build_space_report(const AnyAutomorphism& phi) {
  const GroupParams params = params_of(phi);
  SpaceReport report(phi);
  report.order = exact_order(phi);

  auto rs = rs_form(phi);
  ElementMap pointwise = as_element_map(phi);
  if (rs) {
    report.inner = is_inner(*rs).inner;
    report.H = fixed_point_group(*rs);
    report.Q = generalized_symmetric_space(*rs);
    report.R = split_elements(*rs);
    report.R_minus_Q = r_minus_q(*rs);
    struct NamedCheck {
      const char* name;
      const ElementSet& closed;
      ElementSet oracle;
    };
    const NamedCheck checks[] = {
        {"H", report.H, definitional_H(params, pointwise)},
        {"Q", report.Q, definitional_Q(params, pointwise)},
        {"R", report.R, definitional_R(params, pointwise)},
        {"R-Q", report.R_minus_Q,
         set_difference(definitional_R(params, pointwise), definitional_Q(params, pointwise))},
    };
    for (const auto& check : checks) {
      if (check.closed != check.oracle) {
        throw consistency_error(std::string("closed form for ") + check.name +
                                " disagrees with its definition");
      }
    }
    report.provenance = {"both", "both", "both", "both"};
  } else {
    report.inner = find_conjugator(std::get<TableAutomorphism>(phi)).has_value();
    report.H = definitional_H(params, pointwise);
    report.Q = definitional_Q(params, pointwise);
    report.R = definitional_R(params, pointwise);
    report.R_minus_Q = set_difference(report.R, report.Q);
    report.provenance = {"oracle", "oracle", "oracle", "oracle"};
  }
  report.provenance.r_beyond_paper = report.order != 2;

  report.h_orbits = h_orbits(phi);
  report.g_orbits = g_orbits(phi);

  // Structural invariants.
  if (!set_contains(report.Q, identity(params))) throw consistency_error("1 is missing from Q");
  if (!is_subgroup(params, report.H)) throw consistency_error("H is not a subgroup");
  size_t orbit_total = 0;
  for (const auto& orbit : report.h_orbits) orbit_total += orbit.size();
  if (orbit_total != report.Q.size()) throw consistency_error("H-orbits do not partition Q");
  if (report.order == 2) {
    for (const auto& q : report.Q) {
      if (!set_contains(report.R, q)) {
        throw consistency_error("Q is not contained in R for an involution");
      }
    }
    if (report.Q.size() * report.H.size() != static_cast<size_t>(params.order())) {
      throw consistency_error("|Q| * |H| != |G| for an involution");
    }
  }
  if (rs) {
    for (const auto& q : report.Q) {
      if (q.a != 0) throw consistency_error("Q left <x> for an (r,s) automorphism");
    }
  }
  return report;
}

inline SpaceReport build_space_report(const RsAutomorphism& phi) {
  return build_space_report(AnyAutomorphism{phi});
}
inline SpaceReport build_space_report(const TableAutomorphism& phi) {
  return build_space_report(AnyAutomorphism{phi});
}

}  // namespace dicyclic
