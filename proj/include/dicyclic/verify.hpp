#pragma once

// Self-verification suite over a range of n: every closed form and criterion
// in the library is replayed against its brute-force definition. Each check
// reports case/failure counts plus the first counterexample; the whole run
// passes only if every check has zero failures.
//
// Exhaustive sweeps are bounded per check (associativity up to n = 6,
// composition coherence up to n = 8, conjugacy cross-checks up to n = 10,
// and so on); beyond the bound, checks fall back to seeded random sampling
// so results stay deterministic.

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dicyclic/automorphism.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/oracle.hpp"
#include "dicyclic/symmetric_space.hpp"

namespace dicyclic {

enum class Fault {
  none,
  mutate_compose,  // testing aid: swaps the composition law for a wrong one
};

struct CheckResult {
  explicit CheckResult(std::string name_) : name(std::move(name_)) {}

  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void tally(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok) {
      ++failures;
      if (failures == 1) first_failure = describe();
    }
  }
};

struct VerificationOptions {
  int n_min = 2;
  int n_max = 8;
  Fault fault = Fault::none;
};

struct VerificationSummary {
  std::vector<CheckResult> checks;
  int n_min = 2;
  int n_max = 8;

  bool all_passed() const {
    for (const auto& check : checks) {
      if (check.failures > 0) return false;
    }
    return true;
  }
};

namespace detail {

inline std::string rs_name(const RsAutomorphism& phi) {
  return "(" + std::to_string(phi.r) + "," + std::to_string(phi.s) + ")";
}

inline Element random_element(GroupParams params, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, params.order() - 1);
  return element_from_index(dist(rng), params);
}

inline RsAutomorphism random_rs(GroupParams params, std::mt19937& rng) {
  auto units = units_mod(params.two_n());
  std::uniform_int_distribution<size_t> unit_dist(0, units.size() - 1);
  std::uniform_int_distribution<int> s_dist(0, params.two_n() - 1);
  return make_rs(units[unit_dist(rng)], s_dist(rng), params);
}

// All automorphisms of Dc_n in table form: brute force for n = 2, the (r,s)
// family otherwise.
inline std::vector<TableAutomorphism> all_automorphism_tables(GroupParams params) {
  if (params.n == 2) return enumerate_automorphisms_bruteforce(params);
  std::vector<TableAutomorphism> out;
  for (const auto& rs : enumerate_rs_automorphisms(params)) out.push_back(to_table(rs));
  return out;
}

}  // namespace detail

inline VerificationSummary run_verification(const VerificationOptions& options) {
  if (options.n_min < 2 || options.n_min > options.n_max) {
    throw std::invalid_argument("verification range requires 2 <= n_min <= n_max");
  }
  VerificationSummary summary;
  summary.n_min = options.n_min;
  summary.n_max = options.n_max;
  auto& checks = summary.checks;

  auto for_each_n = [&](int lo, int hi, const std::function<void(GroupParams)>& body) {
    for (int n = std::max(lo, options.n_min); n <= std::min(hi, options.n_max); ++n) {
      body(GroupParams(n));
    }
  };
  const int kNoCap = 1 << 20;

  {
    auto& check = checks.emplace_back(CheckResult("normal form uniqueness"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      auto all = enumerate_group(params);
      check.tally(static_cast<int>(all.size()) == params.order(),
                  [&] { return "n=" + std::to_string(params.n) + ": wrong element count"; });
      for (const auto& g : all) {
        Element again = make_element(g.a, g.b, params);
        check.tally(again == g, [&] {
          return "n=" + std::to_string(params.n) + ": make_element not idempotent on " +
                 element_name(g);
        });
      }
      for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
          check.tally(!(all[i] == all[j]), [&] {
            return "n=" + std::to_string(params.n) + ": duplicate canonical element";
          });
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("group axioms"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      auto all = enumerate_group(params);
      const Element one = identity(params);
      for (const auto& g : all) {
        check.tally(multiply(one, g) == g && multiply(g, one) == g,
                    [&] { return "identity law fails at " + element_name(g); });
        check.tally(multiply(g, inverse(g)) == one && multiply(inverse(g), g) == one,
                    [&] { return "inverse law fails at " + element_name(g); });
      }
      auto associative = [&](const Element& g, const Element& h, const Element& k) {
        return multiply(multiply(g, h), k) == multiply(g, multiply(h, k));
      };
      if (params.n <= 6) {
        for (const auto& g : all) {
          for (const auto& h : all) {
            for (const auto& k : all) {
              check.tally(associative(g, h, k), [&] {
                return "associativity fails at (" + element_name(g) + ", " + element_name(h) +
                       ", " + element_name(k) + ")";
              });
            }
          }
        }
      } else {
        std::mt19937 rng(1000u + static_cast<unsigned>(params.n));
        for (int trial = 0; trial < 500; ++trial) {
          Element g = detail::random_element(params, rng);
          Element h = detail::random_element(params, rng);
          Element k = detail::random_element(params, rng);
          check.tally(associative(g, h, k), [&] {
            return "associativity fails at (" + element_name(g) + ", " + element_name(h) + ", " +
                   element_name(k) + ")";
          });
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("normality of <x>"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      for (const auto& g : enumerate_group(params)) {
        for (int k = 0; k < params.two_n(); ++k) {
          Element moved = conjugate(g, x_power(k, params));
          check.tally(moved.a == 0, [&] {
            return "n=" + std::to_string(params.n) + ": conjugate of x^" + std::to_string(k) +
                   " by " + element_name(g) + " left <x>";
          });
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("center equals commutant"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      auto all = enumerate_group(params);
      ElementSet commutant;
      for (const auto& g : all) {
        bool commutes = true;
        for (const auto& h : all) {
          if (!(multiply(g, h) == multiply(h, g))) commutes = false;
        }
        if (commutes) commutant.push_back(g);
      }
      check.tally(commutant == center(params),
                  [&] { return "n=" + std::to_string(params.n) + ": center mismatch"; });
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("element order profile"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      int order_four = 0;
      for (const auto& g : enumerate_group(params)) {
        int brute = 1;
        Element acc = g;
        while (!(acc == identity(params))) {
          acc = multiply(acc, g);
          ++brute;
        }
        check.tally(brute == element_order(g),
                    [&] { return "order formula fails at " + element_name(g); });
        if (element_order(g) == 4) ++order_four;
      }
      int expected = params.n % 2 == 1 ? params.two_n() : params.two_n() + 2;
      check.tally(order_four == expected, [&] {
        return "n=" + std::to_string(params.n) + ": order-4 count " + std::to_string(order_four) +
               " != " + std::to_string(expected);
      });
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("(r,s) parametrization completeness"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      auto brute = enumerate_automorphisms_bruteforce(params);
      auto rs_family = enumerate_rs_automorphisms(params);
      auto in_brute = [&](const TableAutomorphism& table) {
        for (const auto& candidate : brute) {
          if (candidate == table) return true;
        }
        return false;
      };
      for (const auto& rs : rs_family) {
        check.tally(in_brute(to_table(rs)), [&] {
          return "n=" + std::to_string(params.n) + ": " + detail::rs_name(rs) +
                 " missing from brute force";
        });
      }
      if (params.n == 2) {
        check.tally(brute.size() == 24, [&] {
          return "n=2: expected 24 automorphisms, found " + std::to_string(brute.size());
        });
      } else {
        size_t expected =
            static_cast<size_t>(params.two_n()) * static_cast<size_t>(euler_phi(params.two_n()));
        check.tally(brute.size() == expected && rs_family.size() == expected, [&] {
          return "n=" + std::to_string(params.n) + ": |Aut| = " + std::to_string(brute.size()) +
                 " != 2n*phi(2n) = " + std::to_string(expected);
        });
        for (const auto& table : brute) {
          check.tally(to_rs(table).has_value(), [&] {
            return "n=" + std::to_string(params.n) + ": brute-force automorphism outside family";
          });
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("composition coherence"));
    auto composed_under_test = [&](const RsAutomorphism& f, const RsAutomorphism& g) {
      if (options.fault == Fault::mutate_compose) {
        // Deliberately wrong law (operands swapped in the twist term).
        return make_rs(static_cast<long long>(f.r) * g.r,
                       static_cast<long long>(g.s) + static_cast<long long>(g.r) * f.s, f.params);
      }
      return compose(f, g);
    };
    auto coherent = [&](const RsAutomorphism& f, const RsAutomorphism& g) {
      RsAutomorphism fg = composed_under_test(f, g);
      for (const auto& z : enumerate_group(f.params)) {
        if (!(apply(fg, z) == apply(f, apply(g, z)))) return false;
      }
      return true;
    };
    for_each_n(2, 8, [&](GroupParams params) {
      auto family = enumerate_rs_automorphisms(params);
      for (const auto& f : family) {
        for (const auto& g : family) {
          check.tally(coherent(f, g), [&] {
            return "n=" + std::to_string(params.n) + ": compose " + detail::rs_name(f) + " o " +
                   detail::rs_name(g) + " disagrees with pointwise composition";
          });
        }
      }
    });
    for_each_n(9, kNoCap, [&](GroupParams params) {
      std::mt19937 rng(2000u + static_cast<unsigned>(params.n));
      for (int trial = 0; trial < 300; ++trial) {
        RsAutomorphism f = detail::random_rs(params, rng);
        RsAutomorphism g = detail::random_rs(params, rng);
        check.tally(coherent(f, g), [&] {
          return "n=" + std::to_string(params.n) + ": compose " + detail::rs_name(f) + " o " +
                 detail::rs_name(g) + " disagrees with pointwise composition";
        });
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("order-divides criterion"));
    for_each_n(2, 8, [&](GroupParams params) {
      for (const auto& phi : enumerate_rs_automorphisms(params)) {
        TableAutomorphism table = to_table(phi);
        TableAutomorphism acc = table;
        for (int k = 1; k <= params.two_n(); ++k) {
          bool pointwise = is_identity(acc);
          check.tally(order_divides(phi, k) == pointwise, [&] {
            return "n=" + std::to_string(params.n) + ": " + detail::rs_name(phi) + "^" +
                   std::to_string(k) + " criterion mismatch";
          });
          acc = compose(table, acc);
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("involution criterion"));
    for_each_n(2, 12, [&](GroupParams params) {
      for (const auto& phi : enumerate_rs_automorphisms(params)) {
        check.tally(is_involution(phi) == (exact_order(phi) == 2), [&] {
          return "n=" + std::to_string(params.n) + ": involution criterion fails for " +
                 detail::rs_name(phi);
        });
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("inner criterion"));
    for_each_n(2, 10, [&](GroupParams params) {
      for (const auto& phi : enumerate_rs_automorphisms(params)) {
        TableAutomorphism table = to_table(phi);
        InnerCheck by_criterion = is_inner(phi);
        auto conjugator = find_conjugator(table);
        check.tally(by_criterion.inner == conjugator.has_value(), [&] {
          return "n=" + std::to_string(params.n) + ": inner criterion disagrees with search for " +
                 detail::rs_name(phi);
        });
        if (by_criterion.inner) {
          check.tally(inner_table(*by_criterion.conjugator) == table, [&] {
            return "n=" + std::to_string(params.n) + ": conjugator witness wrong for " +
                   detail::rs_name(phi);
          });
        }
      }
      for (const auto& g : enumerate_group(params)) {
        check.tally(to_table(inner_from(g)) == inner_table(g),
                    [&] { return "Inn(" + element_name(g) + ") (r,s) form is wrong"; });
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("isomorphy equals conjugacy"));
    for_each_n(3, 10, [&](GroupParams params) {
      auto family = enumerate_rs_automorphisms(params);
      std::vector<TableAutomorphism> tables;
      for (const auto& rs : family) tables.push_back(to_table(rs));
      auto conj_classes = aut_conjugacy_classes(tables);
      auto iso_classes = isomorphy_classes(params);
      auto index_of = [&](const RsAutomorphism& rs) {
        for (size_t i = 0; i < family.size(); ++i) {
          if (family[i] == rs) return static_cast<int>(i);
        }
        return -1;
      };
      std::vector<std::vector<int>> iso_as_indices;
      for (const auto& cls : iso_classes) {
        std::vector<int> indices;
        for (const auto& rs : cls) indices.push_back(index_of(rs));
        std::sort(indices.begin(), indices.end());
        iso_as_indices.push_back(std::move(indices));
      }
      for (auto& cls : conj_classes) std::sort(cls.begin(), cls.end());
      auto normalize = [](std::vector<std::vector<int>> partition) {
        std::sort(partition.begin(), partition.end());
        return partition;
      };
      check.tally(normalize(iso_as_indices) == normalize(conj_classes), [&] {
        return "n=" + std::to_string(params.n) + ": isomorphy classes != conjugacy classes";
      });
      for (const auto& cls : iso_classes) {
        int order = exact_order(cls.front());
        for (const auto& rs : cls) {
          check.tally(exact_order(rs) == order, [&] {
            return "n=" + std::to_string(params.n) + ": class of " +
                   detail::rs_name(cls.front()) + " mixes orders";
          });
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("square roots of unity count"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      long long direct = 0;
      for (long long r = 0; r < params.two_n(); ++r) {
        if (r * r % params.two_n() == 1) ++direct;
      }
      check.tally(count_square_roots_of_unity(params) == direct, [&] {
        return "n=" + std::to_string(params.n) + ": formula " +
               std::to_string(count_square_roots_of_unity(params)) + " != enumeration " +
               std::to_string(direct);
      });
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("holomorph group laws"));
    for_each_n(2, 6, [&](GroupParams params) {
      const HolomorphElement one = holomorph_identity(params);
      std::vector<HolomorphElement> elements;
      for (const auto& phi : enumerate_rs_automorphisms(params)) {
        for (const auto& g : enumerate_group(params)) elements.push_back({phi, g});
      }
      for (const auto& e : elements) {
        check.tally(holomorph_compose(one, e) == e && holomorph_compose(e, one) == e,
                    [&] { return "holomorph identity law fails"; });
        check.tally(holomorph_compose(e, holomorph_inverse(e)) == one &&
                        holomorph_compose(holomorph_inverse(e), e) == one,
                    [&] { return "holomorph inverse law fails"; });
      }
      std::mt19937 rng(3000u + static_cast<unsigned>(params.n));
      std::uniform_int_distribution<size_t> dist(0, elements.size() - 1);
      for (int trial = 0; trial < 300; ++trial) {
        const auto& a = elements[dist(rng)];
        const auto& b = elements[dist(rng)];
        const auto& c = elements[dist(rng)];
        check.tally(holomorph_compose(holomorph_compose(a, b), c) ==
                        holomorph_compose(a, holomorph_compose(b, c)),
                    [&] { return "holomorph associativity fails"; });
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("closed forms vs definitions (H, Q, R, R-Q)"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      for (const auto& table : detail::all_automorphism_tables(params)) {
        auto rs = to_rs(table);
        if (!rs) continue;  // no closed form outside the (r,s) family
        ElementMap pointwise = [&table](const Element& g) { return table(g); };
        std::string who = "n=" + std::to_string(params.n) + " " + detail::rs_name(*rs);
        check.tally(fixed_point_group(*rs) == definitional_H(params, pointwise),
                    [&] { return who + ": H closed form mismatch"; });
        check.tally(generalized_symmetric_space(*rs) == definitional_Q(params, pointwise),
                    [&] { return who + ": Q closed form mismatch"; });
        check.tally(split_elements(*rs) == definitional_R(params, pointwise),
                    [&] { return who + ": R closed form mismatch"; });
        check.tally(r_minus_q(*rs) == set_difference(definitional_R(params, pointwise),
                                                     definitional_Q(params, pointwise)),
                    [&] { return who + ": R-Q closed form mismatch"; });
        if (is_inner(*rs).inner && !is_identity(*rs)) {
          InnerQH special = inner_QH(*rs);
          check.tally(special.Q == generalized_symmetric_space(*rs) &&
                          special.H == fixed_point_group(*rs),
                      [&] { return who + ": inner Q/H special case mismatch"; });
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("orbit structure"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      auto all_elements = enumerate_group(params);
      for (const auto& table : detail::all_automorphism_tables(params)) {
        AnyAutomorphism phi = table;
        auto rs = to_rs(table);
        if (rs) phi = *rs;
        std::string who = "n=" + std::to_string(params.n) + " automorphism";
        if (rs) who += " " + detail::rs_name(*rs);

        auto g_partition = g_orbits(phi);
        ElementSet q_set = generalized_symmetric_space(phi);
        check.tally(g_partition.size() == 1 && g_partition.front() == q_set,
                    [&] { return who + ": G-orbit is not all of Q"; });
        auto oracle_g = orbit_partition(twisted_action_on_Q(phi, all_elements));
        check.tally(oracle_g == g_partition,
                    [&] { return who + ": full-group closure disagrees on G-orbits"; });

        auto h_partition = h_orbits(phi);
        ElementSet h_set = fixed_point_group(phi);
        auto oracle_h =
            orbit_partition(twisted_action_on_Q(phi, std::vector<Element>(h_set.begin(),
                                                                          h_set.end())));
        check.tally(oracle_h == h_partition,
                    [&] { return who + ": full-H closure disagrees on H-orbits"; });
        if (rs) {
          check.tally(h_orbits_closed_form(*rs) == h_partition,
                      [&] { return who + ": two-case H-orbit form mismatch"; });
        }
        if (params.n == 2) {
          for (const auto& orbit : h_partition) {
            check.tally(orbit.size() == 1,
                        [&] { return who + ": Dc_2 H-orbit is not a singleton"; });
          }
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("space invariants"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      for (const auto& table : detail::all_automorphism_tables(params)) {
        AnyAutomorphism phi = table;
        if (auto rs = to_rs(table)) phi = *rs;
        SpaceReport report = build_space_report(phi);  // throws on internal violations
        check.tally(set_contains(report.H, identity(params)) &&
                        set_contains(report.Q, identity(params)),
                    [&] { return "1 missing from H or Q"; });
        check.tally(is_subgroup(params, report.H), [&] { return "H is not a subgroup"; });
        if (report.order == 2) {
          bool q_in_r = true;
          for (const auto& q : report.Q) q_in_r = q_in_r && set_contains(report.R, q);
          check.tally(q_in_r, [&] { return "Q not contained in R for an involution"; });
        }
      }
    });
  }

  {
    auto& check = checks.emplace_back(CheckResult("involution coset bijection"));
    for_each_n(2, kNoCap, [&](GroupParams params) {
      for (const auto& table : detail::all_automorphism_tables(params)) {
        if (exact_order(table) != 2) continue;
        AnyAutomorphism phi = table;
        if (auto rs = to_rs(table)) phi = *rs;
        ElementSet q_set = generalized_symmetric_space(phi);
        ElementSet h_set = fixed_point_group(phi);
        check.tally(coset_bijection_check(phi) &&
                        q_set.size() * h_set.size() == static_cast<size_t>(params.order()),
                    [&] {
                      return "n=" + std::to_string(params.n) +
                             ": |Q| * |H| != |G| for an involution";
                    });
      }
    });
  }

  return summary;
}

inline void print_verification(const VerificationSummary& summary, std::ostream& out) {
  out << "Dc_n verification, n in [" << summary.n_min << ", " << summary.n_max << "]\n";
  long long failed_checks = 0;
  for (const auto& check : summary.checks) {
    out << "  " << (check.failures == 0 ? "[ok]  " : "[FAIL]") << " " << check.name << " ("
        << check.cases << " cases";
    if (check.failures > 0) {
      out << ", " << check.failures << " failures";
      ++failed_checks;
    }
    out << ")\n";
    if (check.failures > 0) out << "         first counterexample: " << check.first_failure << "\n";
  }
  if (failed_checks == 0) {
    out << "VERIFY PASS: " << summary.checks.size() << " checks\n";
  } else {
    out << "VERIFY FAIL: " << failed_checks << " of " << summary.checks.size()
        << " checks failed\n";
  }
}

}  // namespace dicyclic
