#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dicyclic/automorphism.hpp"
#include "dicyclic/oracle.hpp"

using namespace dicyclic;

namespace {

bool pointwise_equal(const RsAutomorphism& phi, const TableAutomorphism& table) {
  for (const auto& g : enumerate_group(phi.params)) {
    if (!(apply(phi, g) == table(g))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make_rs validation") {
  GroupParams p3(3), p4(4);
  CHECK_NOTHROW(make_rs(5, 2, p3));  // gcd(5,6) = 1
  RsAutomorphism id4 = make_rs(1, 0, p4);
  CHECK(is_identity(id4));
  CHECK_THROWS_AS(make_rs(2, 0, p3), std::invalid_argument);  // gcd(2,6) = 2

  CHECK_FALSE(make_rs(1, 1, p3).family_incomplete());
  CHECK(make_rs(1, 1, GroupParams(2)).family_incomplete());
}

TEST_CASE("apply") {
  GroupParams p3(3);
  RsAutomorphism phi = make_rs(5, 2, p3);
  CHECK(apply(phi, x_power(1, p3)) == x_power(5, p3));

  // phi(yx) must equal phi(y) * phi(x): y x^2 * x^5 = y x.
  Element via_word = multiply(apply(phi, y_x_power(0, p3)), apply(phi, x_power(1, p3)));
  CHECK(apply(phi, y_x_power(1, p3)) == via_word);
  CHECK(apply(phi, y_x_power(1, p3)) == y_x_power(1, p3));

  // phi_(1,n) sends yx^b to yx^(n+b).
  for (int n : {2, 3, 4, 5}) {
    GroupParams params(n);
    RsAutomorphism shift = make_rs(1, n, params);
    for (int b = 0; b < params.two_n(); ++b) {
      CHECK(apply(shift, y_x_power(b, params)) == y_x_power(n + b, params));
    }
  }
}

TEST_CASE("composition law") {
  GroupParams p3(3);
  RsAutomorphism composed = compose(make_rs(5, 2, p3), make_rs(5, 1, p3));
  CHECK(composed == make_rs(1, 1, p3));  // (25 mod 6, 2 + 5*1 mod 6)

  RsAutomorphism phi = make_rs(5, 4, p3);
  CHECK(compose(identity_rs(p3), phi) == phi);
  CHECK(compose(phi, identity_rs(p3)) == phi);

  SECTION("agrees with pointwise composition") {
    GroupParams p6(6);
    auto family = enumerate_rs_automorphisms(p6);
    std::mt19937 rng(11);
    std::uniform_int_distribution<size_t> dist(0, family.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& f = family[dist(rng)];
      const auto& g = family[dist(rng)];
      CHECK(pointwise_equal(compose(f, g), compose(to_table(f), to_table(g))));
    }
  }
}

TEST_CASE("inversion") {
  GroupParams p3(3);
  RsAutomorphism phi = make_rs(5, 2, p3);

  // Oracle: search every (u,v) for the two-sided inverse.
  std::optional<RsAutomorphism> found;
  for (const auto& candidate : enumerate_rs_automorphisms(p3)) {
    if (is_identity(compose(phi, candidate)) && is_identity(compose(candidate, phi))) {
      found = candidate;
    }
  }
  REQUIRE(found.has_value());
  CHECK(*found == make_rs(5, 2, p3));  // self-inverse
  CHECK(invert(phi) == *found);

  for (int s = 0; s < 6; ++s) {
    CHECK(invert(make_rs(1, s, p3)) == make_rs(1, -s, p3));
    CHECK(is_identity(compose(make_rs(5, s, p3), make_rs(5, s, p3))));  // (2n-1, s)
    CHECK(invert(make_rs(5, s, p3)) == make_rs(5, s, p3));
  }
}

TEST_CASE("inner criterion") {
  GroupParams p4(4);
  InnerCheck inner = is_inner(make_rs(1, 2, p4));
  CHECK(inner.inner);
  REQUIRE(inner.conjugator.has_value());
  CHECK(*inner.conjugator == x_power(-1, p4));

  CHECK_FALSE(is_inner(make_rs(3, 0, p4)).inner);                // r not in {1, 2n-1}
  CHECK_FALSE(is_inner(make_rs(9, 1, GroupParams(5))).inner);    // s odd

  SECTION("conjugator witnesses are genuine, and criterion matches search") {
    for (int n : {2, 3, 4, 5}) {
      GroupParams params(n);
      for (const auto& phi : enumerate_rs_automorphisms(params)) {
        TableAutomorphism table = to_table(phi);
        InnerCheck check = is_inner(phi);
        CHECK(check.inner == find_conjugator(table).has_value());
        if (check.inner) CHECK(inner_table(*check.conjugator) == table);
      }
    }
  }
}

TEST_CASE("inner automorphisms from elements") {
  GroupParams p3(3);
  CHECK(inner_from(x_power(1, p3)) == make_rs(1, 4, p3));   // yx^(-2b), b = 1
  CHECK(inner_from(y_x_power(0, p3)) == make_rs(5, 0, p3));
  CHECK(is_identity(inner_from(x_power(3, p3))));           // central element

  SECTION("(r,s) form equals conjugation pointwise") {
    for (int n : {2, 3, 5}) {
      for (const auto& g : enumerate_group(GroupParams(n))) {
        CHECK(pointwise_equal(inner_from(g), inner_table(g)));
      }
    }
  }
}

TEST_CASE("order criterion") {
  GroupParams p3(3), p4(4);
  CHECK(order_divides(make_rs(5, 2, p3), 2));
  CHECK(order_divides(identity_rs(p4), 1));
  CHECK(order_divides(make_rs(3, 0, p4), 2));
  CHECK_THROWS_AS(order_divides(identity_rs(p3), 0), std::invalid_argument);

  SECTION("criterion equals pointwise iteration") {
    for (int n : {2, 3, 4, 5, 6}) {
      GroupParams params(n);
      for (const auto& phi : enumerate_rs_automorphisms(params)) {
        TableAutomorphism table = to_table(phi);
        TableAutomorphism acc = table;
        for (int k = 1; k <= params.two_n(); ++k) {
          CHECK(order_divides(phi, k) == is_identity(acc));
          acc = compose(table, acc);
        }
      }
    }
  }
}

TEST_CASE("exact order") {
  GroupParams p3(3);
  CHECK(exact_order(identity_rs(p3)) == 1);

  // Oracle: repeated pointwise composition of the table form.
  RsAutomorphism phi = make_rs(5, 2, p3);
  CHECK(exact_order(phi) == 2);
  CHECK(exact_order(to_table(phi)) == 2);

  // Dc_2 outer representative phi4 (x -> y, y -> yx) has order 3.
  GroupParams q(2);
  TableAutomorphism phi4 =
      TableAutomorphism::from_generator_images(y_x_power(0, q), y_x_power(1, q));
  CHECK(exact_order(phi4) == 3);

  SECTION("order divides |Aut|") {
    for (int n : {3, 4, 5}) {
      GroupParams params(n);
      int aut_order = params.two_n() * euler_phi(params.two_n());
      for (const auto& rs : enumerate_rs_automorphisms(params)) {
        CHECK(aut_order % exact_order(rs) == 0);
      }
    }
  }
}

TEST_CASE("involution criterion") {
  for (int n : {2, 3, 4, 5}) {
    GroupParams params(n);
    CHECK(is_involution(make_rs(1, n, params)));
    for (int s = 0; s < params.two_n(); ++s) {
      CHECK(is_involution(make_rs(params.two_n() - 1, s, params)));
    }
  }
  CHECK_FALSE(is_involution(identity_rs(GroupParams(3))));

  SECTION("equivalent to exact order 2") {
    for (int n : {2, 3, 4, 5, 6}) {
      for (const auto& phi : enumerate_rs_automorphisms(GroupParams(n))) {
        CHECK(is_involution(phi) == (exact_order(phi) == 2));
      }
    }
  }
}

TEST_CASE("inner involutions") {
  CHECK(inner_is_involution(y_x_power(3, GroupParams(5))));
  CHECK_FALSE(inner_is_involution(x_power(4, GroupParams(4))));  // central, Inn = id
  GroupParams p4(4);
  Element x = x_power(1, p4);
  CHECK_FALSE(inner_is_involution(x));  // order 8
  // Oracle: conjugating twice by x is not the identity map.
  CHECK(exact_order(inner_table(x)) != 2);

  SECTION("matches the order-4 characterization everywhere") {
    for (int n : {3, 4, 5}) {
      for (const auto& g : enumerate_group(GroupParams(n))) {
        bool inn_is_involution = exact_order(inner_table(g)) == 2;
        CHECK(inner_is_involution(g) == inn_is_involution);
      }
    }
  }
}

TEST_CASE("inner order classification") {
  GroupParams p4(4);
  CHECK(classify_inner_order(x_power(2, p4), 4) == InnerOrderCase::power_of_x_identity);
  CHECK(classify_inner_order(x_power(1, p4), 4) == InnerOrderCase::power_of_x_central);
  for (int n : {3, 4, 5}) {
    CHECK(classify_inner_order(y_x_power(1, GroupParams(n)), 2) ==
          InnerOrderCase::y_coset_involution);
  }

  // Oracle for the first two: iterate Inn(g) pointwise to confirm order | 4.
  for (Element g : {x_power(2, p4), x_power(1, p4)}) {
    TableAutomorphism inn = inner_table(g);
    TableAutomorphism acc = inn;
    for (int i = 1; i < 4; ++i) acc = compose(inn, acc);
    CHECK(is_identity(acc));
  }

  CHECK_THROWS_AS(classify_inner_order(x_power(1, GroupParams(2)), 2), std::domain_error);
  // Inn(yx) is an involution, so an odd k violates the hypotheses.
  CHECK_THROWS_AS(classify_inner_order(y_x_power(1, p4), 3), std::domain_error);
}

TEST_CASE("isomorphy criterion") {
  GroupParams p3(3), p4(4);

  auto witness = are_isomorphic(make_rs(5, 2, p3), make_rs(5, 0, p3));
  REQUIRE(witness.has_value());
  // sigma phi_(5,0) = phi_(5,2) sigma for sigma = phi_(u,v).
  RsAutomorphism sigma = make_rs(witness->u, witness->v, p3);
  CHECK(compose(sigma, make_rs(5, 0, p3)) == compose(make_rs(5, 2, p3), sigma));

  CHECK_FALSE(are_isomorphic(make_rs(3, 0, p4), make_rs(7, 0, p4)).has_value());

  auto reflexive = are_isomorphic(make_rs(5, 2, p3), make_rs(5, 2, p3));
  REQUIRE(reflexive.has_value());
  CHECK(reflexive->u == 1);
  CHECK(reflexive->v == 0);

  CHECK_THROWS_AS(are_isomorphic(make_rs(1, 1, GroupParams(2)), make_rs(1, 3, GroupParams(2))),
                  std::domain_error);

  SECTION("equivalence relation on samples") {
    GroupParams p6(6);
    auto family = enumerate_rs_automorphisms(p6);
    std::mt19937 rng(13);
    std::uniform_int_distribution<size_t> dist(0, family.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& a = family[dist(rng)];
      const auto& b = family[dist(rng)];
      const auto& c = family[dist(rng)];
      CHECK(are_isomorphic(a, a).has_value());
      CHECK(are_isomorphic(a, b).has_value() == are_isomorphic(b, a).has_value());
      if (are_isomorphic(a, b) && are_isomorphic(b, c)) {
        CHECK(are_isomorphic(a, c).has_value());
      }
    }
  }
}

TEST_CASE("isomorphy classes") {
  GroupParams p3(3);
  auto classes = isomorphy_classes(p3);

  // n = 3: within r = 1 the classes are {(1,0)}, {(1,1),(1,5)}, {(1,2),(1,4)},
  // {(1,3)}; within r = 5 they split by parity of s.
  auto as_pairs = [&](const std::vector<RsAutomorphism>& cls) {
    std::vector<std::pair<int, int>> out;
    for (const auto& rs : cls) out.push_back({rs.r, rs.s});
    return out;
  };
  std::vector<std::vector<std::pair<int, int>>> got;
  for (const auto& cls : classes) got.push_back(as_pairs(cls));
  std::vector<std::vector<std::pair<int, int>>> expected = {
      {{1, 0}},
      {{1, 1}, {1, 5}},
      {{1, 2}, {1, 4}},
      {{1, 3}},
      {{5, 0}, {5, 2}, {5, 4}},
      {{5, 1}, {5, 3}, {5, 5}},
  };
  CHECK(got == expected);

  SECTION("classes partition the family") {
    for (int n : {3, 4, 5, 6}) {
      GroupParams params(n);
      auto family = enumerate_rs_automorphisms(params);
      auto partition = isomorphy_classes(params);
      size_t total = 0;
      for (const auto& cls : partition) total += cls.size();
      CHECK(total == family.size());
    }
  }

  SECTION("classes coincide with Aut-conjugacy for n = 5") {
    GroupParams p5(5);
    auto family = enumerate_rs_automorphisms(p5);
    std::vector<TableAutomorphism> tables;
    for (const auto& rs : family) tables.push_back(to_table(rs));
    auto conj = aut_conjugacy_classes(tables);

    auto index_of = [&](const RsAutomorphism& rs) {
      for (size_t i = 0; i < family.size(); ++i) {
        if (family[i] == rs) return static_cast<int>(i);
      }
      return -1;
    };
    std::vector<std::vector<int>> iso;
    for (const auto& cls : isomorphy_classes(p5)) {
      std::vector<int> indices;
      for (const auto& rs : cls) indices.push_back(index_of(rs));
      std::sort(indices.begin(), indices.end());
      iso.push_back(indices);
    }
    for (auto& cls : conj) std::sort(cls.begin(), cls.end());
    std::sort(iso.begin(), iso.end());
    std::sort(conj.begin(), conj.end());
    CHECK(iso == conj);
  }

  SECTION("classes are order-homogeneous") {
    for (int n : {3, 4, 5, 6}) {
      for (const auto& cls : isomorphy_classes(GroupParams(n))) {
        for (const auto& rs : cls) CHECK(exact_order(rs) == exact_order(cls.front()));
      }
    }
  }
}

TEST_CASE("automorphism enumeration") {
  CHECK(enumerate_rs_automorphisms(GroupParams(3)).size() == 12);
  CHECK(enumerate_rs_automorphisms(GroupParams(4)).size() == 32);
  CHECK(enumerate_rs_automorphisms(GroupParams(2)).size() == 8);

  SECTION("brute force equals the family for n = 3") {
    GroupParams p3(3);
    auto brute = enumerate_automorphisms_bruteforce(p3);
    CHECK(brute.size() == 12);
    for (const auto& rs : enumerate_rs_automorphisms(p3)) {
      TableAutomorphism table = to_table(rs);
      CHECK(std::count(brute.begin(), brute.end(), table) == 1);
    }
  }

  SECTION("brute force finds 24 automorphisms of Dc_2, the family only 8") {
    auto brute = enumerate_automorphisms_bruteforce(GroupParams(2));
    CHECK(brute.size() == 24);
    int rs_representable = 0;
    for (const auto& table : brute) {
      if (to_rs(table)) ++rs_representable;
    }
    CHECK(rs_representable == 8);
  }

  SECTION("identity map is always present") {
    for (int n : {2, 3, 4}) {
      GroupParams params(n);
      auto brute = enumerate_automorphisms_bruteforce(params);
      CHECK(std::count(brute.begin(), brute.end(), TableAutomorphism::identity_map(params)) == 1);
    }
  }
}

TEST_CASE("table automorphism validation and conversion") {
  GroupParams p3(3);

  SECTION("a non-homomorphism bijection is rejected") {
    std::vector<int> images(p3.order());
    for (int i = 0; i < p3.order(); ++i) images[i] = i;
    std::swap(images[1], images[2]);  // swap x and x^2
    CHECK_THROWS_AS(TableAutomorphism(p3, images), std::invalid_argument);
  }

  SECTION("rs -> table -> rs round trip") {
    for (int n : {3, 4, 5}) {
      for (const auto& rs : enumerate_rs_automorphisms(GroupParams(n))) {
        auto back = to_rs(to_table(rs));
        REQUIRE(back.has_value());
        CHECK(*back == rs);
      }
    }
  }

  SECTION("maps moving x off <x> have no rs form") {
    GroupParams q(2);
    TableAutomorphism phi2 =
        TableAutomorphism::from_generator_images(y_x_power(2, q), x_power(3, q));
    CHECK_FALSE(to_rs(phi2).has_value());
  }
}

TEST_CASE("square roots of unity") {
  CHECK(count_square_roots_of_unity(GroupParams(3)) == 2);
  CHECK(count_square_roots_of_unity(GroupParams(2)) == 2);
  CHECK(count_square_roots_of_unity(GroupParams(12)) == 8);

  SECTION("matches direct enumeration up to n = 200") {
    for (int n = 2; n <= 200; ++n) {
      GroupParams params(n);
      long long direct = 0;
      for (long long r = 0; r < params.two_n(); ++r) {
        if (r * r % params.two_n() == 1) ++direct;
      }
      CHECK(count_square_roots_of_unity(params) == direct);
    }
  }

  SECTION("the enumerated roots for small n") {
    auto roots = [](int n) {
      std::vector<long long> out;
      for (long long r = 0; r < 2 * n; ++r) {
        if (r * r % (2 * n) == 1) out.push_back(r);
      }
      return out;
    };
    CHECK(roots(3) == std::vector<long long>{1, 5});
    CHECK(roots(2) == std::vector<long long>{1, 3});
  }
}

TEST_CASE("holomorph product") {
  GroupParams p4(4);
  const HolomorphElement one = holomorph_identity(p4);
  HolomorphElement e{make_rs(3, 1, p4), y_x_power(2, p4)};

  CHECK(holomorph_compose(one, e) == e);
  CHECK(holomorph_compose(e, one) == e);
  CHECK(holomorph_compose(e, holomorph_inverse(e)) == one);
  CHECK(holomorph_compose(holomorph_inverse(e), e) == one);

  SECTION("associativity on random triples") {
    auto family = enumerate_rs_automorphisms(p4);
    auto elements = enumerate_group(p4);
    std::mt19937 rng(17);
    std::uniform_int_distribution<size_t> phi_dist(0, family.size() - 1);
    std::uniform_int_distribution<size_t> g_dist(0, elements.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      HolomorphElement a{family[phi_dist(rng)], elements[g_dist(rng)]};
      HolomorphElement b{family[phi_dist(rng)], elements[g_dist(rng)]};
      HolomorphElement c{family[phi_dist(rng)], elements[g_dist(rng)]};
      CHECK(holomorph_compose(holomorph_compose(a, b), c) ==
            holomorph_compose(a, holomorph_compose(b, c)));
    }
  }
}

TEST_CASE("Dc_2 automorphism structure") {
  Dc2AutStructure report = dc2_aut_structure();

  CHECK(report.automorphisms.size() == 24);
  CHECK(report.inner_indices.size() == 4);
  CHECK(report.inner_orders_are_1_2_2_2);
  CHECK(report.inn_isomorphic_to_klein_four);
  CHECK(report.aut_isomorphic_to_s4);
  CHECK(report.quotient_order == 6);
  CHECK(report.quotient_nonabelian);
  CHECK(report.table_s3_map_is_isomorphism);

  SECTION("inner automorphism images and orders") {
    GroupParams q(2);
    auto inners = dc2_inner_automorphisms();
    auto names = dc2_inner_names();
    struct Expected {
      const char* x_image;
      const char* y_image;
      int order;
    };
    const Expected rows[] = {{"x", "y", 1}, {"x", "yx^2", 2}, {"x^3", "y", 2}, {"x^3", "yx^2", 2}};
    for (size_t i = 0; i < inners.size(); ++i) {
      CHECK(element_name(inners[i].image_of_x()) == rows[i].x_image);
      CHECK(element_name(inners[i].image_of_y()) == rows[i].y_image);
      CHECK(exact_order(inners[i]) == rows[i].order);
    }
    CHECK(names.size() == 4);
  }

  SECTION("every automorphism gets a unique name") {
    std::vector<std::string> names = report.names;
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
  }

  SECTION("orders are 1, 2, 3, or 4 with the S_4 census") {
    int count_by_order[5] = {0, 0, 0, 0, 0};
    for (int order : report.orders) {
      REQUIRE((order >= 1 && order <= 4));
      ++count_by_order[order];
    }
    // S_4: 1 identity, 9 of order 2, 8 of order 3, 6 of order 4.
    CHECK(count_by_order[1] == 1);
    CHECK(count_by_order[2] == 9);
    CHECK(count_by_order[3] == 8);
    CHECK(count_by_order[4] == 6);
  }
}
