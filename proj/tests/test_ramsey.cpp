#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homflow/ramsey.hpp"

using namespace homflow;

namespace {

FinStructure okn(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return with_linear_order(FinStructure::complete_graph(n), id);
}

}  // namespace

TEST_CASE("arrows: R(3,3) = 6 recomputed") {
  ArrowInstance six{okn(6), okn(3), okn(2), 2};
  ArrowResult r6 = arrows(six);
  CHECK(r6.holds);
  CHECK_FALSE(r6.bad.has_value());

  ArrowInstance five{okn(5), okn(3), okn(2), 2};
  ArrowResult r5 = arrows(five);
  CHECK_FALSE(r5.holds);
  REQUIRE(r5.bad.has_value());
  CHECK(verify_bad_coloring(five, *r5.bad));

  // The exhaustive oracle agrees with the pruned search.
  CHECK(arrows(six, true).holds);
  auto bad5 = find_bad_coloring(five, true);
  REQUIRE(bad5.has_value());
  CHECK(verify_bad_coloring(five, *bad5));
}

TEST_CASE("arrows: degenerate cases") {
  // C = B with A = B: a single copy is monochromatic.
  ArrowInstance self{okn(3), okn(3), okn(3), 2};
  CHECK(arrows(self).holds);

  // B does not embed into C.
  ArrowInstance nofit{okn(3), okn(4), okn(2), 2};
  CHECK_FALSE(arrows(nofit).holds);

  // Zero copies of A in C.
  FinStructure empty2 = with_linear_order(FinStructure::graph(2, {}), {0, 1});
  ArrowInstance zero{empty2, okn(2), okn(2), 2};
  CHECK_FALSE(find_bad_coloring(zero).has_value());
  CHECK_FALSE(arrows(zero).holds);  // B itself does not embed

  CHECK_THROWS_AS(arrows(ArrowInstance{okn(3), okn(2), okn(2), 0}), std::invalid_argument);
}

TEST_CASE("arrows with k = 1 reduces to embeddability") {
  CHECK(arrows(ArrowInstance{okn(4), okn(3), okn(2), 1}).holds);
  CHECK_FALSE(arrows(ArrowInstance{okn(3), okn(4), okn(2), 1}).holds);
}

TEST_CASE("arrows monotone under extension of C") {
  // Vertex colorings: K_3 -> (K_2)^pt_2, hence also K_4.
  FinStructure pt = FinStructure::graph(1, {});
  CHECK(arrows(ArrowInstance{FinStructure::complete_graph(3), FinStructure::complete_graph(2),
                             pt, 2})
            .holds);
  CHECK(arrows(ArrowInstance{FinStructure::complete_graph(4), FinStructure::complete_graph(2),
                             pt, 2})
            .holds);
  // Edge colorings: the K_6 witness persists in K_7.
  CHECK(arrows(ArrowInstance{okn(7), okn(3), okn(2), 2}).holds);
}

TEST_CASE("find_ramsey_witness") {
  FinStructure pt = FinStructure::graph(1, {});
  FinStructure edge = FinStructure::complete_graph(2);
  auto w = find_ramsey_witness(pt, edge, 2, ClassSpec::graphs(), 5);
  REQUIRE(w.has_value());
  CHECK(are_isomorphic(*w, FinStructure::complete_graph(3)).has_value());
  CHECK(arrows(ArrowInstance{*w, edge, pt, 2}).holds);

  // Ordered triangle needs size 6; bound 5 exhausts.
  CHECK_FALSE(find_ramsey_witness(okn(2), okn(3), 2, ClassSpec::graphs(true), 5).has_value());

  // A = B: C = B itself.
  auto self = find_ramsey_witness(okn(2), okn(2), 2, ClassSpec::graphs(true), 4);
  REQUIRE(self.has_value());
  CHECK(self->size == 2);

  CHECK_THROWS_AS(find_ramsey_witness(okn(3), okn(2), 2, ClassSpec::graphs(true), 4),
                  std::invalid_argument);
}

TEST_CASE("check_ordering_property small cases") {
  FinStructure edge = FinStructure::complete_graph(2);
  auto w = check_ordering_property(edge, ClassSpec::graphs(true), 4);
  REQUIRE(w.has_value());
  CHECK(w->size == 2);

  auto wp = check_ordering_property(FinStructure::chain_poset(2), ClassSpec::posets(true), 4);
  REQUIRE(wp.has_value());
  CHECK(wp->size == 2);
}

TEST_CASE("check_ordering_property: P3 witness found and re-verified") {
  FinStructure p3 = FinStructure::path(3);
  ClassSpec og = ClassSpec::graphs(true);
  auto w = check_ordering_property(p3, og, 6);
  REQUIRE(w.has_value());
  for (const auto& od : admissible_orders(*w, og)) {
    FinStructure dd = with_linear_order(*w, od);
    for (const auto& ob : admissible_orders(p3, og))
      CHECK(embeds(with_linear_order(p3, ob), dd));
  }
}

TEST_CASE("check_order_rigidity") {
  CHECK(check_order_rigidity(okn(3), 3));
  CHECK_FALSE(check_order_rigidity(FinStructure::graph(2, {}), 2));  // swap moves F = {0,1}

  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) e.emplace_back(i, j);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(check_order_rigidity(with_linear_order(FinStructure::graph(n, e), perm), n));
  }
}

TEST_CASE("check_ramsey_class") {
  RamseyClassReport g = check_ramsey_class(ClassSpec::graphs(true), 2, 6);
  CHECK(g.all_witnessed);
  CHECK_FALSE(g.rows.empty());
  for (const auto& row : g.rows) REQUIRE(row.witness_size.has_value());

  RamseyClassReport p = check_ramsey_class(ClassSpec::posets(true), 2, 6);
  CHECK(p.all_witnessed);

  RamseyClassReport one = check_ramsey_class(ClassSpec::graphs(true), 1, 6);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0].witness_size == 1);
}
