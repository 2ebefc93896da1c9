#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "psifloor/marking.hpp"
#include "psifloor/verify.hpp"

using namespace psifloor;

TEST_SUITE("marking") {
  TEST_CASE("worked example poset") {
    const PsiFloorDiagram D = example_diagram();
    const MarkingPoset P = build_marking_poset(D, example_choice());
    // ends: one at the second floor, two at the last; subdivisions of the two unchosen edges
    int ends = 0, subdivisions = 0;
    for (const AddedVertex& a : P.added) {
      ends += a.kind == AddedKind::End;
      subdivisions += a.kind == AddedKind::Subdivision;
    }
    CHECK(ends == 3);
    CHECK(subdivisions == 2);
    // the two ends at the last floor are interchangeable: 14 labeled orders, 7 markings
    CHECK(count_linear_extensions(P) == 14);
    CHECK(count_markings(D, example_choice()) == 7);
    CHECK(count_linear_extensions(P) == oracle::linear_extensions_by_permutations(P));
  }

  TEST_CASE("siblings are divided out") {
    // two interchangeable ends after a single vertex
    MarkingPoset P;
    P.base_count = 1;
    P.added = {{AddedKind::End, 0, -1, 1}, {AddedKind::End, 0, -1, 1}};
    P.relations = {{0, 1}, {0, 2}};
    P.sibling_groups = group_siblings(P.added);
    REQUIRE(P.sibling_groups.size() == 1);
    const Integer labeled = count_linear_extensions(P);
    CHECK(labeled == 2);
    CHECK(sibling_quotient(P, labeled) == 1);
    CHECK_THROWS_AS(sibling_quotient(P, 3), std::logic_error);
  }

  TEST_CASE("grouping keeps subdivisions apart") {
    std::vector<AddedVertex> added = {{AddedKind::Subdivision, -1, 0, 1},
                                      {AddedKind::Subdivision, -1, 1, 1},
                                      {AddedKind::End, 2, -1, 1},
                                      {AddedKind::Beta, 2, -1, 1},
                                      {AddedKind::Beta, 2, -1, 2}};
    CHECK(group_siblings(added).size() == 5);
  }

  TEST_CASE("cycles are structural errors") {
    MarkingPoset P;
    P.base_count = 2;
    P.added = {{AddedKind::Subdivision, -1, 0, 1}};
    P.relations = {{1, 2}, {2, 0}};
    P.sibling_groups = {{0}};
    CHECK_THROWS_AS(count_linear_extensions(P), StructuralError);
  }

  TEST_CASE("enumerated markings match the count and respect the relations") {
    const PsiFloorDiagram D = example_diagram();
    const MarkingPoset P = build_marking_poset(D, example_choice());
    std::set<std::vector<int>> seen;
    for_each_marking(P, [&](const std::vector<int>& order) {
      CHECK(order.size() == static_cast<std::size_t>(P.size()));
      std::vector<int> pos(P.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
      for (auto [x, y] : P.relations) CHECK(pos[x] < pos[y]);
      for (int b = 1; b < P.base_count; ++b) CHECK(pos[b - 1] < pos[b]);
      seen.insert(order);
    });
    CHECK(seen.size() == 7);
  }

  TEST_CASE("element Psi-powers") {
    const PsiFloorDiagram D = example_diagram();
    const MarkingPoset P = build_marking_poset(D, example_choice());
    CHECK(P.element_psi(D, 1) == 3);
    CHECK(P.element_psi(D, 2) == 2);
    CHECK(P.element_psi(D, P.base_count) == 0);
  }
}
