#include <doctest.h>

#include <set>

#include "psifloor/choices.hpp"
#include "psifloor/verify.hpp"

using namespace psifloor;

TEST_SUITE("choices") {
  TEST_CASE("ports of the worked example") {
    const PsiFloorDiagram D = example_diagram();
    const VertexPorts third = ports(D, 2);
    CHECK(third.incoming_internal.size() == 1);
    CHECK(third.outgoing_internal.size() == 1);
    CHECK(third.end_edges == 2);
    const VertexPorts second = ports(D, 1);
    CHECK(second.end_edges == 1);
    const VertexPorts single = ports(PsiFloorDiagram({{1, 0}}, {}), 0);
    CHECK(single.incoming_internal.empty());
    CHECK(single.end_edges == 1);
    CHECK_THROWS_AS(ports(PsiFloorDiagram({{2, 2}, {0, 1}}, {{0, 1, 2}}), 1), DomainError);
  }

  TEST_CASE("edges at degree-0 vertices are counted but never chosen") {
    const PsiFloorDiagram D({{2, 2}, {0, 1}}, {{0, 1, 2}});
    const VertexPorts p = ports(D, 0);
    CHECK(p.outgoing_internal.empty());
    CHECK(p.outgoing_zero == 1);
    CHECK(p.end_edges == 0);
    const auto all = enumerate_choices(D);
    REQUIRE(all.size() == 1);
    CHECK_FALSE(all[0].is_chosen(0));
    // (2^0 / 2!) (2^1 / 2!)
    CHECK(choice_multiplicity(D, all[0]) == Rational(1, 2));
  }

  TEST_CASE("worked example choice") {
    const PsiFloorDiagram D = example_diagram();
    const EdgeChoice C = example_choice();
    CHECK_NOTHROW(check_choice(D, C));
    CHECK(required_choice_size(D, 1) == 1);
    CHECK(required_choice_size(D, 2) == 2);
    CHECK(C.chosen_edges(D, 1) == std::vector<int>{0});
    CHECK(C.chosen_edges(D, 0).empty());
    CHECK(choice_multiplicity(D, C) == Rational(1, 2));
  }

  TEST_CASE("local multiplicity") {
    CHECK(local_multiplicity(1, 0, 1) == 1);
    CHECK(local_multiplicity(2, 0, 3) == 2);
    CHECK(local_multiplicity(2, 1, 1) == 1);
    CHECK(local_multiplicity(3, 0, 0) == Rational(1, 36));
  }

  TEST_CASE("invalid choices are rejected") {
    const PsiFloorDiagram D = example_diagram();
    EdgeChoice C = example_choice();
    C.chosen_ends[2] = 1;
    CHECK_THROWS_AS(check_choice(D, C), DomainError);
    C = example_choice();
    C.chosen_ends[1] = 2;  // only one end edge
    CHECK_THROWS_AS(check_choice(D, C), DomainError);
    C = example_choice();
    C.owner.pop_back();
    CHECK_THROWS_AS(check_choice(D, C), DomainError);
  }

  TEST_CASE("enumeration is exhaustive and duplicate free") {
    const PsiFloorDiagram D = example_diagram();
    const auto all = enumerate_choices(D);
    std::set<std::pair<std::vector<EdgeOwner>, std::vector<int>>> seen;
    bool has_example = false;
    for (const EdgeChoice& C : all) {
      CHECK_NOTHROW(check_choice(D, C));
      CHECK(seen.insert({C.owner, C.chosen_ends}).second);
      has_example = has_example || C == example_choice();
    }
    CHECK(has_example);
    // |C(v1)| = 1 from {e0, e1, 1 end}; |C(v2)| = 2 from {e1, e2, 2 ends}.  Count by hand:
    // v1 takes e0: v2 picks 2 of {e1, e2, ends x2 by count} -> {e1,e2},{e1,1},{e2,1},{2 ends} = 4
    // v1 takes e1: v2 picks 2 of {e2, ends} -> {e2,1},{2 ends} = 2
    // v1 takes its end: 4
    CHECK(all.size() == 10);
  }

  TEST_CASE("infeasible floors give no choices") {
    // (1,2) first: needs two chosen edges but has only its outgoing edge.
    CHECK(enumerate_choices(PsiFloorDiagram({{1, 2}, {1, 1}}, {{0, 1, 1}})).empty());
  }
}
