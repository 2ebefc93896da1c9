#include "psifloor/verify.hpp"

#include <algorithm>
#include <functional>

#include "psifloor/engine.hpp"

namespace psifloor {

PsiFloorDiagram example_diagram() {
  return PsiFloorDiagram({{1, 0}, {2, 3}, {1, 2}, {1, 0}}, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}});
}

EdgeChoice example_choice() {
  EdgeChoice c;
  c.owner = {EdgeOwner::Target, EdgeOwner::None, EdgeOwner::None};
  c.chosen_ends = {0, 0, 2, 0};
  return c;
}

CompatiblePair example_pair() {
  const IntSeq zero(SeqBase::One);
  CompatiblePair p;
  p.alpha = {zero, zero, zero, IntSeq(SeqBase::One, {1})};
  p.beta = {zero, IntSeq(SeqBase::One, {1}), IntSeq(SeqBase::One, {0, 1}), IntSeq(SeqBase::One, {1})};
  return p;
}

RelativeEdgeChoice example_relative_choice() {
  RelativeEdgeChoice c;
  c.owner = {EdgeOwner::Target, EdgeOwner::Target, EdgeOwner::None};
  c.chosen_beta = {IntSeq(SeqBase::One), IntSeq(SeqBase::One), IntSeq(SeqBase::One, {0, 1}), IntSeq(SeqBase::One)};
  return c;
}

namespace {

struct Fixture {
  std::string name;
  std::string expected;
  std::function<std::string()> actual;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  out.push_back({"diagram-multiplicity", "4", [] { return to_string(diagram_multiplicity(example_diagram())); }});
  out.push_back({"diagram-signature", "5;7,0,1,1", [] {
                   DiagramSignature s = signature(example_diagram());
                   return std::to_string(s.degree) + ";" + s.type.to_string();
                 }});
  out.push_back({"choice-multiplicity", "1/2",
                 [] { return to_string(choice_multiplicity(example_diagram(), example_choice())); }});
  out.push_back({"marking-count", "7", [] { return count_markings(example_diagram(), example_choice()).get_str(); }});
  out.push_back({"relative-diagram-multiplicity", "8",
                 [] { return to_string(relative_diagram_multiplicity(example_diagram(), example_pair())); }});
  out.push_back({"relative-choice-multiplicity", "1/2", [] {
                   return to_string(
                       relative_choice_multiplicity(example_diagram(), example_pair(), example_relative_choice()));
                 }});
  out.push_back({"relative-marking-count", "5", [] {
                   return count_relative_markings(example_diagram(), example_pair(), example_relative_choice()).get_str();
                 }});
  out.push_back({"tilde-floor-4", "1/4", [] {
                   return to_string(floor_tilde_trace(4, IntSeq(SeqBase::Zero, {1, 0, 0, 0, 2}), {4, 4, 0}).total);
                 }});
  // Listed largest first; enumeration order is not part of the claim.
  out.push_back({"tilde-floor-4-contributions", "1/8,1/12,1/24", [] {
                   TildeTrace t = floor_tilde_trace(4, IntSeq(SeqBase::Zero, {1, 0, 0, 0, 2}), {4, 4, 0});
                   std::vector<Rational> values;
                   for (const TraceEntry& e : t.entries) values.push_back(e.contribution);
                   std::sort(values.begin(), values.end(), std::greater<>());
                   std::vector<std::string> parts;
                   for (const Rational& v : values) parts.push_back(to_string(v));
                   return join(parts);
                 }});
  out.push_back({"stirling", "3,1", [] { return stirling2(3, 2).get_str() + "," + stirling2(3, 1).get_str(); }});
  out.push_back({"p1-one-point", "1,1/4,1/36,1/576", [] {
                   std::vector<std::string> parts;
                   for (int d = 1; d <= 4; ++d) parts.push_back(to_string(p1_invariant(d, 0)));
                   return join(parts);
                 }});
  return out;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const Fixture& f : fixtures()) names.push_back(f.name);
  return names;
}

std::vector<FixtureResult> run_fixtures(const std::string& filter) {
  std::vector<FixtureResult> out;
  for (const Fixture& f : fixtures()) {
    if (!filter.empty() && f.name.find(filter) == std::string::npos) continue;
    FixtureResult r{f.name, f.expected, "", false};
    try {
      r.actual = f.actual();
      r.pass = r.actual == r.expected;
    } catch (const std::exception& ex) {
      r.actual = std::string("error: ") + ex.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace psifloor
