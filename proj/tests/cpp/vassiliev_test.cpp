#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "wriggle/codec.hpp"
#include "wriggle/errors.hpp"
#include "wriggle/invariants.hpp"
#include "wriggle/vassiliev.hpp"

using namespace wriggle;
using testsupport::closed;
using testsupport::singular;

namespace {

bool has_violation(const ValidationReport& report, ViolationKind kind) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_SUITE("vassiliev") {

TEST_CASE("classical diagrams embed as singular tangles") {
  const SingularTangle s = as_singular(closed("O1+ O2+ U1+ U2+"));
  CHECK(s.singular.empty());
  CHECK(s.classical.size() == 2);
  CHECK(validate_singular(s).ok());
  CHECK(extension(s) == self_crossing_wriggle(closed("O1+ O2+ U1+ U2+")));
}

TEST_CASE("singular validation keeps id spaces apart") {
  SingularTangle s = singular("tangle\nclosed : O1+ P2* U1+ Q2*\n");
  CHECK(validate_singular(s).ok());

  SingularTangle clash = s;
  clash.components[0].passages[1].crossing = 1;
  clash.components[0].passages[3].crossing = 1;
  std::map<int, int> signs{{1, 1}};
  CHECK_THROWS_AS(assemble_singular(clash.components, signs), InvalidDiagramError);

  SingularTangle twop = s;
  twop.components[0].passages[3] = SPassage{2, SRole::P};
  CHECK(has_violation(validate_singular(twop), ViolationKind::DuplicateRole));
}

TEST_CASE("resolution follows the P/Q convention") {
  const SingularTangle s = singular("tangle\nclosed : O1+ P2* U1+ Q2*\n");
  CHECK(serialize_tangle(resolve(s, {{2, 1}})) == "tangle\nclosed : O1+ O2+ U1+ U2+\n");
  CHECK(serialize_tangle(resolve(s, {{2, -1}})) == "tangle\nclosed : O1+ U2- U1+ O2-\n");

  const SingularTangle plain = as_singular(closed("O1+ U1+"));
  CHECK(resolve(plain, {}) == closed("O1+ U1+"));

  CHECK_THROWS_AS(resolve(s, {}), PartialAssignmentError);
  CHECK_THROWS_AS(resolve(s, {{2, 0}}), PartialAssignmentError);
}

TEST_CASE("resolving one double point keeps the others") {
  const SingularTangle s = singular("tangle\nclosed : P1* P2* Q1* Q2*\n");
  const SingularTangle half = resolve_one(s, 1, 1);
  CHECK(half.singular.size() == 1);
  CHECK(half.classical.size() == 1);
  CHECK(extension(s) == extension(resolve_one(s, 1, 1)) - extension(resolve_one(s, 1, -1)));
}

TEST_CASE("the extension reproduces the singular trefoil value") {
  const SingularTangle s = singular("tangle\nclosed : O1+ P2* U1+ Q2*\n");
  CHECK(polynomial_to_text(extension(s)) == "t1 + t1^-1 - 2");
}

TEST_CASE("two double points always cancel") {
  CHECK(extension(singular("tangle\nclosed : P1* P2* Q1* Q2*\n")).is_zero());
  CHECK(extension(singular("tangle\nclosed : P1* O3+ Q1* P2* U3+ Q2*\n")).is_zero());
  CHECK(extension(singular("tangle\nclosed : P1* Q2*\nclosed : Q1* P2*\n")).is_zero());
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    CHECK(extension(testsupport::random_two_double_points(5, seed)).is_zero());
  }
}

TEST_CASE("the extension ignores singular id labels") {
  const SingularTangle s = singular("tangle\nclosed : P7* O2+ Q7* P5* U2+ Q5*\n");
  CHECK(extension(relabel_canonical_singular(s)) == extension(s));
  CHECK(serialize_tangle(relabel_canonical_singular(s)) ==
        "tangle\nclosed : P1* O2+ Q1* P3* U2+ Q3*\n");
}

TEST_CASE("the multilinear recursion holds on random singular tangles") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const SingularTangle s = testsupport::random_two_double_points(4, seed);
    const int x = s.singular.begin()->first;
    CHECK(extension(s) == extension(resolve_one(s, x, 1)) - extension(resolve_one(s, x, -1)));
  }
}

TEST_CASE("witness search finds order-one certificates") {
  CHECK(order_witness_search(0, 1).empty());

  const auto witnesses = order_witness_search(1, 1);
  REQUIRE(witnesses.size() == 4);
  for (const auto& w : witnesses) {
    CHECK_FALSE(w.value.is_zero());
    CHECK(polynomial_to_text(w.value) == "t1 + t1^-1 - 2");
    CHECK(w.value == extension(w.tangle));
  }

  const auto sampled = order_witness_search(2, 1, 7, 400);
  CHECK_FALSE(sampled.empty());
  for (const auto& w : sampled) CHECK_FALSE(w.value.is_zero());
  const auto again = order_witness_search(2, 1, 7, 400);
  REQUIRE(sampled.size() == again.size());
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    CHECK(serialize_tangle(sampled[i].tangle) == serialize_tangle(again[i].tangle));
  }
}

}  // TEST_SUITE
