#include <doctest.h>

#include <random>

#include "pmb/posetcheck.hpp"

using namespace pmb;

namespace {

SupportComponent principal(std::int64_t i, std::int64_t j) { return {ComponentKind::Principal, {i, j}}; }
SupportComponent closed(std::int64_t l) { return {ComponentKind::StaircaseClosed, {l, l}}; }
SupportComponent punctured(std::int64_t l) { return {ComponentKind::StaircasePunctured, {l, l}}; }

SupportComponent random_component(std::mt19937_64& rng) {
  const auto kind = static_cast<ComponentKind>(rng() % 3);
  return {kind, {static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3}};
}

/// Minimality on Z^2 through the two immediate predecessors: an upset point c
/// is minimal iff neither c - e1 nor c - e2 is a member.
bool minimal_by_predecessors(const SupportDescriptor& d, const Degree2& c) {
  return member(d, c) && !member(d, {c.i - 1, c.j}) && !member(d, {c.i, c.j - 1});
}

}  // namespace

TEST_SUITE("posetcheck") {

TEST_CASE("membership examples") {
  CHECK(member({{principal(0, 0)}}, {3, 5}));
  CHECK_FALSE(member({{principal(0, 0)}}, {3, -1}));
  CHECK_FALSE(member({{punctured(0)}}, {0, -2}));
  CHECK_FALSE(member({{punctured(0)}}, {-4, 0}));
  CHECK_FALSE(member({{punctured(0)}}, {0, 0}));
  CHECK(member({{punctured(0)}}, {-7, 1}));
  CHECK(member({{punctured(0)}}, {1, 0}));
  CHECK(member({{closed(0)}}, {0, -2}));
  CHECK_FALSE(member({{closed(0)}}, {-1, -1}));
}

TEST_CASE("minimal element examples") {
  CHECK(minimal_elements({{principal(0, 0)}}) == std::vector<Degree2>{{0, 0}});
  CHECK(minimal_elements({{closed(0)}}).empty());
  CHECK(minimal_elements({{principal(2, 2), punctured(0)}}).empty());
  CHECK(minimal_elements({{principal(0, 1), principal(1, 0)}}) == std::vector<Degree2>{{0, 1}, {1, 0}});
  CHECK(minimal_elements({{principal(1, 1), principal(1, 1)}}) == std::vector<Degree2>{{1, 1}});
  CHECK(minimal_elements({{principal(0, 0), principal(2, 3)}}) == std::vector<Degree2>{{0, 0}});
  // Below the punctured level the corner is not dominated.
  CHECK(minimal_elements({{principal(-1, -1), punctured(0)}}) == std::vector<Degree2>{{-1, -1}});
  CHECK(minimal_elements({{principal(0, -3), punctured(0)}}) == std::vector<Degree2>{{0, -3}});
}

TEST_CASE("classification examples") {
  const auto stair = classify({{punctured(0)}});
  CHECK(stair.flat);
  CHECK(stair.not_projective);
  REQUIRE(stair.witness);
  CHECK(*stair.witness == Degree2{1, 1});
  CHECK(stair.conclusion == Conclusion::NotProjectiveFlat);

  const auto single = classify({{principal(0, 0)}});
  CHECK(single.flat);
  CHECK(single.free_by_construction);
  CHECK_FALSE(single.not_projective);
  CHECK(single.conclusion == Conclusion::Free);

  const auto two = classify({{principal(0, 1), principal(1, 0)}});
  CHECK(two.flat);
  CHECK_FALSE(two.free_by_construction);
  CHECK_FALSE(two.not_projective);
  CHECK_FALSE(two.witness);
  CHECK(two.conclusion == Conclusion::NoConclusion);

  const auto level = classify({{punctured(3)}});
  REQUIRE(level.witness);
  CHECK(*level.witness == Degree2{4, 4});

  const auto with_closed = classify({{closed(0)}});
  CHECK(with_closed.not_projective);
  CHECK_FALSE(with_closed.notes.empty());

  CHECK_THROWS_AS(classify({}), std::invalid_argument);
}

TEST_CASE("random descriptors: upsets, minimality and witnesses") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    SupportDescriptor d;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 3); k < n; ++k) d.components.push_back(random_component(rng));
    CAPTURE(trial);

    for (int s = 0; s < 30; ++s) {
      const Degree2 p{static_cast<std::int64_t>(rng() % 15) - 7, static_cast<std::int64_t>(rng() % 15) - 7};
      const Degree2 q{p.i + static_cast<std::int64_t>(rng() % 3), p.j + static_cast<std::int64_t>(rng() % 3)};
      if (member(d, p)) CHECK(member(d, q));
    }

    const auto mins = minimal_elements(d);
    for (const auto& c : mins) CHECK(minimal_by_predecessors(d, c));
    // Every principal corner minimal by the predecessor test is reported.
    for (const auto& comp : d.components) {
      if (comp.kind != ComponentKind::Principal) continue;
      if (minimal_by_predecessors(d, comp.corner)) {
        CHECK(std::find(mins.begin(), mins.end(), comp.corner) != mins.end());
      }
    }

    const auto c = classify(d);
    CHECK(c.flat);
    CHECK_FALSE((c.conclusion == Conclusion::Free && c.not_projective));
    const bool has_staircase = std::any_of(d.components.begin(), d.components.end(),
                                           [](const auto& x) { return x.kind != ComponentKind::Principal; });
    CHECK(c.not_projective == has_staircase);
    if (c.witness) {
      CHECK(member(d, *c.witness));
      for (const auto& m : mins) CHECK_FALSE(leq(m, *c.witness));
    }
  }
}

}  // TEST_SUITE
