#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmb/module.hpp"

namespace pmb {

enum class ComponentKind { Principal, StaircaseClosed, StaircasePunctured };

const char* to_string(ComponentKind kind);  // "principal", "staircase_closed", ...

/// One upset of Z^2 given in closed form.
///
/// principal at c:           {p : p >= c}
/// staircase_closed at c:    {p : p.i >= c.i or p.j >= c.j}
/// staircase_punctured at c: staircase_closed minus the two rays
///                           {(t, c.j) : t <= c.i} and {(c.i, t) : t <= c.j}
///
/// Staircases are usually given at a diagonal corner (l, l).
struct SupportComponent {
  ComponentKind kind = ComponentKind::Principal;
  Degree2 corner;

  bool contains(const Degree2& p) const;
  /// Whether some member q of this component satisfies q <= p, q != p.
  bool has_member_strictly_below(const Degree2& p) const;
};

/// Direct sum of indicator modules on the components; the support is their
/// union.
struct SupportDescriptor {
  std::vector<SupportComponent> components;
};

bool member(const SupportDescriptor& desc, const Degree2& p);

/// Minimal elements of the support, sorted and deduplicated. Only principal
/// corners can be minimal; staircases descend forever.
std::vector<Degree2> minimal_elements(const SupportDescriptor& desc);

enum class Conclusion { Free, NotProjectiveFlat, NoConclusion };

const char* to_string(Conclusion c);  // "FREE", "NOT_PROJECTIVE_FLAT", "NO_CONCLUSION"

struct Classification {
  bool flat = true;
  bool free_by_construction = false;
  bool not_projective = false;
  /// A support point below which no minimal element lies.
  std::optional<Degree2> witness;
  Conclusion conclusion = Conclusion::NoConclusion;
  std::vector<std::string> notes;
};

/// Throws std::invalid_argument on an empty descriptor.
Classification classify(const SupportDescriptor& desc);

}  // namespace pmb
