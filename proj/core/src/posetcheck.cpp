#include "pmb/posetcheck.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmb {

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Principal: return "principal";
    case ComponentKind::StaircaseClosed: return "staircase_closed";
    case ComponentKind::StaircasePunctured: return "staircase_punctured";
  }
  return "?";
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Free: return "FREE";
    case Conclusion::NotProjectiveFlat: return "NOT_PROJECTIVE_FLAT";
    case Conclusion::NoConclusion: return "NO_CONCLUSION";
  }
  return "?";
}

bool SupportComponent::contains(const Degree2& p) const {
  const Degree2& c = corner;
  switch (kind) {
    case ComponentKind::Principal:
      return leq(c, p);
    case ComponentKind::StaircaseClosed:
      return p.i >= c.i || p.j >= c.j;
    case ComponentKind::StaircasePunctured: {
      const bool on_rays = (p.j == c.j && p.i <= c.i) || (p.i == c.i && p.j <= c.j);
      return (p.i >= c.i || p.j >= c.j) && !on_rays;
    }
  }
  return false;
}

bool SupportComponent::has_member_strictly_below(const Degree2& p) const {
  const Degree2& c = corner;
  switch (kind) {
    case ComponentKind::Principal:
      return leq(c, p) && c != p;
    case ComponentKind::StaircaseClosed:
      return p.i >= c.i || p.j >= c.j;
    case ComponentKind::StaircasePunctured:
      return p.i >= c.i + 1 || p.j >= c.j + 1;
  }
  return false;
}

bool member(const SupportDescriptor& desc, const Degree2& p) {
  return std::any_of(desc.components.begin(), desc.components.end(),
                     [&](const SupportComponent& c) { return c.contains(p); });
}

std::vector<Degree2> minimal_elements(const SupportDescriptor& desc) {
  std::vector<Degree2> out;
  for (const auto& comp : desc.components) {
    if (comp.kind != ComponentKind::Principal) continue;
    const bool dominated = std::any_of(desc.components.begin(), desc.components.end(),
                                       [&](const SupportComponent& o) { return o.has_member_strictly_below(comp.corner); });
    if (!dominated) out.push_back(comp.corner);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Classification classify(const SupportDescriptor& desc) {
  if (desc.components.empty()) throw std::invalid_argument("support descriptor has no components");

  Classification out;
  // Every component is an upset, and sums of upset indicators are flat.
  out.flat = true;
  out.free_by_construction =
      desc.components.size() == 1 && desc.components.front().kind == ComponentKind::Principal;

  const auto staircase = std::find_if(desc.components.begin(), desc.components.end(),
                                      [](const SupportComponent& c) { return c.kind != ComponentKind::Principal; });
  if (staircase != desc.components.end()) {
    // A point on the staircase left of every minimal corner dominates none of them.
    const auto minimals = minimal_elements(desc);
    auto x = staircase->corner.i + 1;
    for (const auto& m : minimals) x = std::min(x, m.i - 1);
    out.not_projective = true;
    out.witness = Degree2{x, staircase->corner.j + 1};
  }

  for (const auto& c : desc.components) {
    if (c.kind == ComponentKind::StaircaseClosed) {
      out.notes.push_back("closed staircase at " + to_string(c.corner) +
                          " has no minimal elements; non-projectivity is reported by the literal criterion");
    }
  }

  if (out.free_by_construction) {
    out.conclusion = Conclusion::Free;
  } else if (out.not_projective) {
    out.conclusion = Conclusion::NotProjectiveFlat;
  } else {
    out.conclusion = Conclusion::NoConclusion;
  }
  return out;
}

}  // namespace pmb
