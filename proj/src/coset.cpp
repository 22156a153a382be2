#include "propq/coset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace propq {

namespace {

/// min over the continuous z-axis circle of l(q * Z(t)); exact for torus
/// stabilizers. Re(q Z(t)) sweeps a circle of radius sqrt(w^2 + z^2).
double torus_quotient_length(const Quaternion& q) {
  const double r = std::sqrt(q.w * q.w + q.z * q.z);
  return 2.0 * std::acos(std::clamp(r, 0.0, 1.0));
}

}  // namespace

CosetSpacePtr coset_space(GroupModelPtr group, const ProjectionData& stability) {
  if (!group) throw ParameterError("null group");
  if (stability.rep->group.get() != group.get())
    throw ParameterError("stability data belongs to a different group");

  auto cs = std::make_shared<CosetSpace>();
  cs->group = group;
  const int n = group->size();
  cs->coset_of.assign(n, -1);

  const bool finite = group->finite();
  std::set<int> stab_set(stability.stability_elements.begin(), stability.stability_elements.end());
  if (stab_set.empty()) throw ValidationError("empty stability set");

  double partition_tol = std::max(stability.tol, 1e-9);
  bool torus = false;
  if (!finite) {
    torus = true;
    for (int s : stability.stability_elements) {
      const Quaternion& q = group->quaternion(s);
      if (std::sqrt(q.x * q.x + q.y * q.y) > partition_tol) torus = false;
    }
  }
  cs->torus_stabilizer = torus;

  auto same_coset = [&](int rep_elt, int x) {
    if (finite) return stab_set.count(group->table[group->inverse(rep_elt)][x]) > 0;
    const Quaternion d = group->quaternion(rep_elt).conjugate() * group->quaternion(x);
    if (torus) return std::sqrt(d.x * d.x + d.y * d.y) <= partition_tol;
    for (int s : stability.stability_elements)
      if (d.distance_to(group->quaternion(s)) <= partition_tol) return true;
    return false;
  };

  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (int c = 0; c < cs->size(); ++c) {
      if (same_coset(cs->reps[c], x)) {
        if (found >= 0)
          throw ValidationError("coset partition failure: element " + std::to_string(x) +
                                " matches two cosets");
        found = c;
      }
    }
    if (found < 0) {
      cs->reps.push_back(x);
      cs->members.emplace_back();
      found = cs->size() - 1;
    }
    cs->members[found].push_back(x);
    cs->coset_of[x] = found;
  }

  const int nc = cs->size();
  cs->weights.assign(nc, 0.0);
  for (int c = 0; c < nc; ++c)
    for (int x : cs->members[c]) cs->weights[c] += group->haar_weight(x);
  cs->base_index = cs->coset_of[group->identity];

  cs->metric = RMat::Zero(nc, nc);
  for (int i = 0; i < nc; ++i) {
    for (int j = i + 1; j < nc; ++j) {
      double rho;
      if (finite) {
        rho = std::numeric_limits<double>::infinity();
        const int d = group->table[group->inverse(cs->reps[i])][cs->reps[j]];
        for (int h : stability.stability_elements)
          rho = std::min(rho, group->length(group->table[d][h]));
      } else {
        const Quaternion d =
            group->quaternion(cs->reps[i]).conjugate() * group->quaternion(cs->reps[j]);
        if (torus) {
          rho = torus_quotient_length(d);
        } else {
          rho = std::numeric_limits<double>::infinity();
          for (int h : stability.stability_elements)
            rho = std::min(rho, (d * group->quaternion(h)).geodesic_angle());
        }
      }
      cs->metric(i, j) = cs->metric(j, i) = rho;
    }
  }

  // Metric axioms, expected exact up to float noise.
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) {
      if (i != j && cs->metric(i, j) <= 1e-12)
        throw ValidationError("quotient metric degenerates on distinct cosets");
      for (int k = 0; k < nc; ++k)
        if (cs->metric(i, j) > cs->metric(i, k) + cs->metric(k, j) + 1e-10)
          throw ValidationError("quotient metric violates the triangle inequality");
    }

  double wsum = 0;
  for (double w : cs->weights) wsum += w;
  if (std::abs(wsum - 1.0) > 1e-12) throw ValidationError("coset weights do not sum to 1");
  return cs;
}

}  // namespace propq
