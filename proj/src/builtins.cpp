#include "propq/builtins.hpp"

#include <array>
#include <cmath>
#include <map>

namespace propq {

namespace {

std::vector<std::vector<int>> table_from_perms(const std::vector<std::vector<int>>& elems) {
  const int n = static_cast<int>(elems.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(elems[a].size());
      for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = elems[a][elems[b][k]];
      table[a][b] = index.at(prod);
    }
  return table;
}

BuiltinGroup make_s3() {
  BuiltinGroup g;
  g.name = "S3";
  // Elements in the order e, r, r^2, t, tr, tr^2 with r = (0 1 2), t = (0 1).
  const std::vector<int> r = {1, 2, 0}, t = {1, 0, 2}, e = {0, 1, 2};
  auto mul = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> p(a.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = a[b[k]];
    return p;
  };
  const std::vector<std::vector<int>> elems = {e, r, mul(r, r), t, mul(t, r), mul(t, mul(r, r))};
  g.table = table_from_perms(elems);
  g.generators = {3, 1};  // a transposition and a 3-cycle

  const double c = std::cos(2.0 * M_PI / 3.0), s = std::sin(2.0 * M_PI / 3.0);
  Mat rot(2, 2), refl(2, 2);
  rot << c, -s, s, c;
  refl << 1, 0, 0, -1;
  std::vector<Mat> u = {Mat::Identity(2, 2), rot, rot * rot, refl, refl * rot, refl * rot * rot};
  g.irrep = std::move(u);
  g.irrep_label = "S3-standard";
  return g;
}

BuiltinGroup make_z2() {
  BuiltinGroup g;
  g.name = "Z2";
  g.table = {{0, 1}, {1, 0}};
  g.generators = {1};
  Mat one(1, 1), sign(1, 1);
  one << 1;
  sign << -1;
  g.irrep = {one, sign};
  g.irrep_label = "Z2-sign";
  return g;
}

BuiltinGroup make_q8() {
  BuiltinGroup g;
  g.name = "Q8";
  // Order: 1, -1, i, -i, j, -j, k, -k
  const Cplx I(0, 1);
  Mat one = Mat::Identity(2, 2);
  Mat qi(2, 2), qj(2, 2), qk(2, 2);
  qi << I, 0, 0, -I;        // i sigma_z
  qj << 0, 1, -1, 0;        // i sigma_y
  qk << 0, I, I, 0;         // i sigma_x
  const std::vector<Mat> mats = {one, -one, qi, -qi, qj, -qj, qk, -qk};
  const int n = 8;
  auto find = [&](const Mat& m) {
    for (int i = 0; i < n; ++i)
      if ((mats[i] - m).cwiseAbs().maxCoeff() < 1e-9) return i;
    throw ValidationError("Q8 construction error");
  };
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = find(mats[a] * mats[b]);
  g.generators = {2, 4};  // i and j
  g.irrep = mats;
  g.irrep_label = "Q8-2dim";
  return g;
}

const std::vector<BuiltinGroup>& builtins() {
  static const std::vector<BuiltinGroup> all = {make_s3(), make_z2(), make_q8()};
  return all;
}

/// Extends a partial generator image to a full isomorphism, or fails.
bool extend_isomorphism(const std::vector<std::vector<int>>& src,
                        const std::vector<std::vector<int>>& dst, int src_id, int dst_id,
                        const std::vector<int>& src_gens, const std::vector<int>& gen_images,
                        std::vector<int>& iso_out) {
  const int n = static_cast<int>(src.size());
  std::vector<int> iso(n, -1);
  iso[src_id] = dst_id;
  // Closure: repeatedly apply known images of generators.
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n; ++x) {
      if (iso[x] < 0) continue;
      for (std::size_t k = 0; k < src_gens.size(); ++k) {
        const int y = src[x][src_gens[k]];
        const int img = dst[iso[x]][gen_images[k]];
        if (iso[y] < 0) {
          iso[y] = img;
          grew = true;
        } else if (iso[y] != img) {
          return false;
        }
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (int x = 0; x < n; ++x) {
    if (iso[x] < 0) return false;
    if (hit[iso[x]]) return false;
    hit[iso[x]] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (iso[src[a][b]] != dst[iso[a]][iso[b]]) return false;
  iso_out = iso;
  return true;
}

int element_order(const std::vector<std::vector<int>>& table, int id, int x) {
  int y = x, ord = 1;
  while (y != id) {
    y = table[y][x];
    ++ord;
  }
  return ord;
}

}  // namespace

const BuiltinGroup& builtin_group(const std::string& name) {
  for (const auto& g : builtins())
    if (g.name == name) return g;
  throw ParameterError("unknown built-in group '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> names;
  for (const auto& g : builtins()) names.push_back(g.name);
  return names;
}

std::pair<GroupModelPtr, RepresentationPtr> make_builtin(const std::string& name) {
  const auto& b = builtin_group(name);
  auto group = build_finite_group(b.table, b.generators);
  auto rep = make_representation(group, b.irrep, b.irrep_label);
  return {group, rep};
}

namespace {

std::vector<int> closure_of(const std::vector<std::vector<int>>& table, int id,
                            const std::vector<int>& gens) {
  const int n = static_cast<int>(table.size());
  std::vector<bool> seen(n, false);
  std::vector<int> frontier{id};
  seen[id] = true;
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      const int y = table[x][g];
      if (!seen[y]) {
        seen[y] = true;
        frontier.push_back(y);
      }
    }
  }
  std::vector<int> reached;
  for (int x = 0; x < n; ++x)
    if (seen[x]) reached.push_back(x);
  return reached;
}

std::vector<int> greedy_generators(const std::vector<std::vector<int>>& table, int id) {
  const int n = static_cast<int>(table.size());
  std::vector<int> gens;
  while (static_cast<int>(closure_of(table, id, gens).size()) < n) {
    const auto reached = closure_of(table, id, gens);
    std::vector<bool> seen(n, false);
    for (int x : reached) seen[x] = true;
    for (int x = 0; x < n; ++x)
      if (!seen[x]) {
        gens.push_back(x);
        break;
      }
  }
  return gens;
}

bool search_images(const std::vector<std::vector<int>>& src, const std::vector<std::vector<int>>& dst,
                   int src_id, int dst_id, const std::vector<int>& src_gens,
                   std::vector<int>& images, std::size_t depth, std::vector<int>& iso_out) {
  const int n = static_cast<int>(src.size());
  if (depth == src_gens.size())
    return extend_isomorphism(src, dst, src_id, dst_id, src_gens, images, iso_out);
  const int want_order = element_order(src, src_id, src_gens[depth]);
  for (int img = 0; img < n; ++img) {
    if (element_order(dst, dst_id, img) != want_order) continue;
    images[depth] = img;
    if (search_images(src, dst, src_id, dst_id, src_gens, images, depth + 1, iso_out)) return true;
  }
  return false;
}

}  // namespace

std::optional<RepresentationPtr> builtin_irrep_for_table(GroupModelPtr group) {
  if (!group || !group->finite()) return std::nullopt;
  const int n = group->size();
  for (const auto& b : builtins()) {
    if (static_cast<int>(b.table.size()) != n) continue;
    int dst_id = -1;
    for (int e = 0; e < n && dst_id < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = b.table[e][a] == a && b.table[a][e] == a;
      if (ok) dst_id = e;
    }
    const std::vector<int> src_gens = greedy_generators(group->table, group->identity);
    std::vector<int> images(src_gens.size(), -1), iso;
    if (!search_images(group->table, b.table, group->identity, dst_id, src_gens, images, 0, iso))
      continue;
    std::vector<Mat> mats(n);
    for (int x = 0; x < n; ++x) mats[x] = b.irrep[iso[x]];
    return make_representation(group, std::move(mats), b.irrep_label);
  }
  return std::nullopt;
}

}  // namespace propq
