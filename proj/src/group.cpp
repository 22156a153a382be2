#include "propq/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "propq/linalg.hpp"

namespace propq {

double Quaternion::geodesic_angle() const {
  return 2.0 * std::acos(std::clamp(std::abs(w), 0.0, 1.0));
}

double Quaternion::distance_to(const Quaternion& o) const {
  return std::acos(std::clamp(dot(o), -1.0, 1.0));
}

Quaternion Quaternion::z_rotation(double t) { return {std::cos(t / 2), 0, 0, std::sin(t / 2)}; }
Quaternion Quaternion::y_rotation(double t) { return {std::cos(t / 2), 0, std::sin(t / 2), 0}; }

Quaternion Quaternion::euler_zyz(double phi, double theta, double psi) {
  return z_rotation(phi) * y_rotation(theta) * z_rotation(psi);
}

int GroupModel::compose(int a, int b) const {
  check_index(a);
  check_index(b);
  if (kind == GroupKind::Finite) return table[a][b];
  // Exact quaternion product snapped to the nearest grid point.
  const Quaternion p = quats[a] * quats[b];
  int best = 0;
  double best_dot = -2;
  for (int i = 0; i < n; ++i) {
    const double d = p.dot(quats[i]);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

const Quaternion& GroupModel::quaternion(int a) const {
  check_index(a);
  if (kind != GroupKind::SampledSU2) throw ParameterError("finite groups carry no quaternions");
  return quats[a];
}

double GroupModel::mean_length() const {
  double s = 0;
  for (int i = 0; i < n; ++i) s += weights[i] * lengths[i];
  return s;
}

namespace {

void validate_table(const std::vector<std::vector<int>>& table, int& identity_out) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("group table entry out of range");
  }
  // Latin square: rows and columns are permutations.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int b = 0; b < n; ++b) {
      if (seen_row[table[a][b]]) throw ValidationError("cancellation fails: row " + std::to_string(a) + " repeats an element");
      if (seen_col[table[b][a]]) throw ValidationError("cancellation fails: column " + std::to_string(a) + " repeats an element");
      seen_row[table[a][b]] = true;
      seen_col[table[b][a]] = true;
    }
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("identity axiom fails: no two-sided identity element");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) has_inverse = true;
    if (!has_inverse)
      throw ValidationError("inverse axiom fails for element " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  identity_out = identity;
}

std::vector<int> word_lengths(const std::vector<std::vector<int>>& table, int identity,
                              const std::vector<int>& generators) {
  const int n = static_cast<int>(table.size());
  std::vector<int> gens;
  for (int g : generators) {
    if (g < 0 || g >= n) throw ParameterError("generator index out of range");
    gens.push_back(g);
  }
  // Close the generating set under inverses so word length is symmetric.
  for (int g : generators)
    for (int b = 0; b < n; ++b)
      if (table[g][b] == identity) gens.push_back(b);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<int> dist(n, -1);
  dist[identity] = 0;
  std::deque<int> queue{identity};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      const int y = table[x][g];
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (int a = 0; a < n; ++a)
    if (dist[a] < 0)
      throw ValidationError("generators do not generate: element " + std::to_string(a) +
                            " is unreachable");
  return dist;
}

}  // namespace

GroupModelPtr build_finite_group(const std::vector<std::vector<int>>& table,
                                 const std::vector<int>& generators) {
  auto g = std::make_shared<GroupModel>();
  g->kind = GroupKind::Finite;
  g->table = table;
  g->n = static_cast<int>(table.size());
  validate_table(table, g->identity);

  g->inverse_index.assign(g->n, -1);
  for (int a = 0; a < g->n; ++a)
    for (int b = 0; b < g->n; ++b)
      if (table[a][b] == g->identity && table[b][a] == g->identity) g->inverse_index[a] = b;

  const std::vector<int> words = word_lengths(table, g->identity, generators);

  // Conjugacy classes.
  g->class_index.assign(g->n, -1);
  int next_class = 0;
  for (int a = 0; a < g->n; ++a) {
    if (g->class_index[a] >= 0) continue;
    for (int x = 0; x < g->n; ++x) {
      const int conj = table[table[x][a]][g->inverse_index[x]];
      g->class_index[conj] = next_class;
    }
    ++next_class;
  }

  // Class-max symmetrization keeps l conjugation invariant.
  std::vector<int> class_max(next_class, 0);
  for (int a = 0; a < g->n; ++a)
    class_max[g->class_index[a]] = std::max(class_max[g->class_index[a]], words[a]);
  g->lengths.resize(g->n);
  for (int a = 0; a < g->n; ++a) g->lengths[a] = static_cast<double>(class_max[g->class_index[a]]);

  for (int a = 0; a < g->n; ++a) {
    if ((a == g->identity) != (g->lengths[a] == 0))
      throw ValidationError("length function vanishes off the identity");
    if (g->lengths[a] != g->lengths[g->inverse_index[a]])
      throw ValidationError("length function is not inverse invariant");
  }
  for (int a = 0; a < g->n; ++a)
    for (int b = 0; b < g->n; ++b)
      if (g->lengths[table[a][b]] > g->lengths[a] + g->lengths[b] + 1e-12)
        throw ValidationError("class-max symmetrization broke subadditivity at (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");

  g->weights.assign(g->n, 1.0 / g->n);
  return g;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

namespace {

std::int64_t quantize(double v) { return std::llround(v * 1e9); }

struct QuatKey {
  std::int64_t w, x, y, z;
  bool operator==(const QuatKey& o) const { return w == o.w && x == o.x && y == o.y && z == o.z; }
};

struct QuatKeyHash {
  std::size_t operator()(const QuatKey& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::int64_t v : {k.w, k.x, k.y, k.z}) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

QuatKey key_of(const Quaternion& q) {
  return {quantize(q.w), quantize(q.x), quantize(q.y), quantize(q.z)};
}

}  // namespace

GroupModelPtr build_su2_grid(int resolution) {
  if (resolution < 2) throw ParameterError("su2 grid resolution must be >= 2");
  auto g = std::make_shared<GroupModel>();
  g->kind = GroupKind::SampledSU2;

  const int n_theta = resolution;
  const int n_phi = resolution + (resolution % 2);  // even, so inverses stay on the grid
  const int n_psi = 2 * n_phi;

  // Zero-weight copy of the z-axis circle; index 0 is the identity. The point
  // psi = 2*pi (the central element -1) is skipped so l > 0 off the identity.
  for (int c = 0; c < n_psi; ++c) {
    if (2 * c == n_psi) continue;
    g->quats.push_back(Quaternion::z_rotation(4.0 * M_PI * c / n_psi));
    g->weights.push_back(0.0);
  }

  std::vector<double> u_nodes, u_weights;
  gauss_legendre(n_theta, u_nodes, u_weights);
  for (int b = 0; b < n_theta; ++b) {
    const double theta = std::acos(std::clamp(u_nodes[n_theta - 1 - b], -1.0, 1.0));
    const double wt = u_weights[n_theta - 1 - b] / 2.0 / n_phi / n_psi;
    for (int a = 0; a < n_phi; ++a)
      for (int c = 0; c < n_psi; ++c) {
        g->quats.push_back(Quaternion::euler_zyz(2.0 * M_PI * a / n_phi, theta,
                                                 4.0 * M_PI * c / n_psi));
        g->weights.push_back(wt);
      }
  }

  g->n = static_cast<int>(g->quats.size());
  g->identity = 0;

  double total = 0;
  for (double w : g->weights) total += w;
  for (double& w : g->weights) w /= total;

  g->lengths.resize(g->n);
  for (int i = 0; i < g->n; ++i) g->lengths[i] = g->quats[i].geodesic_angle();

  std::unordered_map<QuatKey, int, QuatKeyHash> lookup;
  lookup.reserve(g->n * 2);
  for (int i = 0; i < g->n; ++i) lookup.emplace(key_of(g->quats[i]), i);
  g->inverse_index.resize(g->n);
  for (int i = 0; i < g->n; ++i) {
    const auto it = lookup.find(key_of(g->quats[i].conjugate()));
    if (it == lookup.end())
      throw ValidationError("su2 grid is not closed under inverse (internal grid error)");
    g->inverse_index[i] = it->second;
  }

  // Estimate the snap error of compose() on deterministic sample pairs.
  double worst = 0;
  std::mt19937_64 rng(mix_seed(0x5052504fu, resolution));
  std::uniform_int_distribution<int> pick(0, g->n - 1);
  for (int t = 0; t < 128; ++t) {
    const Quaternion p = g->quats[pick(rng)] * g->quats[pick(rng)];
    double best = -2;
    for (int i = 0; i < g->n; ++i) best = std::max(best, p.dot(g->quats[i]));
    worst = std::max(worst, std::acos(std::clamp(best, -1.0, 1.0)));
  }
  g->comp_tol = worst;
  return g;
}

}  // namespace propq
