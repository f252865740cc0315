#include "carter/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace carter {

char family_letter(Family f) noexcept {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

bool AdeType::is_valid() const noexcept {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
  }
  return false;
}

void AdeType::validate() const {
  if (!is_valid()) throw std::invalid_argument("invalid simply-laced type " + name());
}

std::string AdeType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

AdeType AdeType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed type '" + std::string(text) + "'");
  AdeType t;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': t.family = Family::A; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    default: throw std::invalid_argument("unknown family in '" + std::string(text) + "'");
  }
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), t.rank);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed rank in '" + std::string(text) + "'");
  t.validate();
  return t;
}

std::vector<IntVector> cartan_matrix(AdeType type) {
  type.validate();
  const int n = type.rank;
  std::vector<IntVector> c(n, IntVector(n, 0));
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-..., 2-4 (1-based Bourbaki)
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
  }
  return c;
}

RootSystem::RootSystem(AdeType type) : type_(type), cartan_(cartan_matrix(type)) {
  const int n = type.rank;
  std::set<Coords> found;
  std::vector<Coords> frontier;
  for (int i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  // Closure under simple reflections; finite because W is finite.
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& v : frontier)
      for (int i = 0; i < n; ++i) {
        Coords w = simple_reflect(i, v);
        if (found.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  roots_.assign(found.begin(), found.end());

  for (const auto& r : roots_) {
    if (!std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) continue;
    if (maximal_.empty() || std::accumulate(r.begin(), r.end(), 0) > std::accumulate(maximal_.begin(), maximal_.end(), 0))
      maximal_ = r;
  }
  for (const auto& r : roots_) {
    if (!std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) continue;
    for (int i = 0; i < n; ++i)
      if (r[i] > maximal_[i]) throw std::logic_error("no dominating maximal root in " + type.name());
  }
}

Coords RootSystem::simple(int i) const {
  Coords e(rank(), 0);
  e.at(i) = 1;
  return e;
}

int RootSystem::inner(std::span<const int> u, std::span<const int> v) const {
  const auto n = static_cast<std::size_t>(rank());
  if (u.size() != n || v.size() != n) throw ShapeError("inner product: vector is not in the ambient " + type_.name());
  int sum = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (u[r] == 0) continue;
    int row = 0;
    for (std::size_t c = 0; c < n; ++c) row += cartan_[r][c] * v[c];
    sum += u[r] * row;
  }
  return sum;
}

bool RootSystem::is_root(std::span<const int> v) const { return index_of(v) >= 0; }

int RootSystem::index_of(std::span<const int> v) const {
  const Coords key(v.begin(), v.end());
  const auto it = std::lower_bound(roots_.begin(), roots_.end(), key);
  if (it == roots_.end() || *it != key) return -1;
  return static_cast<int>(it - roots_.begin());
}

Coords RootSystem::reflect(std::span<const int> r, std::span<const int> v) const {
  const int k = inner(v, r);
  Coords out(v.begin(), v.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * r[i];
  return out;
}

Coords RootSystem::simple_reflect(int i, std::span<const int> v) const {
  int k = 0;
  for (int c = 0; c < rank(); ++c) k += cartan_[i][c] * v[c];
  Coords out(v.begin(), v.end());
  out[i] -= k;
  return out;
}

std::shared_ptr<const RootSystem> root_system(AdeType type) {
  static std::mutex mutex;
  static std::map<AdeType, std::shared_ptr<const RootSystem>> cache;
  type.validate();
  std::lock_guard lock(mutex);
  auto& slot = cache[type];
  if (!slot) slot = std::make_shared<const RootSystem>(type);
  return slot;
}

RootSystem generate(AdeType type) { return RootSystem(type); }

int inner(const RootSystem& rs, std::span<const int> u, std::span<const int> v) { return rs.inner(u, v); }

const Coords& maximal_root(const RootSystem& rs) { return rs.maximal(); }

bool in_span(std::span<const int> v, const std::vector<Coords>& basis) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  const std::size_t dim = v.size();
  RatMatrix m(dim, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (basis[c].size() != dim) throw ShapeError("in_span: basis vector from a different ambient");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = basis[c][r];
  }
  const RatVector rhs = to_rational(v);
  return rank_and_solve(m, rhs).solution.has_value();
}

Coords negate(std::span<const int> v) {
  Coords out(v.begin(), v.end());
  for (auto& x : out) x = -x;
  return out;
}

Coords add(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size()) throw ShapeError("vector sum: dimension mismatch");
  Coords out(u.begin(), u.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
  return out;
}

Coords sub(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size()) throw ShapeError("vector difference: dimension mismatch");
  Coords out(u.begin(), u.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v[i];
  return out;
}

}  // namespace carter
