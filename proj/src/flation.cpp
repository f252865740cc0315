#include "carter/flation.hpp"

#include <algorithm>
#include <functional>

namespace carter {

UnitForm::UnitForm(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || !matrix_.is_symmetric()) throw std::invalid_argument("unit form must be symmetric");
  if (!matrix_.is_integral()) throw std::invalid_argument("unit form must be integral");
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    if (matrix_(i, i) != Rational(2)) throw std::invalid_argument("unit form must have 2 on the diagonal");
}

RatMatrix Flation::matrix(std::size_t n) const {
  RatMatrix t = RatMatrix::identity(n);
  t(j, i) = -sign;
  return t;
}

RatMatrix gabrielov_step(const RatMatrix& b, int i, int j) {
  if (i == j) throw std::invalid_argument("gabrielov_step needs i != j");
  RatMatrix g = RatMatrix::identity(b.rows());
  g(i, j) -= b(i, j);
  return b * g;
}

UnitForm apply_flation(const UnitForm& b, const Flation& f) {
  const int n = static_cast<int>(b.size());
  if (f.i == f.j || f.i < 0 || f.j < 0 || f.i >= n || f.j >= n) throw std::out_of_range("flation indices");
  const int bij = b.entry(f.i, f.j);
  if (bij == 0) throw FlationError("flation at a zero entry is a no-op");
  if (bij > 1 || bij < -1) throw FlationError("off-diagonal entry of magnitude >= 2");
  if (f.sign * bij != 1) throw FlationError("flation sign must satisfy ε b_ij = |b_ij|");
  return UnitForm(congruent(f.matrix(b.size()), b.matrix()));
}

Reduction ovsienko_reduce(const UnitForm& b) {
  if (!is_positive_definite(b.matrix())) throw FlationError("unit form is not positive definite");
  const std::size_t n = b.size();
  Reduction out;
  out.certificate = RatMatrix::identity(n);
  UnitForm cur = b;
  const std::size_t cap = 10 * n * n;
  for (;;) {
    int pi = -1, pj = -1;
    for (std::size_t i = 0; i < n && pi < 0; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const int e = cur.entry(i, j);
        if (e > 1 || e < -1) throw FlationError("off-diagonal entry of magnitude >= 2");
        if (e > 0) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
          break;
        }
      }
    if (pi < 0) break;
    if (out.steps.size() >= cap) throw FlationError("reduction exceeded " + std::to_string(cap) + " steps");
    const Flation f{pi, pj, 1};
    cur = apply_flation(cur, f);
    out.certificate = out.certificate * f.matrix(n);
    out.steps.push_back(f);
  }
  out.reduced = cur.matrix();
  out.types = recognize_dynkin(cur);
  return out;
}

std::vector<AdeType> recognize_dynkin(const UnitForm& b) {
  const int n = static_cast<int>(b.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int e = b.entry(i, j);
      if (e == -1) adj[i].push_back(j);
      else if (e != 0) throw FlationError("off-diagonal entry outside {0,-1}");
    }

  std::vector<AdeType> out;
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = s;
    std::size_t edges = 0;
    for (std::size_t h = 0; h < nodes.size(); ++h)
      for (int w : adj[nodes[h]]) {
        ++edges;
        if (comp[w] < 0) {
          comp[w] = s;
          nodes.push_back(w);
        }
      }
    edges /= 2;
    const int size = static_cast<int>(nodes.size());
    if (edges != nodes.size() - 1) throw FlationError("component contains a cycle");

    std::vector<int> branch;
    for (int v : nodes) {
      if (adj[v].size() >= 4) throw FlationError("vertex of degree >= 4");
      if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) {
      out.push_back({Family::A, size});
      continue;
    }
    if (branch.size() > 1) throw FlationError("more than one branch vertex");

    std::vector<int> arms;
    for (int start : adj[branch[0]]) {
      int prev = branch[0], cur = start, len = 1;
      while (adj[cur].size() == 2) {
        const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) out.push_back({Family::D, size});
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) out.push_back({Family::E, size});
    else throw FlationError("branching pattern is not of type D or E");
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace carter
