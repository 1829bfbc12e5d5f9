#include <limits>
#include <queue>

#include "excpoly/monodromy.hpp"

namespace excpoly::monodromy {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

PermAction::PermAction(std::uint64_t q) : q_(q) {
  if (q != 4 && q != 8 && q != 16 && q != 32)
    throw DomainError("the pair action supports q in {4, 8, 16, 32}");
  e_ = *ff::exact_log(2, q);
  big_ = ff::make_field(2, 2 * e_);
  const ff::Field& L = *big_;

  std::vector<Index> small;
  pair_id_.assign(L.order(), kNone);
  for (Index x = 0; x < L.order(); ++x) {
    const Index xq = L.pow(x, q);
    if (xq == x) {
      small.push_back(x);
    } else if (x < xq) {
      pair_id_[x] = pair_id_[xq] = reps_.size();
      reps_.push_back(x);
    }
  }

  for (Index a : small)
    for (Index d : small)
      for (Index b : small)
        if (L.add(L.mul(a, d), b) != 0) group_.push_back({a, b, 1, d});
  for (Index a : small)
    if (a != 0)
      for (Index b : small) group_.push_back({a, b, 0, 1});

  const Index g = L.pow(L.generator(), q + 1);
  gens_ = {{1, 1, 0, 1}, {g, 0, 0, 1}, {0, 1, 1, 0}};
}

Index PermAction::apply(const Mobius& m, Index x) const {
  const ff::Field& L = *big_;
  const Index num = L.add(L.mul(m.a, x), m.b);
  const Index den = L.add(L.mul(m.c, x), m.d);
  return L.div(num, den);
}

std::vector<std::size_t> PermAction::permutation(const Mobius& m, unsigned j) const {
  const ff::Field& L = *big_;
  std::vector<std::size_t> perm(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    perm[i] = pair_id_[apply(m, L.frobenius(reps_[i], j))];
  return perm;
}

std::size_t PermAction::orbit_size() const {
  std::vector<char> seen(reps_.size(), 0);
  std::queue<std::size_t> todo;
  seen[0] = 1;
  todo.push(0);
  std::size_t n = 1;
  while (!todo.empty()) {
    const Index x = reps_[todo.front()];
    todo.pop();
    for (const auto& m : gens_) {
      const std::size_t y = pair_id_[apply(m, x)];
      if (!seen[y]) {
        seen[y] = 1;
        ++n;
        todo.push(y);
      }
    }
  }
  return n;
}

std::size_t PermAction::stabilizer_order() const {
  std::size_t n = 0;
  for (const auto& m : group_) n += pair_id_[apply(m, reps_[0])] == 0;
  return n;
}

}  // namespace excpoly::monodromy
