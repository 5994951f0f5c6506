#include "dqg/sparse.hpp"

namespace dqg {

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void SpanTracker::reduce(SparseVector& v, SparseVector* combo) const {
  auto it = v.begin();
  while (it != v.end()) {
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::size_t key = it->first;
    const Scalar f = -it->second;
    axpy(v, f, row->second.vec);
    if (combo != nullptr) axpy(*combo, f, row->second.combo);
    it = v.upper_bound(key);
  }
}

bool SpanTracker::insert(const SparseVector& v) {
  SparseVector w = v;
  SparseVector combo{{accepted_, Scalar(1)}};
  reduce(w, &combo);
  if (w.empty()) return false;
  const Scalar inv = w.begin()->second.inverse();
  for (auto& [k, x] : w) x *= inv;
  for (auto& [k, x] : combo) x *= inv;
  const std::size_t pivot = w.begin()->first;
  rows_.emplace(pivot, Row{std::move(w), std::move(combo)});
  ++accepted_;
  return true;
}

bool SpanTracker::contains(const SparseVector& v) const {
  SparseVector w = v;
  reduce(w, nullptr);
  return w.empty();
}

std::optional<std::vector<Scalar>> SpanTracker::coordinates(const SparseVector& v) const {
  SparseVector w = v;
  SparseVector combo;
  reduce(w, &combo);
  if (!w.empty()) return std::nullopt;
  // v - sum(rows used) = 0, and combo holds minus the accumulated combination.
  std::vector<Scalar> c(accepted_);
  for (const auto& [k, x] : combo) c[k] = -x;
  return c;
}

}  // namespace dqg
