#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "dqg/scalar.hpp"

namespace dqg {

using SparseVector = std::map<std::size_t, Scalar>;

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);

/// Incremental exact elimination over sparse vectors. Keeps track of how each
/// stored row is combined from the inserted vectors, so membership queries can
/// return coordinates with respect to the accepted vectors.
class SpanTracker {
 public:
  /// Inserts v; returns true if it was independent of everything accepted so far.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  /// Coefficients c with v = sum_k c_k accepted_k, if v lies in the span.
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;
  std::size_t rank() const noexcept { return accepted_; }

 private:
  struct Row {
    SparseVector vec;      // leading key is the pivot, leading entry 1
    SparseVector combo;    // over accepted-vector indices
  };
  void reduce(SparseVector& v, SparseVector* combo) const;

  std::map<std::size_t, Row> rows_;
  std::size_t accepted_ = 0;
};

}  // namespace dqg
