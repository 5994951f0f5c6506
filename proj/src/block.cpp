#include "dqg/block.hpp"

#include <algorithm>

#include "dqg/error.hpp"

namespace dqg {

BlockIndex::BlockIndex(std::initializer_list<std::int32_t> coords) {
  if (coords.size() > max_rank) throw Error("block index has too many coordinates");
  n_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

BlockIndex BlockIndex::from_coords(const std::vector<std::int32_t>& coords) {
  if (coords.size() > max_rank) throw Error("block index has too many coordinates");
  BlockIndex b;
  b.n_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), b.c_.begin());
  return b;
}

BlockIndex operator+(const BlockIndex& a, const BlockIndex& b) {
  if (a.n_ != b.n_) throw ShapeError("adding block indices of different rank");
  BlockIndex r = a;
  for (std::size_t k = 0; k < a.n_; ++k) r.c_[k] += b.c_[k];
  return r;
}

BlockIndex operator-(const BlockIndex& a, const BlockIndex& b) { return a + (-b); }

BlockIndex BlockIndex::operator-() const {
  BlockIndex r = *this;
  for (std::size_t k = 0; k < n_; ++k) r.c_[k] = -r.c_[k];
  return r;
}

std::int64_t BlockIndex::radius() const {
  std::int64_t r = 0;
  for (std::size_t k = 0; k < n_; ++k) r = std::max<std::int64_t>(r, std::abs(static_cast<std::int64_t>(c_[k])));
  return r;
}

std::string BlockIndex::str() const {
  if (n_ == 1) return std::to_string(c_[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < n_; ++k) {
    if (k > 0) s += ",";
    s += std::to_string(c_[k]);
  }
  return s + ")";
}

Window::Window(std::vector<BlockIndex> blocks) : v_(std::move(blocks)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

bool Window::contains(const BlockIndex& b) const { return std::binary_search(v_.begin(), v_.end(), b); }

Window intersect(const Window& a, const Window& b) {
  Window w;
  std::set_intersection(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(w.v_));
  return w;
}

Window unite(const Window& a, const Window& b) {
  Window w;
  std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(w.v_));
  return w;
}

std::string Window::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < v_.size(); ++k) {
    if (k > 0) s += ",";
    s += v_[k].str();
  }
  return s + "}";
}

ShapePtr BlockShape::finite(std::vector<std::size_t> dims, std::vector<std::string> labels) {
  if (dims.empty()) throw ModelError("a block shape needs at least one block");
  if (!labels.empty() && labels.size() != dims.size()) throw ModelError("one label per block required");
  std::shared_ptr<BlockShape> s(new BlockShape());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0) throw ModelError("block dimensions must be positive");
    if (dims[i] != 1) s->commutative_ = false;
    s->blocks_.emplace_back(static_cast<std::int32_t>(i));
    if (labels.empty()) labels.push_back(std::to_string(i));
  }
  s->dims_ = std::move(dims);
  s->labels_ = std::move(labels);
  return s;
}

ShapePtr BlockShape::lattice(unsigned rank) {
  if (rank == 0 || rank > BlockIndex::max_rank) throw ModelError("lattice rank must be between 1 and 4");
  std::shared_ptr<BlockShape> s(new BlockShape());
  s->rank_ = rank;
  return s;
}

bool BlockShape::contains(const BlockIndex& b) const {
  if (is_lattice()) return b.size() == rank_;
  return b.size() == 1 && b[0] >= 0 && static_cast<std::size_t>(b[0]) < dims_.size();
}

std::size_t BlockShape::dim(const BlockIndex& b) const {
  if (!contains(b)) throw UnknownBlockError("unknown block index " + b.str());
  return is_lattice() ? 1 : dims_[static_cast<std::size_t>(b[0])];
}

std::size_t BlockShape::algebra_dimension() const {
  if (is_lattice()) throw Error("infinite-dimensional algebra");
  std::size_t d = 0;
  for (auto n : dims_) d += n * n;
  return d;
}

const std::vector<BlockIndex>& BlockShape::blocks() const {
  if (is_lattice()) throw Error("lattice shapes have no finite block list");
  return blocks_;
}

const std::string& BlockShape::label(const BlockIndex& b) const {
  static const std::string none;
  if (is_lattice() || !contains(b)) return none;
  return labels_[static_cast<std::size_t>(b[0])];
}

Window BlockShape::ball(std::int64_t radius) const {
  if (is_finite()) return Window(blocks_);
  return box(static_cast<std::int32_t>(-radius), static_cast<std::int32_t>(radius));
}

Window BlockShape::box(std::int32_t lo, std::int32_t hi) const {
  if (is_finite()) throw Error("box windows need a lattice shape");
  std::vector<BlockIndex> out;
  std::vector<std::int32_t> c(rank_, lo);
  if (hi < lo) return Window();
  while (true) {
    out.push_back(BlockIndex::from_coords(c));
    std::size_t k = rank_;
    while (k > 0) {
      --k;
      if (c[k] < hi) {
        ++c[k];
        break;
      }
      c[k] = lo;
      if (k == 0) return Window(std::move(out));
    }
  }
}

bool BlockShape::same_as(const BlockShape& other) const {
  return this == &other || (rank_ == other.rank_ && dims_ == other.dims_);
}

std::string BlockShape::str() const {
  if (is_lattice()) return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  std::string s = "blocks(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(dims_[i]);
  }
  return s + ")";
}

}  // namespace dqg
