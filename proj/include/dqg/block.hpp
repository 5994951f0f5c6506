#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace dqg {

/// Index of a matrix block: a single integer for finite index sets, or a
/// point of Z^k (k <= 4) for lattice-indexed shapes.
class BlockIndex {
 public:
  static constexpr std::size_t max_rank = 4;

  BlockIndex() = default;
  explicit BlockIndex(std::int32_t i) : n_(1) { c_[0] = i; }
  BlockIndex(std::initializer_list<std::int32_t> coords);
  static BlockIndex from_coords(const std::vector<std::int32_t>& coords);

  std::size_t size() const noexcept { return n_; }
  std::int32_t operator[](std::size_t k) const { return c_[k]; }
  std::vector<std::int32_t> coords() const { return {c_.begin(), c_.begin() + n_}; }

  /// Componentwise sum and negation (lattice group law).
  friend BlockIndex operator+(const BlockIndex& a, const BlockIndex& b);
  friend BlockIndex operator-(const BlockIndex& a, const BlockIndex& b);
  BlockIndex operator-() const;
  /// Max norm, used for window radii.
  std::int64_t radius() const;

  friend auto operator<=>(const BlockIndex&, const BlockIndex&) = default;
  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;

  /// "3" for one coordinate, "(1,-2)" otherwise.
  std::string str() const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::int32_t, max_rank> c_{};
};

/// Finite subset of the index set, sorted and duplicate free.
class Window {
 public:
  Window() = default;
  explicit Window(std::vector<BlockIndex> blocks);

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  bool contains(const BlockIndex& b) const;
  const std::vector<BlockIndex>& blocks() const noexcept { return v_; }
  const BlockIndex& operator[](std::size_t k) const { return v_[k]; }

  friend Window intersect(const Window& a, const Window& b);
  friend Window unite(const Window& a, const Window& b);
  friend bool operator==(const Window&, const Window&) = default;

  std::string str() const;

 private:
  std::vector<BlockIndex> v_;
};

/// The block family of a direct sum of full matrix algebras: either an explicit
/// finite list of block dimensions, or Z^k with all blocks one-dimensional.
class BlockShape {
 public:
  static std::shared_ptr<const BlockShape> finite(std::vector<std::size_t> dims,
                                                  std::vector<std::string> labels = {});
  static std::shared_ptr<const BlockShape> lattice(unsigned rank);

  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_lattice() const noexcept { return rank_ > 0; }
  unsigned lattice_rank() const noexcept { return rank_; }
  /// All blocks one-dimensional (function algebras and lattices).
  bool is_commutative() const noexcept { return commutative_; }

  bool contains(const BlockIndex& b) const;
  /// Throws UnknownBlockError outside the index set.
  std::size_t dim(const BlockIndex& b) const;
  /// Sum of n^2 over the finite index set.
  std::size_t algebra_dimension() const;

  /// Finite shapes only.
  const std::vector<BlockIndex>& blocks() const;
  const std::string& label(const BlockIndex& b) const;

  /// Every block for finite shapes; the box of the given max-norm radius for lattices.
  Window ball(std::int64_t radius) const;
  /// Lattice only: the box [lo, hi]^k.
  Window box(std::int32_t lo, std::int32_t hi) const;

  bool same_as(const BlockShape& other) const;
  std::string str() const;

 private:
  BlockShape() = default;
  unsigned rank_ = 0;
  bool commutative_ = true;
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
  std::vector<BlockIndex> blocks_;
};

using ShapePtr = std::shared_ptr<const BlockShape>;

}  // namespace dqg
