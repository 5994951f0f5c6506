#pragma once

// Template definitions for axioms.hpp.

namespace dqg {

template <class F>
Matrix coproduct_left_leg(const QuantumGroupModel& m, const BlockIndex& alpha, const BlockIndex& beta,
                          const BlockIndex& gamma, F&& x_block) {
  const auto& shape = *m.shape();
  const std::size_t na = shape.dim(alpha), nb = shape.dim(beta), ng = shape.dim(gamma);
  const std::size_t n = na * nb;
  const FusionData f = m.fusion(alpha, beta);
  Matrix d(n * ng, n * ng);
  std::size_t offset = 0;
  for (const auto& s : f.summands) {
    const std::size_t nx = shape.dim(s.block);
    const Matrix x = x_block(s.block, gamma);
    for (std::size_t copy = 0; copy < s.multiplicity; ++copy, offset += nx) {
      for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t p = 0; p < ng; ++p)
          for (std::size_t j = 0; j < nx; ++j)
            for (std::size_t q = 0; q < ng; ++q) d((offset + i) * ng + p, (offset + j) * ng + q) = x(i * ng + p, j * ng + q);
    }
  }
  if (n == 1) return d;
  return kron(f.u, Matrix::identity(ng)) * d * kron(f.u_inv, Matrix::identity(ng));
}

template <class F>
Matrix coproduct_right_leg(const QuantumGroupModel& m, const BlockIndex& alpha, const BlockIndex& beta,
                           const BlockIndex& gamma, F&& x_block) {
  const auto& shape = *m.shape();
  const std::size_t na = shape.dim(alpha), nb = shape.dim(beta), ng = shape.dim(gamma);
  const std::size_t n = nb * ng;
  const FusionData f = m.fusion(beta, gamma);
  Matrix d(na * n, na * n);
  std::size_t offset = 0;
  for (const auto& s : f.summands) {
    const std::size_t ny = shape.dim(s.block);
    const Matrix x = x_block(alpha, s.block);
    for (std::size_t copy = 0; copy < s.multiplicity; ++copy, offset += ny) {
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t p = 0; p < ny; ++p)
          for (std::size_t j = 0; j < na; ++j)
            for (std::size_t q = 0; q < ny; ++q) d(i * n + offset + p, j * n + offset + q) = x(i * ny + p, j * ny + q);
    }
  }
  if (n == 1) return d;
  return kron(Matrix::identity(na), f.u) * d * kron(Matrix::identity(na), f.u_inv);
}

}  // namespace dqg
