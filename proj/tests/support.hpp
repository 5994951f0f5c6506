#pragma once

#include <catch_amalgamated.hpp>

#include "dqg/element.hpp"

namespace Catch {
template <>
struct StringMaker<dqg::Scalar> {
  static std::string convert(const dqg::Scalar& s) { return s.str(); }
};
template <>
struct StringMaker<dqg::Matrix> {
  static std::string convert(const dqg::Matrix& m) { return m.str(); }
};
template <>
struct StringMaker<dqg::Multiplier> {
  static std::string convert(const dqg::Multiplier& m) { return m.str(); }
};
}  // namespace Catch
