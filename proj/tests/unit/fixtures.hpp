#pragma once

#include "piercing/error.hpp"
#include "piercing/io.hpp"

namespace fixtures {

using piercing::GridInstance;
using piercing::Rat;
using piercing::RatMat;
using piercing::RatVec;

inline Rat R(const char* text) { return piercing::parse_rat(text); }

// Z rows are indexed by i (x), columns by j (y).
inline GridInstance worked_example() {
  return GridInstance::build({R("1"), R("2"), R("3")}, {R("1"), R("2"), R("3")},
                             {{R("2/5"), R("1/2"), R("0")}, {R("3/2"), R("1/2"), R("7/10")}, {R("1"), R("1/10"), R("0")}});
}

// Every A_i carries heights 0, 1, 0 along y.
inline GridInstance ridge() {
  RatMat z(3, RatVec{Rat(0), Rat(1), Rat(0)});
  return GridInstance::build({Rat(1), Rat(2), Rat(3)}, {Rat(1), Rat(2), Rat(3)}, z);
}

inline GridInstance zero_grid(std::size_t n, std::size_t m) {
  RatVec x;
  RatVec y;
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(static_cast<long>(i + 1));
  for (std::size_t j = 0; j < m; ++j) y.emplace_back(static_cast<long>(j + 1));
  return GridInstance::build(x, y, RatMat(n, piercing::zeros(m)));
}

inline piercing::DualCertificate ridge_certificate() {
  return {piercing::Axis::X, {Rat(0), Rat(0), Rat(0)}, {Rat(-1), Rat(2), Rat(-1)}, {Rat(0), Rat(-1), Rat(0)}};
}

}  // namespace fixtures
