// Copyright 2026 The tcsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TCSM_TRANSFORM_HPP_
#define TCSM_TRANSFORM_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "tcsm/error.hpp"
#include "tcsm/rng.hpp"
#include "tcsm/tensor.hpp"

namespace tcsm {

// One element of the 8-element group of square symmetries used for the
// consistency scheme: a counter-clockwise quarter-turn count followed by an
// optional horizontal (left-right) flip.
//
// Conventions, pinned by tests:
//   - rotation is counter-clockwise; one quarter turn maps entry (r, c) to
//     (W-1-c, r);
//   - the flip is applied after the rotation;
//   - compose(a, b) means "a after b".
struct TransformOp {
  int gamma = 0;      // quarter turns, 0..3
  bool flip = false;  // horizontal flip applied after rotation

  bool operator==(const TransformOp&) const = default;

  bool is_identity() const { return gamma == 0 && !flip; }
};

// Constructs an op from any integer quarter-turn count (reduced mod 4).
inline TransformOp make_op(int gamma, bool flip) {
  int g = gamma % 4;
  if (g < 0) g += 4;
  return TransformOp{g, flip};
}

inline const std::array<TransformOp, 8>& all_ops() {
  static const std::array<TransformOp, 8> ops = {{
      {0, false}, {1, false}, {2, false}, {3, false},
      {0, true},  {1, true},  {2, true},  {3, true},
  }};
  return ops;
}

// Group law. Writing an op as F^f R^g (rotation first, flip second), the
// relation R F = F R^-1 gives:
//   compose(a, b) = F^fa R^ga F^fb R^gb
//                 = (ga + gb, fa)        when b has no flip
//                 = (gb - ga, fa ^ fb)   when b flips
inline TransformOp compose(const TransformOp& a, const TransformOp& b) {
  if (!b.flip) return make_op(a.gamma + b.gamma, a.flip);
  return make_op(b.gamma - a.gamma, !a.flip);
}

inline TransformOp invert(const TransformOp& op) {
  // (F^f R^g)^-1 = R^-g F^f; flipped ops are involutions in this group.
  if (op.flip) return op;
  return make_op(-op.gamma, false);
}

inline TransformOp sample_random_op(Rng& rng) {
  const int k = rng.uniform_int(8);
  return TransformOp{k & 3, (k >> 2) != 0};
}

namespace detail {

// Destination of source entry (r, c) on an n x n grid.
inline void transform_index(const TransformOp& op, std::size_t n,
                            std::size_t r, std::size_t c, std::size_t* out_r,
                            std::size_t* out_c) {
  std::size_t rr = r, cc = c;
  switch (op.gamma) {
    case 0: break;
    case 1: { std::size_t t = rr; rr = n - 1 - cc; cc = t; break; }
    case 2: rr = n - 1 - rr; cc = n - 1 - cc; break;
    case 3: { std::size_t t = rr; rr = cc; cc = n - 1 - t; break; }
    default: break;
  }
  if (op.flip) cc = n - 1 - cc;
  *out_r = rr;
  *out_c = cc;
}

}  // namespace detail

// Applies an op to the last two (spatial) dimensions of an array; any
// leading dimensions are treated as a stack of independent slices. The
// spatial extent must be square, otherwise a quarter turn would change
// the shape.
template <typename T>
Tensor<T> apply(const TransformOp& op, const Tensor<T>& in) {
  if (in.rank() < 2) {
    throw ShapeError("apply: need at least 2 dimensions, got " +
                     shape_string(in.shape()));
  }
  const std::size_t h = in.dim(in.rank() - 2);
  const std::size_t w = in.dim(in.rank() - 1);
  if (h != w) {
    throw ShapeError("apply: spatial extent must be square, got " +
                     shape_string(in.shape()));
  }
  Tensor<T> out(in.shape());
  if (op.is_identity()) {
    std::copy(in.begin(), in.end(), out.begin());
    return out;
  }
  const std::size_t n = h;
  const std::size_t plane = n * n;
  const std::size_t slices = in.size() / plane;

  // Precompute the pixel permutation once, reuse for every slice.
  std::vector<std::size_t> dst(plane);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t rr, cc;
      detail::transform_index(op, n, r, c, &rr, &cc);
      dst[r * n + c] = rr * n + cc;
    }
  }
  for (std::size_t s = 0; s < slices; ++s) {
    const T* src = in.data() + s * plane;
    T* out_slice = out.data() + s * plane;
    for (std::size_t i = 0; i < plane; ++i) out_slice[dst[i]] = src[i];
  }
  return out;
}

}  // namespace tcsm

#endif  // TCSM_TRANSFORM_HPP_
