#pragma once
// Per-weight verification that the stated generating families are bases of
// the kernels/images of the bicomplex column maps.

#include <cstddef>
#include <string>
#include <vector>

#include "sjp/element.hpp"

namespace sjp {

// ImDelta3 / ImPartial3 / KerDelta3 cover the column maps a -> xa + ax and
// a -> [x, a] of the cohomology bicomplex; Images4 covers the homology
// column maps a -> ax + xa (into A and into A (+) A) and a -> [a, x].
enum class BasisLemma { ImDelta3, ImPartial3, KerDelta3, Images4 };

struct BasisCheck {
  std::string part;
  int weight = 0;
  std::size_t stated = 0;    // number of stated generators in this weight
  std::size_t computed = 0;  // dimension of the computed image/kernel slice
  bool independent = false;
  bool contained = false;
  bool spans = false;
  bool ok() const {
    return independent && contained && spans && stated == computed;
  }
};

std::string basis_lemma_name(BasisLemma which);

std::vector<BasisCheck> verify_kernel_image_bases(BasisLemma which,
                                                  int max_weight);

// Membership of a homogeneous element in Im(a -> xa + ax); spot checks.
bool in_image_of_delta(const AlgebraElement& v);

}  // namespace sjp
