#pragma once

#include <vector>

#include "maskpoints/point_set.hpp"

namespace maskpoints {

/// Mean L2 distance between index-matched points of two equal-size sets.
double point_to_point_loss(const DensePointSet& r, const DensePointSet& r_gt);

/// Symmetric Chamfer distance with the shared 1/(2n) normalization; requires
/// equal cardinalities.
double chamfer_loss(const DensePointSet& r, const DensePointSet& r_gt);

/// Chamfer variant for unequal cardinalities: each directed sum is
/// normalized by its own set size and the two halves are averaged. Intended
/// for harness experiments; not part of the equal-n contract above.
double chamfer_loss_generalized(const DensePointSet& r,
                                const DensePointSet& r_gt);

/// Mean binary cross entropy of per-point foreground probabilities against
/// {0,1} labels; probabilities are clamped to [1e-7, 1 - 1e-7].
double point_cls_loss(const std::vector<double>& predicted,
                      const std::vector<int>& labels);

}  // namespace maskpoints
