#pragma once

#include <vector>

#include "sgseg/types.hpp"

namespace sgseg {

/// Saliency-weighted colour distance between two pixels:
///   exp(|S(i) - S(j)|) * ||(dh, ds, dv)||
/// with circular hue, dh = min(|h_i - h_j|, 255 - |h_i - h_j|). Symmetric
/// in its pixel arguments bit for bit. Throws OutOfBounds / DimensionMismatch.
double pixel_similarity(const HsvImage& img, const SaliencyMap& sal, Pixel i, Pixel j);

/// The growing criterion: strictly sim < theta.
constexpr bool growing_predicate(double sim, double theta) { return sim < theta; }

/// Seeded region growing over a global priority front.
///
/// Seed codes other than 255 are copied to the output unchanged. Every
/// (unlabeled p, labeled neighbour q) pair is a candidate keyed by
/// (pixel_similarity(p, q), label(q), index(p), index(q)); the smallest
/// candidate whose key passes growing_predicate labels p with label(q), and
/// p then becomes a source for its own unlabeled neighbours. Growing stops
/// when no candidate passes. Unreached pixels are 255.
LabelMap grow_regions(const HsvImage& img, const SaliencyMap& sal, const LabelMap& seeds,
                      const GrowConfig& cfg);

/// Same contract as grow_regions, computed by a full scan of all candidate
/// pairs per labeled pixel. Quadratic; meant as a test oracle on small grids.
LabelMap grow_regions_oracle(const HsvImage& img, const SaliencyMap& sal, const LabelMap& seeds,
                             const GrowConfig& cfg);

/// Pixels reachable from any non-ignore seed through neighbour steps whose
/// similarity passes the predicate, ignoring labels.
std::vector<bool> reachable_set(const HsvImage& img, const SaliencyMap& sal, const LabelMap& seeds,
                                double theta, int connectivity);

}  // namespace sgseg
