#pragma once

#include <cstdint>
#include <vector>

#include "hatlab/geometry.hpp"
#include "hatlab/tiling.hpp"

// Internals of the meta-tile substitution generator. Exposed for tests and
// for the domain-extraction margin logic; ordinary callers use inflate().
namespace hatlab::subst {

// One hat placement: Transform::mirror distinguishes the reflected tile.
using Placement = Transform;

// The 13 reference hat vertices (Eisenstein coordinates).
const std::vector<EisVec>& hat_outline();

// Kites of the reference hat on the global kite grid: (hexagon center, sextant).
struct Kite {
    EisVec center;
    int sextant = 0;
    friend bool operator==(const Kite&, const Kite&) = default;
    friend auto operator<=>(const Kite&, const Kite&) = default;
};
const std::vector<Kite>& hat_kites();
Kite transform_kite(const Transform& g, const Kite& k);

// Hat placements of the patch reached after `steps` substitutions of the
// single-hat seed. Deterministic.
std::vector<Placement> build_patch(int steps);

// Instantiate polygons/vertices from placements (deduplicated vertex table,
// counter-clockwise orientation, canonical ordering).
Tiling tiling_from_placements(const std::vector<Placement>& hats, int steps);

}  // namespace hatlab::subst
