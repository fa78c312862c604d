#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hatlab/geometry.hpp"

namespace hatlab {

enum class PolygonKind { hat13, repaired14 };

struct Polygon {
    PolygonKind kind = PolygonKind::hat13;
    std::vector<std::int32_t> v;  // vertex indices, counter-clockwise
};

struct TilingMeta {
    int steps = 0;                // inflation steps applied to the seed hat
    std::string seed = "hat";
    std::string format = "hatlab-tiling/1";
};

// Immutable after construction; safe to share read-only across threads.
struct Tiling {
    std::vector<LatticeCoord> vertices;
    std::vector<Polygon> polygons;
    TilingMeta meta;

    std::vector<LatticeCoord> polygon_coords(const Polygon& poly) const {
        std::vector<LatticeCoord> out;
        out.reserve(poly.v.size());
        for (auto i : poly.v) out.push_back(vertices[std::size_t(i)]);
        return out;
    }
};

// The 13-vertex hat prototile with the reference vertex cycle, as a
// single-tile Tiling (the seed cluster of the substitution system).
Tiling hat_prototype();

// Exact polygon count after `steps` substitutions of the seed
// (4, 25, 169, 1156, 7921, 54289, 372100, ... for steps 1,2,3,...).
std::int64_t inflation_polygon_count(int steps);

// Apply `steps` substitution steps. `patch` must be a canonical seed-chain
// tiling (the prototype or a previous inflate result). Rejects negative
// steps and results beyond `polygon_budget`.
Tiling inflate(const Tiling& patch, int steps,
               std::int64_t polygon_budget = 2'000'000);

// Versioned JSON persistence. Round trips exactly (integer coordinates).
void save_tiling(const Tiling& t, const std::filesystem::path& path);
Tiling load_tiling(const std::filesystem::path& path);

// Error taxonomy for file I/O and validation.
struct TilingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TilingFormatError : TilingError {     // unknown/mismatched format version
    using TilingError::TilingError;
};
struct TilingParseError : TilingError {      // malformed file
    using TilingError::TilingError;
};
struct TilingChecksumError : TilingError {   // corrupted payload
    using TilingError::TilingError;
};

// Structural validation: vertex dedup, ccw orientation, per-tile area,
// edge directions, exact non-overlap (kite occupancy). Throws TilingError
// with a diagnostic on the first violation.
void validate_tiling(const Tiling& t);

}  // namespace hatlab
