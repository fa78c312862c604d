#include "hatlab/geometry.hpp"

namespace hatlab {

std::int64_t shoelace_sum(const std::vector<LatticeCoord>& poly) {
    std::int64_t s = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticeCoord& a = poly[i];
        const LatticeCoord& b = poly[(i + 1) % n];
        s += a.p * b.q - b.p * a.q;
    }
    return s;
}

bool point_in_polygon_x12(std::int64_t px12, std::int64_t qx12,
                          const std::vector<LatticeCoord>& poly) {
    const std::size_t n = poly.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const LatticeCoord& a = poly[i];
        const LatticeCoord& b = poly[(i + 1) % n];
        const std::int64_t aq = 12 * a.q, bq = 12 * b.q;
        const std::int64_t ap = 12 * a.p, bp = 12 * b.p;
        if ((aq > qx12) != (bq > qx12)) {
            // x-coordinate (in p units) where the edge crosses the scan line
            const std::int64_t num = ap * (bq - aq) + (bp - ap) * (qx12 - aq);
            const std::int64_t den = bq - aq;
            if (den > 0 ? (px12 * den < num) : (px12 * den > num)) inside = !inside;
        }
    }
    return inside;
}

}  // namespace hatlab
