#ifndef PARHIGGS_ARRANGEMENT_HPP
#define PARHIGGS_ARRANGEMENT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parhiggs/numeric.hpp"
#include "parhiggs/parabolic.hpp"

namespace parhiggs {

// The hyperplane H_{d,e} = { alpha : pardeg_sub(d, alpha, e) = 0 } inside the
// open weight cube W = (0,1/2)^n. Canonical label has e_1 = 0; the same
// hyperplane also carries the partner label (-n-d, 1-e).
struct Wall {
    i64 d = 0;
    EVector e;

    i64 ew() const { return e.weight(); } // |e|
    Wall partner(i64 n) const;            // the involuted label (-n-d, 1-e)
    std::string str() const;              // "(-1,(0,0,0))"
    bool operator==(const Wall& o) const { return d == o.d && e.bits == o.e.bits; }
    bool operator!=(const Wall& o) const { return !(*this == o); }
};

// All canonical walls meeting the open cube, grouped by e (lexicographic,
// e_1 = 0), d ascending within each group. A wall (d,e) meets W iff
// |e|/2 < -d < (n+|e|)/2.
std::vector<Wall> enumerate_walls(const Curve& c);

// Sign of pardeg_sub(wall.d, w, wall.e): -1, 0 (on the wall), or +1.
int wall_sign(const WeightVector& w, const Wall& wall);

// A chamber of W minus the walls, identified by the vector of pardeg signs
// in enumerate_walls(c) order.
struct ChamberID {
    std::vector<std::int8_t> signs; // entries +1/-1
    std::string key() const;        // "+-+..." (stable dictionary key)
    bool operator==(const ChamberID& o) const { return signs == o.signs; }
    bool operator!=(const ChamberID& o) const { return !(*this == o); }
};

ChamberID chamber_of(const WeightVector& w); // throws NonGenericError (on_wall)
ChamberID chamber_of(const WeightVector& w, const std::vector<Wall>& walls);

// One transversal crossing of a straight segment with a wall.
struct Crossing {
    Wall wall;
    BigRat param;      // in (0,1), strictly increasing along the segment
    int from_sign = 0; // pardeg sign on the source side of this wall
    int to_sign = 0;
};

// Walls crossed by the straight segment from -> to, sorted by param.
// Endpoints must be generic. Two walls sharing a crossing param is a
// codim-2 collision and aborts; perturb an endpoint and retry.
std::vector<Crossing> segment_crossings(const WeightVector& from, const WeightVector& to);

// g = 0 only, n >= 3: true iff the moduli of stable parabolic bundles is
// empty, i.e. some e with n-|e|+1 even has beta_sum(w,e) >= (n+|e|-1)/2.
bool is_null_chamber(const WeightVector& w);

// True iff one of the wall's two labels has Morse index zero
// (2d = 1-g-n-|e|). Such walls bound null chambers; they exist only at g = 0,
// where the condition reads 2d = 1-n-|e|.
bool is_vanishing_wall(const Wall& wall, const Curve& c);

// g = 0, n = 3: the fusion-rule inequalities
// |a1-a2| <= a3 <= min(a1+a2, 1-a1-a2), equivalent to nonemptiness of the
// moduli of stable parabolic bundles.
bool fusion_nonempty(const WeightVector& w);

// Exhaustive chamber sampling on the grid alpha_i = k_i/(2K+1), k_i = 1..K.
// Non-generic grid points are skipped. Complete at small n where every
// chamber contains a grid point; heuristic beyond that. Output order and
// content are independent of `threads`.
struct ChamberSample {
    ChamberID id;
    std::vector<WeightVector> samples; // first occurrences in grid order
    i64 grid_points = 0;               // grid points that landed in this chamber
};

std::vector<ChamberSample> enumerate_chambers(const Curve& c, i64 K = 16,
                                              int threads = 1, int max_samples = 2);

// Two generic weight vectors whose sign vectors differ at `wall` and nowhere
// else; .first lies on the pardeg(wall.d, ., wall.e) > 0 side.
std::pair<WeightVector, WeightVector> wall_side_samples(const Curve& c, const Wall& wall);

} // namespace parhiggs

#endif
