#include "parhiggs/arrangement.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "parhiggs/errors.hpp"

namespace parhiggs {

namespace {

int sign_of(const BigRat& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

EVector evector_from_mask(i64 n, std::uint64_t mask) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i)
        bits[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1u);
    return EVector{std::move(bits)};
}

} // namespace

Wall Wall::partner(i64 n) const {
    return Wall{-n - d, e.complement()};
}

std::string Wall::str() const {
    return "(" + std::to_string(d) + "," + e.str() + ")";
}

std::vector<Wall> enumerate_walls(const Curve& c) {
    const i64 n = c.points;
    std::vector<Wall> walls;
    // e in lexicographic order with e_1 = 0, i.e. masks below 2^(n-1).
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        EVector e = evector_from_mask(n, mask);
        const i64 ew = e.weight();
        // integers k = -d with |e| < 2k < n+|e|; k descending gives d ascending
        for (i64 k = (n + ew - 1) / 2; 2 * k > ew; --k)
            walls.push_back(Wall{-k, e});
    }
    return walls;
}

int wall_sign(const WeightVector& w, const Wall& wall) {
    return sign_of(pardeg_sub(wall.d, w, wall.e));
}

std::string ChamberID::key() const {
    std::string s;
    s.reserve(signs.size());
    for (auto v : signs)
        s += v > 0 ? '+' : '-';
    return s;
}

ChamberID chamber_of(const WeightVector& w) {
    return chamber_of(w, enumerate_walls(w.curve));
}

ChamberID chamber_of(const WeightVector& w, const std::vector<Wall>& walls) {
    ChamberID id;
    id.signs.reserve(walls.size());
    for (const Wall& wall : walls) {
        int s = wall_sign(w, wall);
        if (s == 0)
            throw NonGenericError("on_wall", "weights lie on wall " + wall.str());
        id.signs.push_back(static_cast<std::int8_t>(s));
    }
    return id;
}

std::vector<Crossing> segment_crossings(const WeightVector& from, const WeightVector& to) {
    if (from.curve.points != to.curve.points || from.curve.genus != to.curve.genus)
        throw UsageError("bad_weights", "segment endpoints must share the same curve");
    std::vector<Crossing> crossings;
    for (const Wall& wall : enumerate_walls(from.curve)) {
        BigRat f0 = pardeg_sub(wall.d, from, wall.e);
        BigRat f1 = pardeg_sub(wall.d, to, wall.e);
        int s0 = sign_of(f0), s1 = sign_of(f1);
        if (s0 == 0 || s1 == 0)
            throw NonGenericError("on_wall", "segment endpoint lies on wall " + wall.str());
        if (s0 == s1)
            continue;
        Crossing cr;
        cr.wall = wall;
        cr.param = f0 / (f0 - f1);
        cr.from_sign = s0;
        cr.to_sign = s1;
        crossings.push_back(std::move(cr));
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.param < b.param; });
    for (std::size_t i = 1; i < crossings.size(); ++i) {
        if (crossings[i - 1].param == crossings[i].param)
            throw NonGenericError("codim2_collision",
                                  "walls " + crossings[i - 1].wall.str() + " and " +
                                      crossings[i].wall.str() + " cross at parameter " +
                                      rat_string(crossings[i].param) +
                                      "; perturb an endpoint");
    }
    return crossings;
}

bool is_null_chamber(const WeightVector& w) {
    const Curve& c = w.curve;
    if (c.genus != 0)
        throw UsageError("wrong_genus", "null chambers are defined for genus 0 only");
    if (c.points < 3)
        throw UsageError("bad_curve", "null-chamber test requires at least 3 marked points");
    const i64 n = c.points;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        EVector e = evector_from_mask(n, mask);
        const i64 ew = e.weight();
        if ((n - ew + 1) % 2 != 0)
            continue;
        if (beta_sum(w, e) >= BigRat(n + ew - 1, 2))
            return true;
    }
    return false;
}

bool is_vanishing_wall(const Wall& wall, const Curve& c) {
    const i64 n = c.points;
    const i64 g = c.genus;
    auto lambda_zero = [&](const Wall& lbl) {
        return n + 2 * lbl.d + g - 1 + lbl.ew() == 0;
    };
    return lambda_zero(wall) || lambda_zero(wall.partner(n));
}

bool fusion_nonempty(const WeightVector& w) {
    if (w.curve.genus != 0 || w.curve.points != 3)
        throw UsageError("bad_curve", "fusion rules apply to genus 0 with 3 marked points");
    const BigRat& a1 = w.alpha[0];
    const BigRat& a2 = w.alpha[1];
    const BigRat& a3 = w.alpha[2];
    BigRat lo = a1 > a2 ? a1 - a2 : a2 - a1;
    BigRat hi = a1 + a2;
    if (BigRat(1) - a1 - a2 < hi)
        hi = BigRat(1) - a1 - a2;
    return lo <= a3 && a3 <= hi;
}

namespace {

// Per-chamber accumulator for one slice of the grid walk.
struct BlockRecord {
    std::string key;
    i64 count = 0;
    std::vector<std::vector<i64>> samples; // numerators k_i of retained points
};

struct BlockResult {
    std::vector<BlockRecord> records; // in first-occurrence (lex) order
};

// Walks the sub-grid with fixed first coordinate k1; k_i = 1..K for i >= 2.
BlockResult walk_block(const std::vector<Wall>& walls, i64 n, i64 K, i64 k1,
                       int max_samples) {
    const i64 denom = 2 * K + 1;
    const std::size_t m = walls.size();

    // Wall value at a grid point k: (d+|e|)*denom + sum_i (-1)^{e_i} k_i.
    std::vector<i64> base(m);
    std::vector<std::vector<i64>> sgn(m, std::vector<i64>(static_cast<std::size_t>(n)));
    for (std::size_t j = 0; j < m; ++j) {
        base[j] = (walls[j].d + walls[j].ew()) * denom;
        for (i64 i = 0; i < n; ++i)
            sgn[j][static_cast<std::size_t>(i)] =
                walls[j].e.bits[static_cast<std::size_t>(i)] ? -1 : 1;
    }

    BlockResult out;
    std::unordered_map<std::string, std::size_t> index;

    std::vector<i64> k(static_cast<std::size_t>(n), 1);
    k[0] = k1;
    std::string key(m, '?');
    for (;;) {
        bool generic = true;
        for (std::size_t j = 0; j < m; ++j) {
            i64 v = base[j];
            for (i64 i = 0; i < n; ++i)
                v += sgn[j][static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(i)];
            if (v == 0) {
                generic = false;
                break;
            }
            key[j] = v > 0 ? '+' : '-';
        }
        if (generic) {
            auto it = index.find(key);
            if (it == index.end()) {
                index.emplace(key, out.records.size());
                BlockRecord rec;
                rec.key = key;
                rec.count = 1;
                rec.samples.push_back(k);
                out.records.push_back(std::move(rec));
            } else {
                BlockRecord& rec = out.records[it->second];
                ++rec.count;
                if (static_cast<int>(rec.samples.size()) < max_samples)
                    rec.samples.push_back(k);
            }
        }
        // odometer over coordinates 2..n (first coordinate fixed)
        i64 i = n - 1;
        for (; i >= 1; --i) {
            std::size_t ii = static_cast<std::size_t>(i);
            if (++k[ii] <= K)
                break;
            k[ii] = 1;
        }
        if (i < 1)
            break;
    }
    return out;
}

} // namespace

std::vector<ChamberSample> enumerate_chambers(const Curve& c, i64 K, int threads,
                                              int max_samples) {
    if (K < 1)
        throw UsageError("bad_grid", "grid parameter K must be >= 1");
    if (max_samples < 1)
        max_samples = 1;
    const i64 n = c.points;
    const i64 denom = 2 * K + 1;
    const std::vector<Wall> walls = enumerate_walls(c);

    std::vector<BlockResult> blocks(static_cast<std::size_t>(K));
    if (threads <= 1) {
        for (i64 k1 = 1; k1 <= K; ++k1)
            blocks[static_cast<std::size_t>(k1 - 1)] =
                walk_block(walls, n, K, k1, max_samples);
    } else {
        std::atomic<i64> next{1};
        auto worker = [&]() {
            for (;;) {
                i64 k1 = next.fetch_add(1);
                if (k1 > K)
                    return;
                blocks[static_cast<std::size_t>(k1 - 1)] =
                    walk_block(walls, n, K, k1, max_samples);
            }
        };
        std::vector<std::thread> pool;
        int tc = std::min<int>(threads, static_cast<int>(K));
        pool.reserve(static_cast<std::size_t>(tc));
        for (int t = 0; t < tc; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    // Deterministic merge in block order: chamber order is first occurrence in
    // lexicographic grid order regardless of thread count.
    std::vector<ChamberSample> result;
    std::unordered_map<std::string, std::size_t> index;
    auto to_weights = [&](const std::vector<i64>& k) {
        std::vector<BigRat> alpha;
        alpha.reserve(k.size());
        for (i64 num : k)
            alpha.emplace_back(num, denom);
        return make_weights(c, std::move(alpha));
    };
    for (const BlockResult& block : blocks) {
        for (const BlockRecord& rec : block.records) {
            auto it = index.find(rec.key);
            if (it == index.end()) {
                index.emplace(rec.key, result.size());
                ChamberSample cs;
                cs.id.signs.reserve(rec.key.size());
                for (char ch : rec.key)
                    cs.id.signs.push_back(ch == '+' ? 1 : -1);
                cs.grid_points = rec.count;
                for (const auto& k : rec.samples) {
                    if (static_cast<int>(cs.samples.size()) >= max_samples)
                        break;
                    cs.samples.push_back(to_weights(k));
                }
                result.push_back(std::move(cs));
            } else {
                ChamberSample& cs = result[it->second];
                cs.grid_points += rec.count;
                for (const auto& k : rec.samples) {
                    if (static_cast<int>(cs.samples.size()) >= max_samples)
                        break;
                    cs.samples.push_back(to_weights(k));
                }
            }
        }
    }
    return result;
}

std::pair<WeightVector, WeightVector> wall_side_samples(const Curve& c, const Wall& wall) {
    const i64 n = c.points;
    if (static_cast<i64>(wall.e.bits.size()) != n)
        throw UsageError("bad_evector", "wall does not match the curve");
    const std::vector<Wall> walls = enumerate_walls(c);

    // Symmetric point of the wall inside the cube: alpha_i = 1/4 + (-1)^{e_i} s
    // with s chosen so pardeg vanishes; wall validity gives |s| < 1/4.
    const i64 ew = wall.ew();
    BigRat s = (BigRat(-wall.d - ew) - BigRat(n - 2 * ew, 4)) / n;
    std::vector<BigRat> base(static_cast<std::size_t>(n));
    BigRat margin(1, 4);
    for (i64 i = 0; i < n; ++i) {
        BigRat v = BigRat(1, 4) + (wall.e.bits[static_cast<std::size_t>(i)] ? -s : s);
        base[static_cast<std::size_t>(i)] = v;
        if (v < margin)
            margin = v;
        if (BigRat(1, 2) - v < margin)
            margin = BigRat(1, 2) - v;
    }

    auto in_cube = [&](const std::vector<BigRat>& a) {
        for (const BigRat& v : a)
            if (v <= 0 || v >= BigRat(1, 2))
                return false;
        return true;
    };
    auto generic_except = [&](const std::vector<BigRat>& a) {
        WeightVector wv = make_weights(c, a);
        for (const Wall& other : walls) {
            if (other == wall)
                continue;
            if (wall_sign(wv, other) == 0)
                return false;
        }
        return true;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        // Tangential jitter direction c_i = (-1)^{e_i} (n*p_i - sum p_j) keeps
        // the point on the wall; shifting the primes by `attempt` varies it.
        std::vector<i64> pr(static_cast<std::size_t>(n));
        i64 psum = 0;
        for (i64 i = 0; i < n; ++i) {
            pr[static_cast<std::size_t>(i)] = nth_prime(i + 1 + attempt);
            psum += pr[static_cast<std::size_t>(i)];
        }
        i64 cmax = 0;
        std::vector<i64> dir(static_cast<std::size_t>(n));
        for (i64 i = 0; i < n; ++i) {
            i64 d = n * pr[static_cast<std::size_t>(i)] - psum;
            if (wall.e.bits[static_cast<std::size_t>(i)])
                d = -d;
            dir[static_cast<std::size_t>(i)] = d;
            cmax = std::max(cmax, d < 0 ? -d : d);
        }
        if (cmax == 0)
            continue;

        BigRat delta = margin / (4 * (cmax + 1));
        for (int halve = 0; halve < attempt; ++halve)
            delta /= 2;
        std::vector<BigRat> anchor(static_cast<std::size_t>(n));
        for (i64 i = 0; i < n; ++i)
            anchor[static_cast<std::size_t>(i)] =
                base[static_cast<std::size_t>(i)] +
                delta * dir[static_cast<std::size_t>(i)];
        if (!in_cube(anchor) || !generic_except(anchor))
            continue;

        BigRat eps = delta / 2;
        for (int halve = 0; halve < 64; ++halve, eps /= 2) {
            std::vector<BigRat> plus = anchor, minus = anchor;
            for (i64 i = 0; i < n; ++i) {
                BigRat step = wall.e.bits[static_cast<std::size_t>(i)] ? -eps : eps;
                plus[static_cast<std::size_t>(i)] += step;
                minus[static_cast<std::size_t>(i)] -= step;
            }
            if (!in_cube(plus) || !in_cube(minus))
                continue;
            WeightVector wp = make_weights(c, plus);
            WeightVector wm = make_weights(c, minus);
            bool ok = wall_sign(wp, wall) == 1 && wall_sign(wm, wall) == -1;
            for (const Wall& other : walls) {
                if (!ok)
                    break;
                if (other == wall)
                    continue;
                int sp = wall_sign(wp, other);
                int sm = wall_sign(wm, other);
                ok = sp != 0 && sp == sm;
            }
            if (ok)
                return {std::move(wp), std::move(wm)};
        }
    }
    throw ConsistencyError("sampling_failed",
                           "could not find generic points on both sides of wall " +
                               wall.str());
}

} // namespace parhiggs
