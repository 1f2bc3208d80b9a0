#include "periband/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace periband {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals, double merge_tol) {
    for (const auto& iv : intervals) {
        if (!(iv.lo <= iv.hi)) throw std::invalid_argument("IntervalSet: lo > hi");
    }

    std::vector<Interval> segs;
    std::vector<double> pts;
    for (const auto& iv : intervals) {
        if (iv.degenerate()) pts.push_back(iv.lo);
        else segs.push_back(iv);
    }
    std::sort(segs.begin(), segs.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });

    std::vector<Interval> merged;
    for (const auto& iv : segs) {
        if (!merged.empty() && iv.lo <= merged.back().hi + merge_tol) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }

    IntervalSet out;
    out.intervals_ = std::move(merged);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (double p : pts) {
        const double d = out.distance(p);
        if (d > merge_tol) {
            out.intervals_.push_back({p, p});  // isolated flat point
        }
    }
    std::sort(out.intervals_.begin(), out.intervals_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

std::vector<Interval> IntervalSet::segments() const {
    std::vector<Interval> out;
    for (const auto& iv : intervals_)
        if (!iv.degenerate()) out.push_back(iv);
    return out;
}

std::vector<double> IntervalSet::points() const {
    std::vector<double> out;
    for (const auto& iv : intervals_)
        if (iv.degenerate()) out.push_back(iv.lo);
    return out;
}

double IntervalSet::measure() const {
    double m = 0.0;
    for (const auto& iv : intervals_) m += iv.length();
    return m;
}

double IntervalSet::distance(double x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : intervals_) {
        if (iv.degenerate()) continue;
        double d;
        if (x < iv.lo) d = iv.lo - x;
        else if (x > iv.hi) d = x - iv.hi;
        else d = 0.0;
        best = std::min(best, d);
    }
    return best;
}

IntervalSet IntervalSet::reflected(double center) const {
    std::vector<Interval> out;
    for (const auto& iv : intervals_) out.push_back({2.0 * center - iv.hi, 2.0 * center - iv.lo});
    IntervalSet s;
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    s.intervals_ = std::move(out);
    return s;
}

std::vector<Gap> gaps(const IntervalSet& s, Interval hull) {
    std::vector<Gap> out;
    double cursor = hull.lo;
    for (const auto& seg : s.segments()) {
        if (seg.hi < hull.lo || seg.lo > hull.hi) continue;
        if (seg.lo > cursor + IntervalSet::kMergeTol)
            out.push_back({cursor, std::min(seg.lo, hull.hi), {}});
        cursor = std::max(cursor, seg.hi);
    }
    if (cursor < hull.hi - IntervalSet::kMergeTol) out.push_back({cursor, hull.hi, {}});

    for (double p : s.points()) {
        for (auto& g : out) {
            if (p >= g.lo && p <= g.hi) {
                g.flats_inside.push_back(p);
                break;
            }
        }
    }
    return out;
}

namespace {

// sup over x in a of dist(x, b); candidates are a's endpoints and, inside
// each component of the complement of b, the farthest reachable point of a.
double directed_hausdorff(const IntervalSet& a, const IntervalSet& b) {
    std::vector<double> candidates;
    for (const auto& iv : a.intervals()) {
        candidates.push_back(iv.lo);
        candidates.push_back(iv.hi);
        // midpoints of b-gaps clipped into this interval
        const auto& bs = b.intervals();
        for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
            const double mid = 0.5 * (bs[i].hi + bs[i + 1].lo);
            if (mid >= iv.lo && mid <= iv.hi) candidates.push_back(mid);
        }
    }
    double worst = 0.0;
    for (double x : candidates) {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& iv : b.intervals()) {
            if (x < iv.lo) d = std::min(d, iv.lo - x);
            else if (x > iv.hi) d = std::min(d, x - iv.hi);
            else d = 0.0;
        }
        worst = std::max(worst, d);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const IntervalSet& a, const IntervalSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance: empty set");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace periband
