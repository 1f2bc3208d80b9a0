#pragma once

#include <vector>

namespace periband {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool degenerate() const { return hi <= lo; }
    bool operator==(const Interval&) const = default;
};

// An open interval of the complement, annotated with any flat-band points
// that fall inside it (closed containment: hull endpoints count).
struct Gap {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> flats_inside;

    double length() const { return hi - lo; }
};

// Sorted disjoint union of closed intervals. Non-degenerate segments are
// merged when they overlap or come within merge_tol of touching; degenerate
// members (flat-band points) are kept as zero-measure entries unless they
// land inside a segment.
class IntervalSet {
public:
    static constexpr double kMergeTol = 1e-9;

    IntervalSet() = default;
    static IntervalSet from_intervals(std::vector<Interval> intervals, double merge_tol = kMergeTol);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::vector<Interval> segments() const;  // non-degenerate members
    std::vector<double> points() const;      // degenerate members

    // Lebesgue measure; zero-measure points contribute nothing.
    double measure() const;

    bool empty() const { return intervals_.empty(); }

    // Distance from x to the set (0 when covered).
    double distance(double x) const;

    // Image under x -> 2*center - x.
    IntervalSet reflected(double center) const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> intervals_;
};

// Connected components of hull minus the non-degenerate segments of s, in
// order. Degenerate points do not split gaps; each gap lists the points
// lying inside it. The trailing component up to hull.hi is included.
// Components narrower than kMergeTol are dropped: they are endpoint noise,
// not spectral gaps.
std::vector<Gap> gaps(const IntervalSet& s, Interval hull);

// Hausdorff distance between two finite unions of intervals (degenerate
// members included as points). Infinity is never produced: both sets must
// be non-empty.
double hausdorff_distance(const IntervalSet& a, const IntervalSet& b);

}  // namespace periband
