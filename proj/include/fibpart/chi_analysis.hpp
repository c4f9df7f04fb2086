#pragma once

// Range statistics of chi(n) and F(n): zero counts, runs, and the upper
// convex hull of the graph of F between consecutive f_r - 1.

#include "counting.hpp"
#include "fibcore.hpp"
#include "natural.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fibpart {

/// h(r): zeros of chi in [0, f_r - 1]. h(0..3) = 0, h(4) = 1,
/// h(r) = f_{r-5} + 1 + h(r-1) + 2 h(r-4).
inline Natural h_rec(int r) {
    if (r < 0) throw std::invalid_argument("h_rec needs r >= 0");
    std::vector<Natural> h{0, 0, 0, 0, 1};
    for (int i = 5; i <= r; ++i) {
        const auto u = static_cast<std::size_t>(i);
        h.push_back(fib(i - 5) + 1 + h[u - 1] + 2 * h[u - 4]);
    }
    return h[static_cast<std::size_t>(r)];
}

/// #{ 0 <= n <= N : chi(n) = 0 } by direct scan. chi(0) = 1, so 0 never counts.
inline Natural count_zero_chi(const Natural& N) {
    Natural zeros = 0;
    for (Natural n = 1; n <= N; ++n) {
        if (chi(n) == 0) ++zeros;
    }
    return zeros;
}

/// X(N) = chi^2(1) + ... + chi^2(N).
inline Natural x_sum(const Natural& N) {
    if (N.is_zero()) return 0;
    return N - count_zero_chi(N);
}

enum class RunKind { zero, nonzero };

/// Maximal run of chi = 0 or chi != 0 inside a scanned range. A run is
/// interior when neither end touches the range boundary, so both neighbours
/// were observed.
struct RunReport {
    Natural start;
    std::uint64_t length = 0;
    RunKind kind = RunKind::zero;
    std::vector<int> values;  // chi values, nonzero runs only
    bool interior = false;
};

/// All maximal runs of chi over [lo, hi], in order.
inline std::vector<RunReport> chi_runs(const Natural& lo, const Natural& hi) {
    if (!(lo < hi)) throw std::invalid_argument("chi_runs needs lo < hi");
    std::vector<RunReport> runs;
    for (Natural n = lo; n <= hi; ++n) {
        const int c = chi(n);
        const RunKind kind = c == 0 ? RunKind::zero : RunKind::nonzero;
        if (runs.empty() || runs.back().kind != kind) {
            runs.push_back(RunReport{n, 0, kind, {}, false});
        }
        auto& run = runs.back();
        ++run.length;
        if (kind == RunKind::nonzero) run.values.push_back(c);
    }
    for (auto& run : runs) run.interior = run.start > lo && run.start + run.length - 1 < hi;
    return runs;
}

inline std::vector<RunReport> zero_runs(const Natural& lo, const Natural& hi) {
    auto runs = chi_runs(lo, hi);
    std::erase_if(runs, [](const RunReport& r) { return r.kind != RunKind::zero; });
    return runs;
}

inline std::vector<RunReport> nonzero_runs(const Natural& lo, const Natural& hi) {
    auto runs = chi_runs(lo, hi);
    std::erase_if(runs, [](const RunReport& r) { return r.kind != RunKind::nonzero; });
    return runs;
}

/// Admissible interior zero-run lengths: 1 or f_r + 1.
inline bool is_admissible_zero_run(std::uint64_t length) {
    if (length == 1) return true;
    for (int r = 0; fib(r) + 1 <= length; ++r) {
        if (fib(r) + 1 == length) return true;
    }
    return false;
}

/// The ten sign patterns a maximal interior nonzero run may take.
inline const std::vector<std::vector<int>>& nonzero_run_patterns() {
    static const std::vector<std::vector<int>> patterns{
        {1},        {-1},       {1, -1},    {-1, 1},        {1, 1, -1},
        {-1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {1, -1, -1, 1}, {-1, 1, 1, -1},
    };
    return patterns;
}

inline bool is_admissible_nonzero_run(const std::vector<int>& values) {
    const auto& p = nonzero_run_patterns();
    return std::find(p.begin(), p.end(), values) != p.end();
}

using GraphPoint = std::pair<Natural, Natural>;

/// Predicted hull vertices of (n, F(n)) over [f_r - 1, f_{r+1} - 1], r >= 7,
/// excluding the two end points: f_r - 1 + f_q^2 and f_{r+1} - 1 - f_q^2 for
/// 1 <= q <= (r-3)/2, plus for even r the points f_r - 1 - 2(-1)^q + f_q f_{q+1}
/// and f_{r+1} - 1 + 2(-1)^q - f_q f_{q+1} for 3 <= q <= r/2 - 2.
inline std::vector<GraphPoint> hull_points(int r) {
    if (r < 7) throw std::invalid_argument("hull_points needs r >= 7");
    std::set<Natural> xs;
    const Natural lo = fib(r) - 1;
    const Natural hi = fib(r + 1) - 1;
    for (int q = 1; q <= (r - 3) / 2; ++q) {
        const Natural sq = fib(q) * fib(q);
        xs.insert(lo + sq);
        xs.insert(hi - sq);
    }
    if (parity(r) == 0) {
        for (int q = 3; q <= r / 2 - 2; ++q) {
            const int sign = parity(q) ? -1 : 1;
            const Natural prod = fib(q) * fib(q + 1);
            xs.insert(lo - 2 * sign + prod);
            xs.insert(hi + 2 * sign - prod);
        }
    }
    std::vector<GraphPoint> out;
    for (const auto& x : xs) out.emplace_back(x, count_F(x));
    return out;
}

/// Strict vertices of the upper convex hull of (n, F(n)) for lo <= n <= hi,
/// end points included. Exact integer cross products; collinear points dropped.
inline std::vector<GraphPoint> upper_hull(const Natural& lo, const Natural& hi) {
    if (hi < lo) throw std::invalid_argument("upper_hull needs lo <= hi");
    std::vector<GraphPoint> hull;
    auto cross = [](const GraphPoint& o, const GraphPoint& a, const GraphPoint& b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    for (Natural n = lo; n <= hi; ++n) {
        GraphPoint p{n, count_F(n)};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0) hull.pop_back();
        hull.push_back(std::move(p));
    }
    return hull;
}

/// Upper hull over [f_r - 1, f_{r+1} - 1] without its two end points, for
/// comparison with hull_points(r).
inline std::vector<GraphPoint> computed_hull_points(int r) {
    auto hull = upper_hull(fib(r) - 1, fib(r + 1) - 1);
    if (hull.size() <= 2) return {};
    return {hull.begin() + 1, hull.end() - 1};
}

}  // namespace fibpart
