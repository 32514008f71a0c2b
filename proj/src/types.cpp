#include "fdkit/types.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace fdkit {

void Grid::validate() const {
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(points_[i]))
            throw ArgumentError("grid point " + std::to_string(i) +
                                " is not finite");
    if (n < 2) return;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return points_[a] < points_[b];
    });
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t a = idx[i], b = idx[i + 1];
        if (points_[a] == points_[b])
            throw DuplicateGridPointError(std::min(a, b), std::max(a, b),
                                          points_[a]);
    }
}

std::string to_shortest(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace fdkit
