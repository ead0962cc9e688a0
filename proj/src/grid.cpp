#include "epsteinlab/grid.hpp"

#include <algorithm>
#include <cmath>

namespace epsteinlab {

GridChart::GridChart(int nx, int ny, double x0, double y0, double dx, double dy, bool periodic_x,
                     bool periodic_y)
    : nx_(nx), ny_(ny), x0_(x0), y0_(y0), dx_(dx), dy_(dy), px_(periodic_x), py_(periodic_y) {
    if (nx < 5 || ny < 5) throw ConfigInvalid("grid charts need at least 5 nodes per axis");
    if (!(dx > 0.0) || !(dy > 0.0)) throw ConfigInvalid("grid spacings must be positive");
    mask_.assign(size(), NodeKind::Interior);
    reclassify();
}

std::shared_ptr<const GridChart> GridChart::square(double lo, double hi, int n) {
    const double h = (hi - lo) / (n - 1);
    return std::make_shared<const GridChart>(n, n, lo, lo, h, h);
}

std::shared_ptr<const GridChart> GridChart::torus(double x0, double y0, double lx, double ly, int nx, int ny) {
    return std::make_shared<const GridChart>(nx, ny, x0, y0, lx / nx, ly / ny, true, true);
}

std::size_t GridChart::active_count() const {
    return static_cast<std::size_t>(
        std::count_if(mask_.begin(), mask_.end(), [](NodeKind k) { return k != NodeKind::Excluded; }));
}

void GridChart::reclassify() {
    auto excluded = [&](int i, int j) {
        if (px_) i = (i + nx_) % nx_;
        if (py_) j = (j + ny_) % ny_;
        if (i < 0 || i >= nx_ || j < 0 || j >= ny_) return false;
        return mask_[index(i, j)] == NodeKind::Excluded;
    };
    for (int j = 0; j < ny_; ++j) {
        for (int i = 0; i < nx_; ++i) {
            auto& m = mask_[index(i, j)];
            if (m == NodeKind::Excluded) continue;
            const bool edge = (!px_ && (i == 0 || i == nx_ - 1)) || (!py_ && (j == 0 || j == ny_ - 1));
            const bool hole = excluded(i - 1, j) || excluded(i + 1, j) || excluded(i, j - 1) || excluded(i, j + 1);
            m = (edge || hole) ? NodeKind::Boundary : NodeKind::Interior;
        }
    }
}

GridChart GridChart::excluding(const std::function<bool(cplx)>& pred) const {
    GridChart out = *this;
    for (std::size_t k = 0; k < size(); ++k)
        if (pred(z(k))) out.mask_[k] = NodeKind::Excluded;
    out.reclassify();
    return out;
}

GridChart GridChart::unwrapped() const {
    GridChart out = *this;
    out.px_ = false;
    out.py_ = false;
    out.reclassify();
    return out;
}

int GridChart::edge_distance(int i, int j) const {
    int d = std::numeric_limits<int>::max();
    if (!px_) d = std::min({d, i, nx_ - 1 - i});
    if (!py_) d = std::min({d, j, ny_ - 1 - j});
    return d;
}

bool GridChart::same_as(const GridChart& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && x0_ == o.x0_ && y0_ == o.y0_ && dx_ == o.dx_ && dy_ == o.dy_ &&
           px_ == o.px_ && py_ == o.py_ && mask_ == o.mask_;
}

bool Region::contains(const GridChart& c, std::size_t k) const {
    if (!c.active(k)) return false;
    if (margin > 0 && c.edge_distance(c.col(k), c.row(k)) < margin) return false;
    return !pred || pred(c.z(k));
}

double node_norm(double v) { return std::abs(v); }
double node_norm(const cplx& v) { return std::abs(v); }
double node_norm(const Vec2& v) { return std::sqrt(v.norm2()); }
double node_norm(const Sym2& v) { return v.norm(); }
double node_norm(const Mat2& v) { return v.norm(); }

}  // namespace epsteinlab
