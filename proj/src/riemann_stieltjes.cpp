// riemann_stieltjes.cpp - box increments, tagged sums, step-integrator error terms and
// the partial-summation identity check
#include "dtrain/riemann_stieltjes.hpp"

#include <algorithm>
#include <cmath>

namespace dtrain::rs {

namespace {

// flat row-major index of a grid point, last axis fastest
long long flat_index(const std::vector<int>& point, const std::vector<long long>& strides) {
    long long idx = 0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        idx += point[i] * strides[i];
    }
    return idx;
}

std::vector<long long> make_strides(const std::vector<int>& sizes) {
    std::vector<long long> strides(sizes.size(), 1);
    for (int i = static_cast<int>(sizes.size()) - 2; i >= 0; --i) {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    return strides;
}

// evaluate g at every break-point combination in odometer order
std::vector<std::complex<double>> grid_values(const Fn& g,
                                              const std::vector<std::vector<double>>& axes) {
    std::vector<int> sizes;
    long long total = 1;
    for (const auto& axis : axes) {
        sizes.push_back(static_cast<int>(axis.size()));
        total *= static_cast<long long>(axis.size());
    }
    std::vector<std::complex<double>> values(total);
    std::vector<int> point(axes.size(), 0);
    std::vector<double> coords(axes.size());
    for (long long cursor = 0; cursor < total; ++cursor) {
        for (std::size_t i = 0; i < axes.size(); ++i) {
            coords[i] = axes[i][point[i]];
        }
        values[cursor] = g(coords);
        for (int i = static_cast<int>(axes.size()) - 1; i >= 0; --i) {
            if (++point[i] < sizes[i]) {
                break;
            }
            point[i] = 0;
        }
    }
    return values;
}

// alternating corner sum of cached grid values over one cell
std::complex<double> cell_increment(const std::vector<std::complex<double>>& values,
                                    const std::vector<long long>& strides,
                                    const std::vector<int>& cell, int dim) {
    std::complex<double> acc{0.0, 0.0};
    std::vector<int> corner(dim);
    for (int mask = 0; mask < (1 << dim); ++mask) {
        int low_corners = 0;
        for (int i = 0; i < dim; ++i) {
            const int up = (mask >> i) & 1;
            corner[i] = cell[i] + up;
            low_corners += 1 - up;
        }
        const double sign = (low_corners % 2 == 0) ? 1.0 : -1.0;
        acc += sign * values[flat_index(corner, strides)];
    }
    return acc;
}

} // namespace

void Rect::validate() const {
    if (lo.size() != hi.size()) {
        throw DomainError("Rect: lo and hi must have equal length");
    }
    if (lo.empty() || lo.size() > 4) {
        throw DomainError("Rect: dimension must lie in 1..4");
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || !(lo[i] < hi[i])) {
            throw DomainError("Rect: requires finite lo < hi on every axis");
        }
    }
}

std::complex<double> delta_n(const Fn& g, const Rect& rect) {
    rect.validate();
    const int dim = rect.dim();
    std::complex<double> acc{0.0, 0.0};
    std::vector<double> corner(dim);
    for (int mask = 0; mask < (1 << dim); ++mask) {
        int low_corners = 0;
        for (int i = 0; i < dim; ++i) {
            const int up = (mask >> i) & 1;
            corner[i] = up ? rect.hi[i] : rect.lo[i];
            low_corners += 1 - up;
        }
        const double sign = (low_corners % 2 == 0) ? 1.0 : -1.0;
        acc += sign * g(corner);
    }
    return acc;
}

void TaggedPartition::validate() const {
    if (breaks.size() != tags.size()) {
        throw DomainError("TaggedPartition: breaks and tags must have equal dimension");
    }
    if (breaks.empty() || breaks.size() > 4) {
        throw DomainError("TaggedPartition: dimension must lie in 1..4");
    }
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (breaks[i].size() < 2) {
            throw DomainError("TaggedPartition: every axis needs at least two breaks");
        }
        for (std::size_t j = 0; j + 1 < breaks[i].size(); ++j) {
            if (!(breaks[i][j] < breaks[i][j + 1])) {
                throw DomainError("TaggedPartition: breaks must increase strictly");
            }
        }
        if (tags[i].size() != breaks[i].size() - 1) {
            throw DomainError("TaggedPartition: one tag per cell per axis required");
        }
        for (std::size_t j = 0; j < tags[i].size(); ++j) {
            if (!(breaks[i][j] <= tags[i][j] && tags[i][j] <= breaks[i][j + 1])) {
                throw DomainError("TaggedPartition: tag outside its cell");
            }
        }
    }
}

long long TaggedPartition::cell_count() const {
    long long cells = 1;
    for (const auto& axis : breaks) {
        cells *= static_cast<long long>(axis.size()) - 1;
    }
    return cells;
}

TaggedPartition TaggedPartition::uniform_midpoint(const Rect& rect, int m) {
    rect.validate();
    if (m < 1) {
        throw DomainError("TaggedPartition: cell count per axis must be positive");
    }
    TaggedPartition partition;
    partition.breaks.resize(rect.dim());
    partition.tags.resize(rect.dim());
    for (int i = 0; i < rect.dim(); ++i) {
        const double width = (rect.hi[i] - rect.lo[i]) / m;
        partition.breaks[i].resize(m + 1);
        partition.tags[i].resize(m);
        for (int j = 0; j <= m; ++j) {
            partition.breaks[i][j] = (j == m) ? rect.hi[i] : rect.lo[i] + j * width;
        }
        for (int j = 0; j < m; ++j) {
            partition.tags[i][j] = rect.lo[i] + (j + 0.5) * width;
        }
    }
    return partition;
}

std::complex<double> rs_sum(const Fn& f, const Fn& g, const TaggedPartition& partition) {
    partition.validate();
    if (partition.cell_count() > cell_budget) {
        throw CellBudgetExceeded("rs_sum: partition exceeds the cell budget");
    }
    const int dim = static_cast<int>(partition.breaks.size());
    std::vector<int> sizes;
    std::vector<int> cells;
    for (const auto& axis : partition.breaks) {
        sizes.push_back(static_cast<int>(axis.size()));
        cells.push_back(static_cast<int>(axis.size()) - 1);
    }
    const std::vector<long long> strides = make_strides(sizes);
    const std::vector<std::complex<double>> values = grid_values(g, partition.breaks);

    std::complex<double> acc{0.0, 0.0};
    std::vector<int> cell(dim, 0);
    std::vector<double> tag(dim);
    const long long total = partition.cell_count();
    for (long long cursor = 0; cursor < total; ++cursor) {
        for (int i = 0; i < dim; ++i) {
            tag[i] = partition.tags[i][cell[i]];
        }
        acc += f(tag) * cell_increment(values, strides, cell, dim);
        for (int i = dim - 1; i >= 0; --i) {
            if (++cell[i] < cells[i]) {
                break;
            }
            cell[i] = 0;
        }
    }
    return acc;
}

double v_n(int k, int n_kicks, const std::vector<double>& z) {
    if (k < 1 || k > 4) {
        throw DomainError("v_n: dimension must lie in 1..4");
    }
    if (n_kicks < 1) {
        throw DomainError("v_n: kick count must be positive");
    }
    if (static_cast<int>(z.size()) != k) {
        throw DomainError("v_n: point dimension mismatch");
    }
    double count_product = 1.0;
    double z_product = 1.0;
    for (const double zi : z) {
        if (!(zi >= 0.0 && zi <= 1.0)) {
            throw DomainError("v_n: coordinates must lie in [0, 1]");
        }
        const double raw = std::floor(n_kicks * zi + 0.5);
        count_product *= std::clamp(raw, 0.0, double(n_kicks));
        z_product *= zi;
    }
    return count_product - std::pow(double(n_kicks), k) * z_product;
}

double variation_estimate(const Fn& g, const Rect& rect, int levels) {
    rect.validate();
    if (rect.dim() > 3) {
        throw DomainError("variation_estimate: dimension must lie in 1..3");
    }
    if (levels < 1 || levels > 8) {
        throw DomainError("variation_estimate: levels must lie in 1..8");
    }
    const int dim = rect.dim();
    double finest = 0.0;
    for (int level = 1; level <= levels; ++level) {
        const long long m = 1LL << level;
        long long total = 1;
        for (int i = 0; i < dim; ++i) {
            total *= m;
        }
        if (total > cell_budget) {
            throw CellBudgetExceeded("variation_estimate: dyadic level exceeds the cell budget");
        }
        const TaggedPartition partition =
            TaggedPartition::uniform_midpoint(rect, static_cast<int>(m));
        std::vector<int> sizes;
        for (const auto& axis : partition.breaks) {
            sizes.push_back(static_cast<int>(axis.size()));
        }
        const std::vector<long long> strides = make_strides(sizes);
        const std::vector<std::complex<double>> values = grid_values(g, partition.breaks);
        double sum = 0.0;
        std::vector<int> cell(dim, 0);
        for (long long cursor = 0; cursor < total; ++cursor) {
            sum += std::abs(cell_increment(values, strides, cell, dim));
            for (int i = dim - 1; i >= 0; --i) {
                if (++cell[i] < m) {
                    break;
                }
                cell[i] = 0;
            }
        }
        finest = sum;
    }
    return finest;
}

Lemma1Result verify_lemma1(const Fn& f, const Fn& g, const Rect& rect, int mesh_levels,
                           double tol) {
    rect.validate();
    if (mesh_levels < 0 || mesh_levels > 20) {
        throw DomainError("verify_lemma1: mesh_levels must lie in 0..20");
    }
    if (!(tol > 0.0)) {
        throw DomainError("verify_lemma1: tol must be positive");
    }
    const int m = 1 << mesh_levels;
    const TaggedPartition partition = TaggedPartition::uniform_midpoint(rect, m);
    Lemma1Result result;
    result.lhs = rs_sum(g, f, partition);
    result.rhs = rs_sum(f, g, partition);
    const double sign = (rect.dim() % 2 == 0) ? 1.0 : -1.0;
    result.discrepancy = std::abs(result.lhs - sign * result.rhs);
    result.pass = result.discrepancy <= tol;
    return result;
}

} // namespace dtrain::rs
