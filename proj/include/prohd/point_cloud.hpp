#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prohd {

/// Raised when two operands disagree on dimension.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual);
};

/// Raised by internal consistency checks (estimate above its own bound, etc).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Dense row-major n x D cloud of finite coordinates.
///
/// Construction validates shape and finiteness; an empty cloud cannot exist.
/// Coordinates are stored as double regardless of on-disk precision.
class PointCloud {
public:
    PointCloud(std::vector<double> coords, std::size_t dim);

    /// Convenience for tests and small literals: every row must have equal length.
    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }

    std::span<const double> row(std::size_t i) const noexcept
    {
        return {coords_.data() + i * dim_, dim_};
    }
    const double* data() const noexcept { return coords_.data(); }
    const std::vector<double>& coords() const noexcept { return coords_; }

    /// Rows at the given positions, in the given order.
    PointCloud subset(std::span<const std::size_t> indices) const;

    /// Rows of *this followed by rows of other.
    PointCloud concat(const PointCloud& other) const;

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::vector<double> coords_;
    std::size_t n_ = 0;
    std::size_t dim_ = 0;
};

/// Unit vector in R^D. Normalizes on construction; rejects zero or non-finite input.
class Direction {
public:
    explicit Direction(std::vector<double> components);

    /// Canonical basis vector e_axis in R^dim.
    static Direction axis(std::size_t dim, std::size_t axis);

    std::size_t dim() const noexcept { return u_.size(); }
    std::span<const double> components() const noexcept { return u_; }
    double operator[](std::size_t i) const noexcept { return u_[i]; }

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    std::vector<double> u_;
};

/// Undirected Hausdorff distance together with both directed parts.
///
/// The witness pair realizes `value`: when h(A,B) >= h(B,A) it is the
/// farthest a and its nearest b, otherwise the farthest b and its nearest a.
struct HausdorffResult {
    double value = 0.0;
    double directed_ab = 0.0;
    double directed_ba = 0.0;
    std::size_t witness_a = 0;
    std::size_t witness_b = 0;

    friend bool operator==(const HausdorffResult&, const HausdorffResult&) = default;
};

void require_same_dim(std::size_t expected, std::size_t actual);

} // namespace prohd
