#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "prohd/random.hpp"
#include "prohd/selection.hpp"

namespace prohd {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr std::size_t kOversampling = 2;
constexpr int kPowerIterations = 7;

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& m)
{
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v)
{
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[pivot]))
            pivot = i;
    }
    if (v[pivot] < 0)
        v = -v;
}

} // namespace

std::size_t DirectionSet::pca_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const auto& e) { return e.kind == DirectionKind::pca; }));
}

DirectionSet pca_top_components(const PointCloud& z, std::size_t m, std::uint64_t seed)
{
    const auto n = static_cast<Eigen::Index>(z.size());
    const auto dim = static_cast<Eigen::Index>(z.dim());
    if (m < 1)
        throw std::invalid_argument("number of principal components must be >= 1");
    if (m > z.dim())
        throw std::invalid_argument("number of principal components exceeds the dimension");

    const Eigen::Map<const RowMatrix> raw(z.data(), n, dim);
    const Eigen::RowVectorXd mean = raw.colwise().mean();
    const RowMatrix centered = raw.rowwise() - mean;

    const auto width = static_cast<Eigen::Index>(
        std::min<std::size_t>({m + kOversampling, z.dim(), z.size()}));

    Rng rng(seed, 0x7063u);
    Eigen::MatrixXd omega(dim, width);
    for (Eigen::Index j = 0; j < width; ++j)
        for (Eigen::Index i = 0; i < dim; ++i)
            omega(i, j) = rng.normal();

    Eigen::MatrixXd q = orthonormal_basis(centered * omega);
    for (int it = 0; it < kPowerIterations; ++it) {
        const Eigen::MatrixXd w = orthonormal_basis(centered.transpose() * q);
        q = orthonormal_basis(centered * w);
    }

    const Eigen::MatrixXd small = q.transpose() * centered;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(small, Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const Eigen::MatrixXd& v = svd.matrixV();

    // anything below the tolerance is rounding noise in the centring
    const double tol = std::max(sigma.size() > 0 ? sigma[0] * 1e-9 : 0.0,
                                raw.norm() * 1e-12);
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;

    DirectionSet out;
    out.requested_pca = m;
    const auto available = std::min<Eigen::Index>(static_cast<Eigen::Index>(m), sigma.size());
    for (Eigen::Index i = 0; i < available; ++i) {
        if (!(sigma[i] > tol))
            break;
        Eigen::VectorXd comp = v.col(i);
        fix_sign(comp);
        out.entries.push_back({Direction(std::vector<double>(comp.data(), comp.data() + dim)),
                               DirectionKind::pca, static_cast<std::size_t>(i + 1),
                               sigma[i] * sigma[i] / denom});
    }
    return out;
}

} // namespace prohd
