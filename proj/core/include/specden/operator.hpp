#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

namespace specden {

/// Closed interval [a,b] intended to enclose an operator's spectrum.
struct SpectralInterval {
    double a = -1.0;
    double b = 1.0;

    SpectralInterval() = default;
    SpectralInterval(double a, double b);

    double width() const { return b - a; }
};

/// Symmetric linear map accessed only through block matrix-vector products.
/// Implementations are immutable after construction and safe for concurrent
/// read-only use; apply_block must be deterministic for a fixed input.
class SymmetricOperator {
public:
    virtual ~SymmetricOperator() = default;

    virtual Eigen::Index dim() const = 0;

    /// y = A * x for an n-by-k block x. y must already have the shape of x.
    virtual void apply_block(const Eigen::Ref<const Eigen::MatrixXd>& x,
                             Eigen::Ref<Eigen::MatrixXd> y) const = 0;

    /// Allocating convenience wrapper around apply_block.
    Eigen::MatrixXd apply(const Eigen::Ref<const Eigen::MatrixXd>& x) const;

    /// Cheap guaranteed spectrum enclosure when entries are accessible.
    virtual std::optional<SpectralInterval> gershgorin_bounds() const { return std::nullopt; }
};

/// Dense symmetric matrix operator. Symmetrizes its input as (M + M^T)/2.
class DenseSymmetric final : public SymmetricOperator {
public:
    explicit DenseSymmetric(Eigen::MatrixXd matrix);

    Eigen::Index dim() const override { return matrix_.rows(); }
    void apply_block(const Eigen::Ref<const Eigen::MatrixXd>& x,
                     Eigen::Ref<Eigen::MatrixXd> y) const override;
    std::optional<SpectralInterval> gershgorin_bounds() const override;

    const Eigen::MatrixXd& matrix() const { return matrix_; }

private:
    Eigen::MatrixXd matrix_;
};

/// Sparse symmetric matrix in compressed-row storage holding the full
/// symmetric pattern: (i,j) is stored iff (j,i) is stored with equal value,
/// and column indices are strictly increasing within each row.
class SparseSymmetric final : public SymmetricOperator {
public:
    SparseSymmetric(Eigen::Index n, std::vector<Eigen::Index> row_offsets,
                    std::vector<Eigen::Index> cols, std::vector<double> values);

    /// Builds from (row, col, value) triplets; duplicates are summed and the
    /// result is validated for structural symmetry.
    static SparseSymmetric
    from_triplets(Eigen::Index n, const std::vector<std::tuple<Eigen::Index, Eigen::Index, double>>& triplets);

    Eigen::Index dim() const override { return n_; }
    void apply_block(const Eigen::Ref<const Eigen::MatrixXd>& x,
                     Eigen::Ref<Eigen::MatrixXd> y) const override;
    std::optional<SpectralInterval> gershgorin_bounds() const override;

    Eigen::Index nnz() const { return static_cast<Eigen::Index>(values_.size()); }
    const std::vector<Eigen::Index>& row_offsets() const { return row_offsets_; }
    const std::vector<Eigen::Index>& col_indices() const { return cols_; }
    const std::vector<double>& values() const { return values_; }

private:
    Eigen::Index n_ = 0;
    std::vector<Eigen::Index> row_offsets_;
    std::vector<Eigen::Index> cols_;
    std::vector<double> values_;
};

/// Lazy view of tau(A) = (2A - (a+b) I) / (b - a); no matrix is rebuilt and
/// the base operator must outlive the view. Maps the enclosing interval onto
/// [-1,1].
class AffineTransformed final : public SymmetricOperator {
public:
    AffineTransformed(const SymmetricOperator& base, const SpectralInterval& interval);

    Eigen::Index dim() const override { return base_.dim(); }
    void apply_block(const Eigen::Ref<const Eigen::MatrixXd>& x,
                     Eigen::Ref<Eigen::MatrixXd> y) const override;

    /// Forward map tau(t) for scalars.
    double map(double t) const;
    /// Inverse map tau^{-1}(s).
    double unmap(double s) const;

private:
    const SymmetricOperator& base_;
    double shift_;
    double scale_;
};

AffineTransformed affine_transform(const SymmetricOperator& a, const SpectralInterval& interval);

/// Interval [lo - margin*w, hi + margin*w] with w = hi - lo around the
/// spectrum of a. Gershgorin bounds (when available) guarantee the enclosure;
/// 30 seeded power iterations on shifted operators tighten each end within
/// them.
SpectralInterval estimate_spectral_interval(const SymmetricOperator& a, double margin);

} // namespace specden
