#pragma once

#include <vector>

#include "misoshift/matcore.hpp"

namespace misoshift {

enum class ShiftKind { unilateral, bilateral };

/// Finite horizon of weights of an operator-weighted shift.  Unilateral
/// sequences are indexed 1..H; bilateral ones (-H+1)..H.  Every weight must
/// be invertible.
class WeightSequence {
public:
    WeightSequence() = default;
    WeightSequence(ShiftKind kind, int dim, std::vector<SquareMatrix> weights);

    static WeightSequence unilateral(std::vector<SquareMatrix> weights) {
        const int dim = weights.empty() ? 0 : weights.front().dim();
        return WeightSequence(ShiftKind::unilateral, dim, std::move(weights));
    }
    static WeightSequence bilateral(std::vector<SquareMatrix> weights) {
        const int dim = weights.empty() ? 0 : weights.front().dim();
        return WeightSequence(ShiftKind::bilateral, dim, std::move(weights));
    }

    ShiftKind kind() const { return kind_; }
    int dim() const { return dim_; }
    long horizon() const { return horizon_; }
    long first_index() const { return (kind_ == ShiftKind::unilateral) ? 1 : -horizon_ + 1; }
    long last_index() const { return horizon_; }
    size_t size() const { return weights_.size(); }

    const SquareMatrix& weight(long j) const;
    const std::vector<SquareMatrix>& weights() const { return weights_; }

    /// Largest stored weight operator norm (recorded uniform bound).
    double max_weight_norm() const;

private:
    ShiftKind kind_ = ShiftKind::unilateral;
    int dim_ = 0;
    long horizon_ = 0;
    std::vector<SquareMatrix> weights_;
};

/// (S_{j+n} ... S_{j+1})* (S_{j+n} ... S_{j+1}); n = 0 gives I.
HermitianMatrix gram(const WeightSequence& w, long j, long n);

/// Diagonal block j of beta_m: the alternating binomial sum of gram(w, j, k).
HermitianMatrix beta_block(const WeightSequence& w, int m, long j);

struct IsometryReport {
    int m = 0;
    long first_block = 0;                ///< first checked block index j
    std::vector<double> block_residuals; ///< ||beta_m block||_F per j
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
    double norm_estimate = 0.0; ///< max_j ||S_j||; lower bound of the true sup
};

/// Checks every beta_m block the horizon supports.  tol <= 0 selects the
/// default 1e-8 * (1 + max gram norm).
IsometryReport verify_m_isometry(const WeightSequence& w, int m, double tol = 0.0);

/// sup_n ||S_n|| over the stored range.
double shift_norm(const WeightSequence& w);

/// Bilateral adjoint as a weight sequence: output weight j is the
/// conjugate-transpose of input weight -j+1.
WeightSequence adjoint_flip(const WeightSequence& w);

/// The scalar weights alpha_j(x) = ||S_j...S_1 x|| / ||S_{j-1}...S_1 x|| of
/// the compressed classical shift, j = 1..H.
std::vector<double> scalar_compression(const WeightSequence& w, const std::vector<cx>& x);

/// Exact binomial coefficient, m <= 30.
long long binomial(int m, int k);

} // namespace misoshift
