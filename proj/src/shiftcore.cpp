#include "misoshift/shiftcore.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace misoshift {

namespace {

unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("MISOSHIFT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

// Static partition of [0, count) across worker threads; fn(i) must be
// independent per index.
template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
    const unsigned workers = std::min<size_t>(thread_cap(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

WeightSequence::WeightSequence(ShiftKind kind, int dim, std::vector<SquareMatrix> weights)
    : kind_(kind), dim_(dim), weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidMatrix("weight sequence is empty");
    for (const auto& s : weights_) {
        if (s.dim() != dim_) throw DimMismatch("weights disagree on dim");
        require_invertible(s, "WeightSequence");
    }
    if (kind_ == ShiftKind::unilateral) {
        horizon_ = static_cast<long>(weights_.size());
    } else {
        if (weights_.size() % 2 != 0)
            throw InvalidMatrix("bilateral weight list must cover -H+1..H (even length)");
        horizon_ = static_cast<long>(weights_.size()) / 2;
    }
}

const SquareMatrix& WeightSequence::weight(long j) const {
    if (j < first_index() || j > last_index())
        throw IndexOutOfHorizon("weight index " + std::to_string(j) + " outside " +
                                std::to_string(first_index()) + ".." + std::to_string(last_index()));
    return weights_[static_cast<size_t>(j - first_index())];
}

double WeightSequence::max_weight_norm() const {
    double s = 0.0;
    for (const auto& w : weights_) s = std::max(s, operator_norm(w));
    return s;
}

HermitianMatrix gram(const WeightSequence& w, long j, long n) {
    if (n < 0) throw IndexOutOfHorizon("gram: negative count");
    if (n == 0) return HermitianMatrix::identity(w.dim());
    // Left-to-right product accumulation keeps the error linear in n.
    SquareMatrix prod = w.weight(j + 1);
    for (long i = j + 2; i <= j + n; ++i) prod = w.weight(i) * prod;
    return HermitianMatrix::symmetrize(prod.adjoint() * prod);
}

long long binomial(int m, int k) {
    if (m < 0 || m > 30 || k < 0 || k > m) throw InvalidMatrix("binomial: out of supported range");
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

HermitianMatrix beta_block(const WeightSequence& w, int m, long j) {
    SquareMatrix acc(w.dim());
    for (int k = 0; k <= m; ++k) {
        const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
        acc += gram(w, j, k).mat() * cx(sign * static_cast<double>(binomial(m, k)));
    }
    return HermitianMatrix::symmetrize(acc);
}

IsometryReport verify_m_isometry(const WeightSequence& w, int m, double tol) {
    if (m < 1) throw InvalidMatrix("verify_m_isometry: m must be >= 1");
    const long j_lo = (w.kind() == ShiftKind::unilateral) ? 0 : w.first_index();
    const long j_hi = w.last_index() - m;
    if (j_hi < j_lo)
        throw HorizonTooShort("horizon " + std::to_string(w.horizon()) +
                              " supports no beta_" + std::to_string(m) + " block");

    IsometryReport rep;
    rep.m = m;
    rep.first_block = j_lo;
    const size_t count = static_cast<size_t>(j_hi - j_lo) + 1;
    rep.block_residuals.resize(count);
    std::vector<double> gram_scale(count);

    parallel_for(count, [&](size_t i) {
        const long j = j_lo + static_cast<long>(i);
        double scale = 0.0;
        SquareMatrix acc(w.dim());
        for (int k = 0; k <= m; ++k) {
            const HermitianMatrix g = gram(w, j, k);
            scale = std::max(scale, g.mat().frobenius());
            const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
            acc += g.mat() * cx(sign * static_cast<double>(binomial(m, k)));
        }
        rep.block_residuals[i] = acc.frobenius();
        gram_scale[i] = scale;
    });

    double max_gram = 0.0;
    for (size_t i = 0; i < count; ++i) {
        rep.max_residual = std::max(rep.max_residual, rep.block_residuals[i]);
        max_gram = std::max(max_gram, gram_scale[i]);
    }
    rep.tolerance = (tol > 0.0) ? tol : tol::iso_rel * (1.0 + max_gram);
    rep.verdict = rep.max_residual <= rep.tolerance;
    rep.norm_estimate = w.max_weight_norm();
    return rep;
}

double shift_norm(const WeightSequence& w) { return w.max_weight_norm(); }

WeightSequence adjoint_flip(const WeightSequence& w) {
    if (w.kind() != ShiftKind::bilateral) throw WrongKind("adjoint_flip needs a bilateral sequence");
    // Output index j holds the adjoint of input index -j+1; for the index
    // range -H+1..H the map is a bijection onto itself.
    std::vector<SquareMatrix> flipped;
    flipped.reserve(w.size());
    for (long j = w.first_index(); j <= w.last_index(); ++j)
        flipped.push_back(w.weight(-j + 1).adjoint());
    return WeightSequence::bilateral(std::move(flipped));
}

std::vector<double> scalar_compression(const WeightSequence& w, const std::vector<cx>& x) {
    if (w.kind() != ShiftKind::unilateral) throw WrongKind("scalar_compression needs unilateral");
    if (static_cast<int>(x.size()) != w.dim()) throw DimMismatch("scalar_compression: vector dim");
    double nx = 0.0;
    for (const auto& v : x) nx += std::norm(v);
    if (nx == 0.0) throw ZeroVector("scalar_compression: x must be nonzero");

    // alpha_1 = ||S_1 x||, alpha_j = ||S_j...S_1 x|| / ||S_{j-1}...S_1 x||,
    // so the partial products telescope to ||S_n...S_1 x||.
    std::vector<double> alphas;
    std::vector<cx> cur = x;
    double prev_norm = 1.0;
    for (long j = 1; j <= w.last_index(); ++j) {
        const SquareMatrix& s = w.weight(j);
        std::vector<cx> next(static_cast<size_t>(w.dim()));
        for (int i = 0; i < w.dim(); ++i) {
            cx acc = 0.0;
            for (int k = 0; k < w.dim(); ++k) acc += s(i, k) * cur[static_cast<size_t>(k)];
            next[static_cast<size_t>(i)] = acc;
        }
        double nn = 0.0;
        for (const auto& v : next) nn += std::norm(v);
        nn = std::sqrt(nn);
        alphas.push_back(nn / prev_norm);
        prev_norm = nn;
        cur = std::move(next);
    }
    return alphas;
}

} // namespace misoshift
