#include "misoshift/json_io.hpp"

#include <fstream>

namespace misoshift {

namespace {

ordered_json complex_to_json(const cx& v) { return ordered_json::array({v.real(), v.imag()}); }

cx complex_from_json(const ordered_json& j) {
    if (j.is_number()) return cx(j.get<double>(), 0.0);
    if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
        const double re = j[0].get<double>();
        const double im = j.size() == 2 ? j[1].get<double>() : 0.0;
        return cx(re, im);
    }
    throw IoError("complex entry must be a number or [re, im]");
}

} // namespace

ordered_json to_json(const SquareMatrix& m) {
    ordered_json entries = ordered_json::array();
    for (const auto& v : m.entries()) entries.push_back(complex_to_json(v));
    return entries;
}

SquareMatrix matrix_from_json(const ordered_json& j, int dim) {
    if (!j.is_array() || j.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim))
        throw IoError("matrix must be a row-major array of dim^2 entries");
    std::vector<cx> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(complex_from_json(e));
    SquareMatrix m(dim, std::move(entries));
    if (!m.all_finite()) throw IoError("matrix has non-finite entries");
    return m;
}

ordered_json to_json(const MatrixPolynomial& p) {
    ordered_json j;
    j["dim"] = p.dim();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

MatrixPolynomial polynomial_from_json(const ordered_json& j) {
    if (!j.contains("dim") || !j.contains("coeffs")) throw IoError("polynomial needs dim and coeffs");
    const int dim = j["dim"].get<int>();
    std::vector<SquareMatrix> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(matrix_from_json(c, dim));
    return MatrixPolynomial(dim, std::move(coeffs));
}

ordered_json to_json(const WeightSequence& w) {
    ordered_json j;
    j["kind"] = (w.kind() == ShiftKind::unilateral) ? "unilateral" : "bilateral";
    j["dim"] = w.dim();
    j["first_index"] = w.first_index();
    ordered_json weights = ordered_json::array();
    for (const auto& s : w.weights()) weights.push_back(to_json(s));
    j["weights"] = weights;
    return j;
}

WeightSequence weights_from_json(const ordered_json& j) {
    if (!j.contains("kind") || !j.contains("dim") || !j.contains("weights"))
        throw IoError("weight sequence needs kind, dim and weights");
    const std::string kind = j["kind"].get<std::string>();
    const int dim = j["dim"].get<int>();
    std::vector<SquareMatrix> weights;
    for (const auto& s : j["weights"]) weights.push_back(matrix_from_json(s, dim));
    if (kind == "unilateral") {
        if (j.contains("first_index") && j["first_index"].get<long>() != 1)
            throw IoError("unilateral sequences start at index 1");
        return WeightSequence::unilateral(std::move(weights));
    }
    if (kind == "bilateral") {
        WeightSequence w = WeightSequence::bilateral(std::move(weights));
        if (j.contains("first_index") && j["first_index"].get<long>() != w.first_index())
            throw IoError("bilateral first_index must be -H+1 for horizon H");
        return w;
    }
    throw IoError("kind must be unilateral or bilateral");
}

ordered_json to_json(const IsometryReport& r) {
    ordered_json j;
    j["m"] = r.m;
    j["verdict"] = r.verdict;
    j["max_residual"] = r.max_residual;
    j["tolerance"] = r.tolerance;
    j["first_block"] = r.first_block;
    j["blocks_checked"] = r.block_residuals.size();
    j["block_residuals"] = r.block_residuals;
    // Finite-horizon estimate: a lower bound for the true sup-norm.
    j["norm_estimate"] = r.norm_estimate;
    return j;
}

ordered_json to_json(const PreconditionReport& r) {
    ordered_json j;
    j["side"] = (r.side == Side::unilateral) ? "unilateral" : "bilateral";
    j["horizon"] = r.horizon;
    j["p0_residual"] = r.p0_residual;
    j["p0_ok"] = r.p0_ok;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["min_eigenvalue_node"] = r.min_eigenvalue_node;
    j["all_positive"] = r.all_positive;
    j["capacity"] = r.capacity;
    j["divergence_suspected"] = r.divergence_suspected;
    return j;
}

ordered_json to_json(const ConstructionResult& r) {
    ordered_json j;
    j["polynomial"] = to_json(r.polynomial);
    j["capacity_estimate"] = r.capacity_estimate;
    j["preconditions"] = to_json(r.preconditions);
    j["report"] = to_json(r.report);
    j["weights"] = to_json(r.weights);
    return j;
}

ordered_json to_json(const CompletionResult& r) {
    ordered_json j;
    j["q"] = to_json(r.q);
    j["alpha"] = r.alpha;
    j["report"] = to_json(r.report);
    j["weights"] = to_json(r.weights);
    return j;
}

namespace {
const char* verdict_name(TriVerdict v) {
    switch (v) {
        case TriVerdict::yes: return "true";
        case TriVerdict::no: return "false";
        default: return "indeterminate";
    }
}
} // namespace

ordered_json to_json(const CommutativityEquivalenceReport& r) {
    ordered_json j;
    j["all_weights"] = verdict_name(r.all_weights);
    j["first_weights"] = verdict_name(r.first_weights);
    j["coefficients"] = verdict_name(r.coefficients);
    j["agree"] = r.agree;
    j["max_commutator_weights"] = r.max_commutator_weights;
    j["max_commutator_first"] = r.max_commutator_first;
    j["max_commutator_coeffs"] = r.max_commutator_coeffs;
    return j;
}

ordered_json to_json(const AdjointReport& r) {
    ordered_json j;
    j["adjoint_is_m_isometric"] = r.adjoint_is_m_isometric;
    if (r.inverse_polynomial) j["inverse_polynomial"] = to_json(*r.inverse_polynomial);
    if (r.adjoint_characterization)
        j["adjoint_characterization"] = to_json(*r.adjoint_characterization);
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

std::vector<SquareMatrix> prefix_from_json(const ordered_json& j) {
    if (!j.contains("dim") || !j.contains("matrices")) throw IoError("prefix needs dim and matrices");
    const int dim = j["dim"].get<int>();
    std::vector<SquareMatrix> out;
    for (const auto& m : j["matrices"]) out.push_back(matrix_from_json(m, dim));
    if (out.empty()) throw IoError("prefix must contain at least one matrix");
    return out;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw IoError("parse error in " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace misoshift
