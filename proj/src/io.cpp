#include "rotlab/io.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rotlab {

json matrix_to_json(const Matrix& m) {
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& j) {
    try {
        const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
        const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
        const auto& data = j.at("data");
        if (rows < 0 || cols < 0 || static_cast<Eigen::Index>(data.size()) != rows * cols)
            throw ParseError("matrix_from_json: data length does not match rows*cols");
        Matrix m(rows, cols);
        Eigen::Index idx = 0;
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index jj = 0; jj < cols; ++jj, ++idx)
                m(i, jj) = cdouble(data[idx][0].get<double>(), data[idx][1].get<double>());
        if (!m.allFinite()) throw ParseError("matrix_from_json: non-finite entries");
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix_from_json: ") + e.what());
    }
}

void save_matrix(const Matrix& m, const std::string& path) {
    write_json(matrix_to_json(m), path);
}

Matrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

json phase_to_json(const PhaseMatrix& phases) {
    json theta = json::array();
    for (int i = 0; i < phases.n; ++i) {
        json row = json::array();
        for (int j = 0; j < phases.n; ++j) row.push_back(phases.theta(i, j));
        theta.push_back(std::move(row));
    }
    json out{{"n", phases.n}, {"theta", std::move(theta)}};
    if (phases.exact) {
        json coeffs = json::array();
        for (const auto& cv : phases.exact->coeffs) {
            json vec = json::array();
            for (const auto& c : cv) vec.push_back({c.num, c.den});
            coeffs.push_back(std::move(vec));
        }
        out["exact"] = json{{"basis", phases.exact->basis},
                            {"values", phases.exact->basis_values},
                            {"coeffs", std::move(coeffs)}};
    }
    return out;
}

PhaseMatrix phase_from_json(const json& j) {
    try {
        PhaseMatrix out;
        out.n = j.at("n").get<int>();
        const auto& theta = j.at("theta");
        out.theta = Eigen::MatrixXd::Zero(out.n, out.n);
        for (int a = 0; a < out.n; ++a)
            for (int b = 0; b < out.n; ++b) out.theta(a, b) = theta.at(a).at(b).get<double>();
        if (j.contains("exact")) {
            ExactPhaseData exact;
            const auto& je = j.at("exact");
            exact.basis = je.at("basis").get<std::vector<std::string>>();
            if (je.contains("values")) {
                exact.basis_values = je.at("values").get<std::vector<double>>();
            } else {
                for (const auto& label : exact.basis)
                    exact.basis_values.push_back(parse_basis_label(label));
            }
            for (const auto& vec : je.at("coeffs")) {
                std::vector<RationalCoeff> cv;
                for (const auto& c : vec)
                    cv.push_back(RationalCoeff{c.at(0).get<long long>(), c.at(1).get<long long>()});
                exact.coeffs.push_back(std::move(cv));
            }
            out.exact = std::move(exact);
        }
        out.validate();
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("phase_from_json: ") + e.what());
    }
}

PhaseMatrix load_phase(const std::string& path) { return phase_from_json(load_json(path)); }

namespace {

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}
json optional_to_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

} // namespace

json report_to_json(const ObstructionReport& rep, const ToleranceConfig& tol) {
    json pairs = json::array();
    for (const auto& p : rep.per_pair) {
        pairs.push_back(json{{"j", p.j + 1},
                             {"k", p.k + 1},
                             {"defect", p.defect},
                             {"branch_theta", p.branch_theta},
                             {"used_common_branch", p.used_common_branch},
                             {"exel_rhs", optional_to_json(p.exel_rhs)},
                             {"trace_condition_residual",
                              optional_to_json(p.trace_condition_residual)},
                             {"rieffel_rank", optional_to_json(p.rieffel_rank)},
                             {"exel_lhs", optional_to_json(p.exel_lhs)},
                             {"flag", p.flag}});
    }
    return json{{"defect_max", rep.defect_max},
                {"per_pair", std::move(pairs)},
                {"common_branch_theta", optional_to_json(rep.common_branch_theta)},
                {"monomial_deviation", rep.monomial_deviation},
                {"n_monomial", rep.n_monomial},
                {"delta_cert", rep.delta_cert},
                {"verdict", to_string(rep.verdict)},
                {"meta", meta_block(tol)}};
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : ""; }
std::string fmt_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

} // namespace

// Columns are frozen; see docs/csv_schema.md. Additions are append-only.
std::string report_csv_header() {
    return "j,k,defect,branch_theta,used_common_branch,exel_rhs,"
           "trace_condition_residual,rieffel_rank,exel_lhs,monomial_deviation,verdict,flag";
}

std::string report_to_csv(const ObstructionReport& rep) {
    std::ostringstream os;
    os << report_csv_header() << "\n";
    for (const auto& p : rep.per_pair) {
        os << (p.j + 1) << ',' << (p.k + 1) << ',' << fmt(p.defect) << ',' << fmt(p.branch_theta)
           << ',' << (p.used_common_branch ? 1 : 0) << ',' << fmt_opt(p.exel_rhs) << ','
           << fmt_opt(p.trace_condition_residual) << ',' << fmt_opt(p.rieffel_rank) << ','
           << fmt_opt(p.exel_lhs) << ',' << fmt(rep.monomial_deviation) << ','
           << to_string(rep.verdict) << ',' << '"' << p.flag << '"' << "\n";
    }
    return os.str();
}

json search_result_to_json(const SearchResult& res) {
    json repaired = json::array();
    for (const auto& m : res.repaired) repaired.push_back(matrix_to_json(m));
    return json{{"final_defect", res.final_defect},
                {"distance_moved", res.distance_moved},
                {"iterations", res.iterations},
                {"converged", res.converged},
                {"status", res.status},
                {"objective_trace", res.objective_trace},
                {"repaired", std::move(repaired)}};
}

std::string objective_trace_csv(const SearchResult& res) {
    std::ostringstream os;
    os << "iteration,objective\n";
    for (size_t i = 0; i < res.objective_trace.size(); ++i)
        os << i << ',' << fmt(res.objective_trace[i]) << "\n";
    return os.str();
}

json certificate_to_json(const TripleCertificate& cert) {
    return json{{"bott_index_triple", cert.bott_index_triple},
                {"pairwise_exel", cert.pairwise_exel},
                {"commutator_norms", cert.commutator_norms},
                {"spectral_gap", cert.spectral_gap}};
}

json tolerances_to_json(const ToleranceConfig& tol) {
    return json{{"unitarity_tol", tol.unitarity_tol},
                {"eig_tol", tol.eig_tol},
                {"gap_tol", tol.gap_tol},
                {"normality_tol", tol.normality_tol}};
}

json meta_block(const ToleranceConfig& tol) {
    auto now = std::chrono::system_clock::now();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    return json{{"tool_version", ROTLAB_VERSION},
                {"generated_at_unix", secs},
                {"tolerances", tolerances_to_json(tol)}};
}

ToleranceConfig load_tolerances(const std::string& path) {
    json j = load_json(path);
    ToleranceConfig tol;
    tol.unitarity_tol = j.value("unitarity_tol", tol.unitarity_tol);
    tol.eig_tol = j.value("eig_tol", tol.eig_tol);
    tol.gap_tol = j.value("gap_tol", tol.gap_tol);
    tol.normality_tol = j.value("normality_tol", tol.normality_tol);
    if (tol.unitarity_tol <= 0 || tol.eig_tol <= 0 || tol.gap_tol <= 0 || tol.normality_tol <= 0)
        throw ParseError("load_tolerances: tolerance fields must be positive");
    return tol;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_json(const json& j, const std::string& path) { write_text(path, j.dump(2) + "\n"); }

json load_json(const std::string& path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::exception& e) {
        throw ParseError("load_json(" + path + "): " + e.what());
    }
}

} // namespace rotlab
