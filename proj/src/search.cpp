#include "rotlab/search.hpp"

#include <cmath>

namespace rotlab {

void SearchConfig::validate() const {
    if (defect_target <= 0) throw ParamViolation("SearchConfig: defect_target must be > 0");
    if (step_init <= 0) throw ParamViolation("SearchConfig: step_init must be > 0");
    if (!(armijo_c > 0 && armijo_c < 1))
        throw ParamViolation("SearchConfig: armijo_c must lie in (0,1)");
    if (mu < 0) throw ParamViolation("SearchConfig: mu must be >= 0");
    if (max_iters < 0) throw ParamViolation("SearchConfig: max_iters must be >= 0");
}

namespace {

void check_shapes(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                  const UnitaryTuple& anchor) {
    if (static_cast<int>(tuple.size()) != phases.n || anchor.size() != tuple.size())
        throw DimensionMismatch("search: tuple/anchor length must equal n");
    const Eigen::Index dim = tuple[0].rows();
    for (size_t j = 0; j < tuple.size(); ++j)
        if (tuple[j].rows() != dim || tuple[j].cols() != dim || anchor[j].rows() != dim ||
            anchor[j].cols() != dim)
            throw DimensionMismatch("search: all matrices must share one square dimension");
}

double frob2(const Matrix& m) { return m.squaredNorm(); }

// J and its Euclidean gradient (real inner product Re tr(A* B))
double objective_and_gradient(const PhaseMatrix& phases, const UnitaryTuple& v,
                              const UnitaryTuple& anchor, double mu, UnitaryTuple* grad) {
    const int n = phases.n;
    const Eigen::Index dim = v[0].rows();
    if (grad)
        for (int j = 0; j < n; ++j) (*grad)[j] = Matrix::Zero(dim, dim);
    double obj = 0;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            cdouble w = std::polar(1.0, 2.0 * M_PI * phases.theta(j, k));
            Matrix d = v[k] * v[j] - w * v[j] * v[k];
            obj += frob2(d);
            if (grad) {
                (*grad)[k] += 2.0 * (d * v[j].adjoint() - std::conj(w) * v[j].adjoint() * d);
                (*grad)[j] += 2.0 * (v[k].adjoint() * d - std::conj(w) * d * v[k].adjoint());
            }
        }
    }
    if (mu != 0) {
        for (int j = 0; j < n; ++j) {
            Matrix d = v[j] - anchor[j];
            obj += mu * frob2(d);
            if (grad) (*grad)[j] += 2.0 * mu * d;
        }
    }
    return obj;
}

// tangent coordinates: S_j = skew(V_j* G_j)
std::vector<Matrix> tangent_coords(const UnitaryTuple& v, const UnitaryTuple& grad) {
    std::vector<Matrix> s(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
        Matrix m = v[j].adjoint() * grad[j];
        s[j] = (m - m.adjoint()) / 2.0;
    }
    return s;
}

double dot(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    double acc = 0;
    for (size_t j = 0; j < a.size(); ++j) acc += (a[j].adjoint() * b[j]).trace().real();
    return acc;
}

// Cayley retraction along -t S
Matrix cayley_step(const Matrix& v, const Matrix& s, double t) {
    const Eigen::Index n = v.rows();
    Matrix x = -(t / 2.0) * s;
    Matrix c = (Matrix::Identity(n, n) - x)
                   .partialPivLu()
                   .solve(Matrix::Identity(n, n) + x);
    return v * c;
}

double max_unitarity_drift(const UnitaryTuple& v) {
    double worst = 0;
    for (const auto& m : v)
        worst = std::max(worst,
                         op_norm(Matrix(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()))));
    return worst;
}

void polar_correct(UnitaryTuple& v) {
    for (auto& m : v) {
        Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        m = svd.matrixU() * svd.matrixV().adjoint();
    }
}

} // namespace

double relation_objective(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                          const UnitaryTuple& anchor, double mu) {
    check_shapes(phases, tuple, anchor);
    return objective_and_gradient(phases, tuple, anchor, mu, nullptr);
}

UnitaryTuple riemannian_gradient(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                                 const UnitaryTuple& anchor, double mu) {
    check_shapes(phases, tuple, anchor);
    UnitaryTuple g(tuple.size());
    objective_and_gradient(phases, tuple, anchor, mu, &g);
    std::vector<Matrix> s = tangent_coords(tuple, g);
    UnitaryTuple out(tuple.size());
    for (size_t j = 0; j < tuple.size(); ++j) out[j] = tuple[j] * s[j];
    return out;
}

SearchResult repair(const PhaseMatrix& phases, const UnitaryTuple& tuple,
                    const SearchConfig& cfg, const ToleranceConfig& tol) {
    cfg.validate();
    check_shapes(phases, tuple, tuple);
    if (defect(phases, tuple).max >= 2.0)
        throw ParamViolation("repair: initial defect >= 2, relations carry no information");

    const int n = phases.n;
    UnitaryTuple v = tuple;
    const UnitaryTuple& anchor = tuple;
    double mu = cfg.mu;

    SearchResult res;
    res.repaired = v;

    UnitaryTuple grad(n);
    double obj = objective_and_gradient(phases, v, anchor, mu, &grad);
    std::vector<Matrix> s = tangent_coords(v, grad);
    res.objective_trace.push_back(obj);

    std::vector<Matrix> prev_s, prev_step;
    double t = cfg.step_init;
    int stall = 0;
    const int stall_limit = 40;
    const double mu_floor = 1e-9;

    int it = 0;
    while (it < cfg.max_iters) {
        double d = defect(phases, v).max;
        if (d <= cfg.defect_target) {
            res.converged = true;
            break;
        }
        double gn2 = dot(s, s);
        bool need_relax = (gn2 < 1e-26) || (stall > stall_limit);
        if (need_relax) {
            if (mu > mu_floor) {
                mu = std::max(mu / 4.0, 0.0);
                if (mu <= mu_floor) mu = 0.0;
                stall = 0;
                prev_s.clear();
                obj = objective_and_gradient(phases, v, anchor, mu, &grad);
                s = tangent_coords(v, grad);
                res.objective_trace.push_back(obj);
                continue;
            }
            break; // stalled with no penalty left
        }

        // Barzilai-Borwein trial step, clamped
        if (!prev_s.empty()) {
            double sy = 0, ss = 0;
            for (size_t j = 0; j < s.size(); ++j) {
                Matrix y = s[j] - prev_s[j];
                sy += (prev_step[j].adjoint() * y).trace().real();
                ss += (prev_step[j].adjoint() * prev_step[j]).trace().real();
            }
            if (sy > 1e-300) t = std::clamp(ss / sy, 1e-10, 1e3);
        }

        bool accepted = false;
        UnitaryTuple vn(n);
        double objn = 0;
        for (int bt = 0; bt < 60; ++bt) {
            for (int j = 0; j < n; ++j) vn[j] = cayley_step(v[j], s[j], t);
            objn = objective_and_gradient(phases, vn, anchor, mu, nullptr);
            if (objn <= obj - cfg.armijo_c * t * gn2) {
                accepted = true;
                break;
            }
            t /= 2.0;
        }
        if (!accepted) {
            stall = stall_limit + 1;
            continue;
        }

        prev_step.resize(n);
        for (int j = 0; j < n; ++j) prev_step[j] = -t * s[j];
        prev_s = s;

        stall = (obj - objn < 1e-16 * std::max(obj, 1e-300)) ? stall + 1 : 0;
        v = std::move(vn);
        obj = objn;
        objective_and_gradient(phases, v, anchor, mu, &grad);
        s = tangent_coords(v, grad);
        res.objective_trace.push_back(obj);
        ++it;

        if (max_unitarity_drift(v) > 1e-12) polar_correct(v);
    }

    res.repaired = std::move(v);
    res.iterations = it;
    res.final_defect = defect(phases, res.repaired).max;
    res.converged = res.final_defect <= cfg.defect_target;
    double dist = 0;
    for (int j = 0; j < n; ++j)
        dist = std::max(dist, op_norm(Matrix(res.repaired[j] - tuple[j])));
    res.distance_moved = dist;
    res.status = res.converged ? "converged" : "diverged: objective stagnated above target";
    return res;
}

PlantedInstance plant_instance(const PhaseMatrix& phases, long long multiplicity, double noise,
                               std::uint64_t seed) {
    if (noise < 0) throw ParamViolation("plant_instance: noise must be >= 0");
    UnitaryTuple exact = (phases.n == 2)
                             ? rational_pair_rep(phases.rational_entry(0, 1), multiplicity)
                             : rational_torus3_rep(phases, multiplicity);
    const Eigen::Index dim = exact[0].rows();

    Rng rng(splitmix64(seed));
    Matrix w = haar_unitary(dim, rng);
    PlantedInstance out;
    out.ground_truth.reserve(exact.size());
    for (const auto& m : exact) out.ground_truth.push_back(w * m * w.adjoint());

    out.tuple.reserve(exact.size());
    for (const auto& m : out.ground_truth) {
        if (noise == 0) {
            out.tuple.push_back(m);
        } else {
            Matrix x = random_skew_hermitian(dim, noise, rng);
            out.tuple.push_back(exp_skew_hermitian(x) * m);
        }
    }
    out.defect = defect(phases, out.tuple).max;
    return out;
}

} // namespace rotlab
