#include "rotlab/phase.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numeric>

namespace rotlab {

namespace {

double mod1(double x) {
    double r = std::fmod(x, 1.0);
    if (r < 0) r += 1.0;
    return r;
}

} // namespace

RationalPhase::RationalPhase(long long num, long long den) {
    if (den <= 0) throw ParamViolation("RationalPhase: denominator must be positive");
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    num %= den;
    if (num < 0) num += den;
    p = num;
    q = den;
}

RationalPhase to_rational(double x, long long max_den, double tol) {
    x = mod1(x);
    // continued-fraction convergents of x
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > static_cast<double>(max_den)) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
            return RationalPhase(p1, q1);
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 > 0 && std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
        return RationalPhase(p1, q1);
    throw NotRational("to_rational: no rational p/q with q <= " + std::to_string(max_den) +
                      " matches " + std::to_string(x));
}

double parse_basis_label(const std::string& label) {
    if (label == "1") return 1.0;
    if (label == "pi") return M_PI;
    if (label == "e") return std::exp(1.0);
    if (label.rfind("sqrt", 0) == 0) {
        long long k = std::stoll(label.substr(4));
        if (k <= 0) throw ParseError("parse_basis_label: bad radicand in " + label);
        return std::sqrt(static_cast<double>(k));
    }
    throw ParseError("parse_basis_label: unknown basis label '" + label +
                     "' (supply explicit basis values)");
}

PhaseMatrix PhaseMatrix::from_upper(int n, const std::vector<double>& upper) {
    if (n < 2) throw ParamViolation("PhaseMatrix: n must be >= 2");
    const size_t expect = static_cast<size_t>(n) * (n - 1) / 2;
    if (upper.size() != expect)
        throw ParamViolation("PhaseMatrix: expected " + std::to_string(expect) +
                             " upper-triangle entries");
    PhaseMatrix out;
    out.n = n;
    out.theta = Eigen::MatrixXd::Zero(n, n);
    size_t idx = 0;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            double t = mod1(upper[idx++]);
            out.theta(j, k) = t;
            out.theta(k, j) = (t == 0.0) ? 0.0 : mod1(1.0 - t);
        }
    }
    out.validate();
    return out;
}

PhaseMatrix PhaseMatrix::from_rationals(const std::vector<RationalPhase>& upper, int n) {
    std::vector<double> vals;
    vals.reserve(upper.size());
    for (const auto& r : upper) vals.push_back(r.value());
    PhaseMatrix out = from_upper(n, vals);
    ExactPhaseData exact;
    exact.basis = {"1"};
    exact.basis_values = {1.0};
    for (const auto& r : upper) exact.coeffs.push_back({RationalCoeff{r.p, r.q}});
    out.exact = std::move(exact);
    return out;
}

void PhaseMatrix::validate() const {
    if (n < 2 || theta.rows() != n || theta.cols() != n)
        throw ParamViolation("PhaseMatrix: shape mismatch");
    for (int j = 0; j < n; ++j) {
        if (theta(j, j) != 0.0)
            throw ParamViolation("PhaseMatrix: diagonal must be zero");
        for (int k = 0; k < n; ++k) {
            double t = theta(j, k);
            if (t < 0.0 || t >= 1.0)
                throw ParamViolation("PhaseMatrix: entries must lie in [0,1)");
            if (k > j) {
                double expect = (t == 0.0) ? 0.0 : mod1(1.0 - t);
                if (std::abs(theta(k, j) - expect) > 1e-12)
                    throw ParamViolation("PhaseMatrix: skew-phase symmetry violated at (" +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
    if (exact) {
        const size_t expect = static_cast<size_t>(n) * (n - 1) / 2;
        if (exact->coeffs.size() != expect)
            throw ParamViolation("PhaseMatrix: exact data must cover the upper triangle");
        if (exact->basis.size() != exact->basis_values.size())
            throw ParamViolation("PhaseMatrix: basis labels/values length mismatch");
        if (exact->basis.empty() || exact->basis_values[0] != 1.0)
            throw ParamViolation("PhaseMatrix: basis element 0 must be the constant 1");
        size_t idx = 0;
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k, ++idx) {
                const auto& cv = exact->coeffs[idx];
                if (cv.size() > exact->basis.size())
                    throw ParamViolation("PhaseMatrix: coefficient vector longer than basis");
                double acc = 0;
                for (size_t b = 0; b < cv.size(); ++b) {
                    if (cv[b].den <= 0)
                        throw ParamViolation("PhaseMatrix: nonpositive denominator in exact data");
                    acc += static_cast<double>(cv[b].num) / static_cast<double>(cv[b].den) *
                           exact->basis_values[b];
                }
                if (std::abs(mod1(acc) - theta(j, k)) > 1e-12)
                    throw ParamViolation("PhaseMatrix: exact data does not reproduce theta(" +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
}

int PhaseMatrix::upper_index(int j, int k) const {
    if (j > k) std::swap(j, k);
    if (j < 0 || k >= n || j == k) throw ParamViolation("PhaseMatrix: bad index pair");
    // entries (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return j * n - j * (j + 1) / 2 + (k - j - 1);
}

RationalPhase PhaseMatrix::rational_entry(int j, int k) const {
    if (exact) {
        const auto& cv = exact->coeffs[static_cast<size_t>(upper_index(j, k))];
        bool pure = true;
        for (size_t b = 1; b < cv.size(); ++b)
            if (cv[b].num != 0) pure = false;
        if (pure && !cv.empty()) {
            RationalPhase r(cv[0].num, cv[0].den);
            if (j > k) return RationalPhase(r.p == 0 ? 0 : r.q - r.p, r.q);
            return r;
        }
        throw NotRational("PhaseMatrix: entry (" + std::to_string(j) + "," + std::to_string(k) +
                          ") has irrational exact value");
    }
    return to_rational(theta(j, k));
}

NondegeneracyResult nondegeneracy_check(const PhaseMatrix& phases) {
    if (phases.n != 3)
        throw ParamViolation("nondegeneracy_check: only n = 3 is supported");
    if (!phases.exact)
        throw MissingExactData("nondegeneracy_check: exact phase data required");
    const auto& exact = *phases.exact;
    const size_t nbasis = exact.basis.size();

    // rows: 1, theta_12, theta_13, theta_23 as rational vectors over the basis
    std::vector<std::vector<mpq_class>> rows(4, std::vector<mpq_class>(nbasis, 0));
    rows[0][0] = 1;
    for (int e = 0; e < 3; ++e) {
        const auto& cv = exact.coeffs[static_cast<size_t>(e)];
        for (size_t b = 0; b < cv.size(); ++b)
            rows[e + 1][b] = mpq_class(static_cast<long>(cv[b].num),
                                       static_cast<long>(cv[b].den));
    }

    // exact Gaussian elimination
    int rank = 0;
    size_t col = 0;
    while (rank < 4 && col < nbasis) {
        int pivot = -1;
        for (int r = rank; r < 4; ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) { ++col; continue; }
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < 4; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            mpq_class factor = rows[r][col] / rows[rank][col];
            for (size_t c = col; c < nbasis; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
        ++col;
    }

    NondegeneracyResult out;
    out.rank = rank;
    out.nondegenerate = rank >= 3;
    return out;
}

} // namespace rotlab
