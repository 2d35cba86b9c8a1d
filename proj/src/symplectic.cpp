#include "phasecat/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "phasecat/errors.hpp"

namespace phasecat {

namespace {

void require_even_square(const Mat& m, const char* who) {
    if (m.rows() != m.cols()) throw DimensionMismatch(std::string(who) + ": square matrix required");
    if (m.rows() % 2 != 0) throw DimensionMismatch(std::string(who) + ": odd dimension");
    if (m.rows() == 0) throw DimensionMismatch(std::string(who) + ": empty matrix");
}

// Canonical sign: largest-magnitude component positive.
void fix_sign(Eigen::Ref<Vec> v) {
    int idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    if (v(idx) < 0.0) v = -v;
}

}  // namespace

double wedge(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("wedge: vectors of different length");
    if (a.size() % 2 != 0 || a.size() == 0) throw DimensionMismatch("wedge: length must be 2n");
    const int n = static_cast<int>(a.size()) / 2;
    // (J a) . b with J = [[0, I], [-I, 0]]
    return a.tail(n).dot(b.head(n)) - a.head(n).dot(b.tail(n));
}

bool is_symplectic(const Mat& m, double tol) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) return false;
    const int n = static_cast<int>(m.rows()) / 2;
    const Mat j = symplectic_form(n);
    const double defect = (m * j * m.transpose() - j).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, std::pow(m.cwiseAbs().maxCoeff(), 2));
    return defect <= tol * scale;
}

void require_symplectic(const Mat& m, double tol) {
    require_even_square(m, "require_symplectic");
    if (!is_symplectic(m, tol)) throw NotSymplectic("matrix fails S J S^T = J");
}

Mat cayley(const Mat& s) {
    require_even_square(s, "cayley");
    const int n = static_cast<int>(s.rows()) / 2;
    const Mat sp = s + Mat::Identity(2 * n, 2 * n);
    Eigen::JacobiSVD<Mat> svd(sp, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= 1e-12 * std::max(1.0, smax))
        throw SingularCayley("cayley: S + I singular (eigenvalue of S at -1); use a limit");
    const Mat c = symplectic_form(n) * (s - Mat::Identity(2 * n, 2 * n)) * sp.inverse();
    return 0.5 * (c + c.transpose());
}

SstDiagonalization diagonalize_sst(const Mat& s) {
    require_symplectic(s);
    Mat p = s * s.transpose();
    return diagonalize_sst_of_positive((0.5 * (p + p.transpose())).eval());
}

SstDiagonalization diagonalize_sst_of_positive(const Mat& p_in) {
    require_symplectic(p_in);
    if (symmetry_defect(p_in) > 1e-9)
        throw NotSymmetric("diagonalize_sst_of_positive: matrix not symmetric");
    const int dim = static_cast<int>(p_in.rows());
    const int n = dim / 2;
    const Mat j = symplectic_form(n);
    const Mat p = 0.5 * (p_in + p_in.transpose());

    Eigen::SelfAdjointEigenSolver<Mat> es(p);
    if (es.info() != Eigen::Success) throw Error("diagonalize_sst: eigensolver failed");
    const Vec evals = es.eigenvalues();  // ascending
    const Mat evecs = es.eigenvectors();

    const double lmax = evals.cwiseAbs().maxCoeff();
    const double unit_tol = 1e-7 * std::max(1.0, lmax);

    // Pool the eigenvalue-one cluster; everything above it pairs with its
    // reciprocal below via b = -J a.
    std::vector<int> unit_pool;
    std::vector<int> upper;
    for (int i = 0; i < dim; ++i) {
        if (std::abs(evals(i) - 1.0) <= unit_tol)
            unit_pool.push_back(i);
        else if (evals(i) > 1.0)
            upper.push_back(i);
    }
    if (unit_pool.size() % 2 != 0 || static_cast<int>(upper.size() + unit_pool.size() / 2) != n)
        throw NotSymplectic("diagonalize_sst: spectrum does not pair as (l, 1/l)");

    std::sort(upper.begin(), upper.end(),
              [&](int a, int b) { return evals(a) > evals(b); });

    std::vector<std::pair<double, Vec>> axes;
    axes.reserve(n);
    for (int idx : upper) axes.emplace_back(evals(idx), evecs.col(idx));

    // Isotropic Gram-Schmidt inside the unit cluster: each accepted vector a
    // removes both a and J a from the remaining pool.
    const std::size_t m_unit = unit_pool.size() / 2;
    std::vector<Vec> chosen;
    for (std::size_t k = 0; k < m_unit; ++k) {
        Vec best;
        double best_norm = -1.0;
        for (int idx : unit_pool) {
            Vec w = evecs.col(idx);
            for (const Vec& a : chosen) {
                w -= a.dot(w) * a;
                const Vec ja = j * a;
                w -= ja.dot(w) * ja;
            }
            const double nw = w.norm();
            if (nw > best_norm) {
                best_norm = nw;
                best = w;
            }
        }
        if (best_norm < 1e-8) throw Error("diagonalize_sst: degenerate unit cluster");
        chosen.push_back(best / best_norm);
    }
    for (const Vec& a : chosen) axes.emplace_back(1.0, a);

    std::stable_sort(axes.begin(), axes.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    SstDiagonalization out;
    out.o.resize(dim, dim);
    out.lambda.resize(dim);
    for (int i = 0; i < n; ++i) {
        Vec a = axes[i].second;
        fix_sign(a);
        out.o.col(i) = a;
        out.o.col(n + i) = -(j * a);
        out.lambda(i) = axes[i].first;
        out.lambda(n + i) = 1.0 / axes[i].first;
    }
    return out;
}

Mat symplectic_square_root(const Mat& p) {
    const SstDiagonalization d = diagonalize_sst_of_positive(p);
    return d.o * d.lambda.cwiseSqrt().asDiagonal();
}

EulerDecomposition euler_decompose(const Mat& s) {
    SstDiagonalization d = diagonalize_sst(s);
    EulerDecomposition out;
    out.o = d.o;
    out.lambda = d.lambda.cwiseSqrt();
    out.o_prime = out.lambda.cwiseInverse().asDiagonal() * out.o.transpose() * s;
    return out;
}

Signature signature(const Mat& m, double zero_tol) {
    if (m.rows() != m.cols()) throw DimensionMismatch("signature: square matrix required");
    if (symmetry_defect(m) > 1e-9) throw NotSymmetric("signature: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    const Vec ev = es.eigenvalues();
    const double tol = zero_tol >= 0.0 ? zero_tol : 1e-8 * ev.cwiseAbs().maxCoeff();
    Signature sig;
    for (int i = 0; i < ev.size(); ++i) {
        if (ev(i) > tol)
            ++sig.n_plus;
        else if (ev(i) < -tol)
            ++sig.n_minus;
        else
            ++sig.n_zero;
    }
    return sig;
}

}  // namespace phasecat
