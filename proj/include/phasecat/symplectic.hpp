#pragma once

#include "phasecat/linalg.hpp"

namespace phasecat {

/// Default tolerance for the symplectic-identity defect, relative to the
/// squared max-norm of the matrix.
constexpr double kSymplecticTol = 1e-10;

/// Eigenvalue sign counts of a real symmetric matrix.
struct Signature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    bool operator==(const Signature&) const = default;
};

/// Euler (Bloch-Messiah) factors S = O * diag(s, 1/s) * O'.
struct EulerDecomposition {
    Mat o;        // orthogonal symplectic
    Vec lambda;   // 2n diagonal entries (s_1..s_n, 1/s_1..1/s_n), s_i >= 1 descending
    Mat o_prime;  // orthogonal symplectic
};

/// Orthogonal-symplectic diagonalization S S^T = O L O^T.
struct SstDiagonalization {
    Mat o;       // orthogonal symplectic
    Vec lambda;  // (l_1..l_n, 1/l_1..1/l_n), l_i >= 1 descending
};

/// Symplectic (wedge) product (J a) . b = a_p.b_q - a_q.b_p.
double wedge(const Vec& a, const Vec& b);

/// True iff ||M J M^T - J||_max <= tol * max(1, ||M||_max^2).
bool is_symplectic(const Mat& m, double tol = kSymplecticTol);

/// Asserting variant; throws NotSymplectic.
void require_symplectic(const Mat& m, double tol = kSymplecticTol);

/// Cayley transform C_S = J (S - I)(S + I)^{-1}.  Throws SingularCayley when
/// S has an eigenvalue at -1 within tolerance; the limiting distributional
/// form is not implemented, perturb the input by an infinitesimal rotation
/// instead.
Mat cayley(const Mat& s);

SstDiagonalization diagonalize_sst(const Mat& s);

/// Same factorization applied to a symmetric positive-definite symplectic
/// matrix directly: P = O L O^T.
SstDiagonalization diagonalize_sst_of_positive(const Mat& p);

/// Symplectic S with S S^T = P for symmetric positive-definite symplectic P.
Mat symplectic_square_root(const Mat& p);

EulerDecomposition euler_decompose(const Mat& s);

/// Sign counts of the eigenvalues of a symmetric matrix.  When zero_tol is
/// negative the threshold defaults to 1e-8 * max|eigenvalue|.
Signature signature(const Mat& m, double zero_tol = -1.0);

}  // namespace phasecat
