#pragma once

// The variational quantity M_k = sup (sum_m J_k^(m)(F)) / I_k(F) over F
// supported on the simplex, restricted to the span of a finite basis. Both
// quadratic forms are assembled exactly over Q; the generalized eigenproblem
// is solved in floating point and the result is certified by recomputing the
// Rayleigh quotient of the returned coefficients in exact arithmetic.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "artinlab/polynomial.hpp"

namespace artinlab {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// int over {t >= 0, sum t <= 1} of prod t_i^{a_i} = prod a_i! / (k + sum a_i)!
mpq_class simplex_monomial_integral(std::span<const unsigned> exponents);

/// int over the simplex of prod t_i^{a_i} (1 - sum t_i)^e = prod a_i! e! / (k + sum a_i + e)!
mpq_class dirichlet_integral(std::span<const unsigned> exponents, unsigned e);

/// I_k bilinear form: int F G over the simplex.
mpq_class i_form(const PolynomialF& f, const PolynomialF& g);

/// J_k^(m) bilinear form (m is 0-based): integral over the remaining variables of
/// (int_0^{1 - sum_{i != m} t_i} F dt_m)(int_0^{...} G dt_m).
mpq_class j_form(const PolynomialF& f, const PolynomialF& g, unsigned m);

struct RatioProblem {
    unsigned k = 0;
    std::vector<PolynomialF> basis;
    RationalMatrix A;  // sum_m J^(m)
    RationalMatrix B;  // I
    bool symmetric = false;
};

/// Assembles both forms; J^(m) is computed once and multiplied by k when every
/// basis element is symmetric. Throws RankDeficiency for a dependent basis.
RatioProblem assemble_forms(unsigned k, std::vector<PolynomialF> basis);

/// {(1 - P1)^a P2^b : a + 2b <= degree}, listed by increasing a + 2b so that
/// the basis of degree d is a prefix of the basis of degree d + 1. For k = 1
/// only powers of (1 - P1) are used, since P2 = P1^2 there.
std::vector<PolynomialF> symmetric_basis(unsigned k, unsigned degree);

struct RatioResult {
    /// Double not exceeding the certified quotient.
    double lower_bound = 0.0;
    mpq_class certified;
    std::vector<mpq_class> coefficients;
    double residual = 0.0;   // ||A x - lambda B x|| / ||B x||
    double tolerance = 0.0;
    unsigned iterations = 0;
};

/// Largest generalized eigenvalue of A x = lambda B x. Throws InvalidProblem
/// when B is not positive definite and InvariantViolation when the residual
/// exceeds the tolerance.
RatioResult maximize_ratio(const RatioProblem& problem, double tolerance = 1e-10);

/// Exact (x^T A x) / (x^T B x).
mpq_class rayleigh_quotient(const RatioProblem& problem, std::span<const mpq_class> x);

/// Exact LDL^T pivots of B; all positive iff B is positive definite.
std::vector<mpq_class> ldl_pivots(const RationalMatrix& B);

struct MkBoundReport {
    unsigned k = 0;
    double computed = 0.0;
    double bound = 0.0;  // log k - 2 log log k - 2
    bool applicable = false;
    bool exceeds = false;
};

MkBoundReport mk_lower_bound_check(unsigned k, double computed);

/// Smallest k in the table with ceil(theta * M_k) > m - 1.
std::optional<unsigned> required_k_for_m(unsigned m, double theta, const std::map<unsigned, double>& mk_table);

}  // namespace artinlab
