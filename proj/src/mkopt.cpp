#include "artinlab/mkopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using RealMatrix = std::vector<std::vector<Real>>;

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Real to_real(const mpq_class& q) {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

// Exact conversion of a binary float to a rational through two doubles.
mpq_class to_rational(const Real& v) {
    const double hi = static_cast<double>(v);
    const double lo = static_cast<double>(v - Real(hi));
    return mpq_class(hi) + mpq_class(lo);
}

bool is_symmetric(const PolynomialF& f) {
    const unsigned k = f.k();
    if (k == 1) return true;
    auto lookup = [&](const Exponent& a) {
        auto it = f.terms().find(a);
        return it == f.terms().end() ? mpq_class(0) : it->second;
    };
    for (const auto& [a, c] : f.terms()) {
        Exponent swapped = a;
        std::swap(swapped[0], swapped[1]);
        Exponent rotated(a.begin() + 1, a.end());
        rotated.push_back(a.front());
        if (lookup(swapped) != c || lookup(rotated) != c) return false;
    }
    return true;
}

// Cyclic Jacobi for a symmetric matrix; returns eigenvalues, columns of V are eigenvectors.
std::vector<Real> jacobi_eigen(RealMatrix a, RealMatrix& v, unsigned& sweeps) {
    const std::size_t n = a.size();
    v.assign(n, std::vector<Real>(n, Real(0)));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
    Real scale = 0;
    for (const auto& row : a)
        for (const auto& e : row) scale += e * e;
    const Real eps = boost::multiprecision::sqrt(scale) * Real("1e-45");
    for (sweeps = 0; sweeps < 100; ++sweeps) {
        Real off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (boost::multiprecision::sqrt(off) <= eps) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) continue;
                const Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const Real sgn = theta >= 0 ? Real(1) : Real(-1);
                const Real t = sgn / (boost::multiprecision::abs(theta) + boost::multiprecision::sqrt(theta * theta + 1));
                const Real c = 1 / boost::multiprecision::sqrt(t * t + 1);
                const Real s = t * c;
                for (std::size_t r = 0; r < n; ++r) {
                    const Real arp = a[r][p], arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const Real apr = a[p][r], aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const Real vrp = v[r][p], vrq = v[r][q];
                    v[r][p] = c * vrp - s * vrq;
                    v[r][q] = s * vrp + c * vrq;
                }
            }
    }
    std::vector<Real> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

// Gaussian elimination with partial pivoting.
std::vector<Real> solve(RealMatrix m, std::vector<Real> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (boost::multiprecision::abs(m[r][col]) > boost::multiprecision::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(b[col], b[piv]);
        if (m[col][col] == 0) m[col][col] = Real("1e-80");
        for (std::size_t r = col + 1; r < n; ++r) {
            const Real f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Real> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Real s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= m[i][c] * x[c];
        x[i] = s / m[i][i];
    }
    return x;
}

}  // namespace

mpq_class dirichlet_integral(std::span<const unsigned> exponents, unsigned e) {
    mpz_class num = factorial(e);
    unsigned long total = exponents.size() + e;
    for (unsigned a : exponents) {
        num *= factorial(a);
        total += a;
    }
    mpq_class r(num, factorial(total));
    r.canonicalize();
    return r;
}

mpq_class simplex_monomial_integral(std::span<const unsigned> exponents) { return dirichlet_integral(exponents, 0); }

mpq_class i_form(const PolynomialF& f, const PolynomialF& g) {
    if (f.k() != g.k()) throw std::invalid_argument("i_form: mismatched k");
    mpq_class total = 0;
    Exponent e(f.k());
    for (const auto& [a, c] : f.terms())
        for (const auto& [b, d] : g.terms()) {
            for (unsigned i = 0; i < f.k(); ++i) e[i] = a[i] + b[i];
            total += c * d * simplex_monomial_integral(e);
        }
    return total;
}

mpq_class j_form(const PolynomialF& f, const PolynomialF& g, unsigned m) {
    const unsigned k = f.k();
    if (g.k() != k) throw std::invalid_argument("j_form: mismatched k");
    if (m >= k) throw std::invalid_argument("j_form: m out of range");
    // The t_m integral of c t^a over [0, 1 - S] is c t'^{a'} (1 - S)^{a_m + 1} / (a_m + 1),
    // so the product of two such integrals is a Dirichlet integral in k - 1 variables.
    mpq_class total = 0;
    Exponent rest(k - 1);
    for (const auto& [a, c] : f.terms())
        for (const auto& [b, d] : g.terms()) {
            for (unsigned i = 0, j = 0; i < k; ++i)
                if (i != m) rest[j++] = a[i] + b[i];
            mpq_class w = c * d;
            w /= (a[m] + 1) * (b[m] + 1);
            total += w * dirichlet_integral(rest, a[m] + b[m] + 2);
        }
    return total;
}

std::vector<mpq_class> ldl_pivots(const RationalMatrix& B) {
    const std::size_t n = B.size();
    std::vector<mpq_class> d(n);
    RationalMatrix L(n, std::vector<mpq_class>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        mpq_class dj = B[j][j];
        for (std::size_t t = 0; t < j; ++t) dj -= L[j][t] * L[j][t] * d[t];
        d[j] = dj;
        if (dj == 0) {
            for (std::size_t r = j; r < n; ++r) d[r] = 0;
            return d;
        }
        L[j][j] = 1;
        for (std::size_t i = j + 1; i < n; ++i) {
            mpq_class s = B[i][j];
            for (std::size_t t = 0; t < j; ++t) s -= L[i][t] * L[j][t] * d[t];
            L[i][j] = s / dj;
        }
    }
    return d;
}

RatioProblem assemble_forms(unsigned k, std::vector<PolynomialF> basis) {
    if (k == 0) throw std::invalid_argument("assemble_forms: k must be at least 1");
    if (basis.empty()) throw std::invalid_argument("assemble_forms: empty basis");
    for (const auto& b : basis)
        if (b.k() != k) throw std::invalid_argument("assemble_forms: basis element has the wrong k");

    RatioProblem pr;
    pr.k = k;
    pr.basis = std::move(basis);
    pr.symmetric = std::all_of(pr.basis.begin(), pr.basis.end(), is_symmetric);
    const std::size_t n = pr.basis.size();
    pr.A.assign(n, std::vector<mpq_class>(n, 0));
    pr.B.assign(n, std::vector<mpq_class>(n, 0));

    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(n * (n + 1) / 2);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t idx = 0; idx < pairs; ++idx) {
        std::size_t i = 0, rem = static_cast<std::size_t>(idx);
        while (rem >= n - i) {
            rem -= n - i;
            ++i;
        }
        const std::size_t j = i + rem;
        const auto& f = pr.basis[i];
        const auto& g = pr.basis[j];
        mpq_class a = 0;
        if (pr.symmetric) {
            a = j_form(f, g, 0) * k;
        } else {
            for (unsigned m = 0; m < k; ++m) a += j_form(f, g, m);
        }
        const mpq_class b = i_form(f, g);
        pr.A[i][j] = a;
        pr.A[j][i] = a;
        pr.B[i][j] = b;
        pr.B[j][i] = b;
    }

    const auto d = ldl_pivots(pr.B);
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 0) throw RankDeficiency("assemble_forms: basis is linearly dependent (element " + std::to_string(i) + ")");
        if (d[i] < 0) throw InvariantViolation("assemble_forms: I-form is not positive definite");
    }
    return pr;
}

std::vector<PolynomialF> symmetric_basis(unsigned k, unsigned degree) {
    if (k == 0) throw std::invalid_argument("symmetric_basis: k must be at least 1");
    const PolynomialF u = PolynomialF::one_minus_P1(k);
    const PolynomialF p2 = PolynomialF::power_sum(k, 2);
    std::vector<PolynomialF> out;
    for (unsigned d = 0; d <= degree; ++d)
        for (unsigned b = 0; 2 * b <= d; ++b) {
            if (k == 1 && b > 0) continue;
            const unsigned a = d - 2 * b;
            PolynomialF f = u.pow(a) * p2.pow(b);
            std::string tag;
            if (a > 0) tag = a == 1 ? "(1-P1)" : "(1-P1)^" + std::to_string(a);
            if (b > 0) {
                if (!tag.empty()) tag += "*";
                tag += b == 1 ? "P2" : "P2^" + std::to_string(b);
            }
            f.symmetric_basis_tag = tag.empty() ? "1" : tag;
            out.push_back(std::move(f));
        }
    return out;
}

mpq_class rayleigh_quotient(const RatioProblem& problem, std::span<const mpq_class> x) {
    const std::size_t n = problem.A.size();
    if (x.size() != n) throw std::invalid_argument("rayleigh_quotient: vector has the wrong length");
    mpq_class num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            num += x[i] * problem.A[i][j] * x[j];
            den += x[i] * problem.B[i][j] * x[j];
        }
    if (den <= 0) throw InvalidProblem("rayleigh_quotient: x^T B x is not positive");
    return num / den;
}

RatioResult maximize_ratio(const RatioProblem& problem, double tolerance) {
    const std::size_t n = problem.B.size();
    if (n == 0 || problem.A.size() != n) throw InvalidProblem("maximize_ratio: empty or mismatched forms");
    if (!(tolerance > 0)) throw std::invalid_argument("maximize_ratio: tolerance must be positive");
    for (const auto& d : ldl_pivots(problem.B))
        if (d <= 0) throw InvalidProblem("maximize_ratio: B is not positive definite");

    RealMatrix A(n, std::vector<Real>(n)), B(n, std::vector<Real>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            A[i][j] = to_real(problem.A[i][j]);
            B[i][j] = to_real(problem.B[i][j]);
        }

    // B = L L^T
    RealMatrix L(n, std::vector<Real>(n, Real(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Real s = B[j][j];
        for (std::size_t t = 0; t < j; ++t) s -= L[j][t] * L[j][t];
        if (s <= 0) throw InvalidProblem("maximize_ratio: B is numerically singular");
        L[j][j] = boost::multiprecision::sqrt(s);
        for (std::size_t i = j + 1; i < n; ++i) {
            Real v = B[i][j];
            for (std::size_t t = 0; t < j; ++t) v -= L[i][t] * L[j][t];
            L[i][j] = v / L[j][j];
        }
    }
    // C = L^{-1} A L^{-T}
    auto forward = [&](std::vector<Real> b) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 0; t < i; ++t) b[i] -= L[i][t] * b[t];
            b[i] /= L[i][i];
        }
        return b;
    };
    RealMatrix M(n, std::vector<Real>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Real> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = A[r][c];
        col = forward(col);
        for (std::size_t r = 0; r < n; ++r) M[r][c] = col[r];
    }
    RealMatrix C(n, std::vector<Real>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = forward(M[r]);  // (L^{-1} M^T)^T, using the symmetry of A
        for (std::size_t c = 0; c < n; ++c) C[r][c] = row[c];
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) C[r][c] = C[c][r] = (C[r][c] + C[c][r]) / 2;

    RealMatrix V;
    RatioResult result;
    const auto eig = jacobi_eigen(C, V, result.iterations);
    const std::size_t top = static_cast<std::size_t>(std::max_element(eig.begin(), eig.end()) - eig.begin());
    const Real lambda = eig[top];

    // x = L^{-T} y
    std::vector<Real> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Real s = V[i][top];
        for (std::size_t t = i + 1; t < n; ++t) s -= L[t][i] * x[t];
        x[i] = s / L[i][i];
    }

    // Shifted inverse iteration on (A - sigma B) y = B x.
    const Real sigma = lambda + boost::multiprecision::abs(lambda) * Real("1e-30") + Real("1e-40");
    RealMatrix shifted(n, std::vector<Real>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) shifted[i][j] = A[i][j] - sigma * B[i][j];
    for (int it = 0; it < 3; ++it) {
        std::vector<Real> bx(n, Real(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) bx[i] += B[i][j] * x[j];
        auto y = solve(shifted, bx);
        Real big = 0;
        for (const auto& v : y) big = std::max(big, Real(boost::multiprecision::abs(v)));
        if (big == 0 || !boost::multiprecision::isfinite(big)) break;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / big;
    }
    std::size_t lead = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (boost::multiprecision::abs(x[i]) > boost::multiprecision::abs(x[lead])) lead = i;
    const Real norm = x[lead];
    for (auto& v : x) v /= norm;

    result.coefficients.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.coefficients[i] = to_rational(x[i]);
    result.certified = rayleigh_quotient(problem, result.coefficients);
    result.lower_bound = result.certified.get_d();  // get_d truncates toward zero
    if (result.certified < 0) result.lower_bound = std::nextafter(result.lower_bound, -std::numeric_limits<double>::infinity());

    // Residual A x - q B x, evaluated exactly.
    double rnorm = 0.0, bnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class ax = 0, bx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            ax += problem.A[i][j] * result.coefficients[j];
            bx += problem.B[i][j] * result.coefficients[j];
        }
        const double r = mpq_class(ax - result.certified * bx).get_d();
        const double b = bx.get_d();
        rnorm += r * r;
        bnorm += b * b;
    }
    result.residual = std::sqrt(rnorm) / std::sqrt(bnorm);
    result.tolerance = tolerance;
    if (!(result.residual <= tolerance))
        throw InvariantViolation("maximize_ratio: residual " + std::to_string(result.residual) + " exceeds tolerance");
    return result;
}

MkBoundReport mk_lower_bound_check(unsigned k, double computed) {
    MkBoundReport r;
    r.k = k;
    r.computed = computed;
    r.applicable = k >= 3;
    if (r.applicable) {
        const double lk = std::log(static_cast<double>(k));
        r.bound = lk - 2.0 * std::log(lk) - 2.0;
        r.exceeds = computed > r.bound;
    }
    return r;
}

std::optional<unsigned> required_k_for_m(unsigned m, double theta, const std::map<unsigned, double>& mk_table) {
    if (m == 0) throw std::invalid_argument("required_k_for_m: m must be at least 1");
    if (!(theta > 0.0 && theta < 0.25)) throw std::invalid_argument("required_k_for_m: theta must lie in (0, 1/4)");
    for (const auto& [k, mk] : mk_table)
        if (std::ceil(theta * mk) > static_cast<double>(m) - 1.0) return k;
    return std::nullopt;
}

}  // namespace artinlab
