#pragma once

// Polynomials in t_1, ..., t_k with rational coefficients, used as the sieve
// function F. Evaluation treats F as supported on the simplex
// {t_i >= 0, sum t_i <= 1}: outside it the value is 0.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace artinlab {

using Exponent = std::vector<unsigned>;

class PolynomialF {
public:
    PolynomialF() = default;
    explicit PolynomialF(unsigned k);

    static PolynomialF constant(unsigned k, const mpq_class& c);
    /// P_1 = sum t_i
    static PolynomialF power_sum(unsigned k, unsigned j);
    static PolynomialF one_minus_P1(unsigned k);

    unsigned k() const { return k_; }
    const std::map<Exponent, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    void add_term(const Exponent& a, const mpq_class& c);

    PolynomialF operator+(const PolynomialF& o) const;
    PolynomialF operator-(const PolynomialF& o) const;
    PolynomialF operator*(const PolynomialF& o) const;
    PolynomialF scaled(const mpq_class& c) const;
    PolynomialF pow(unsigned e) const;

    /// Value at t, 0 outside the simplex.
    double operator()(std::span<const double> t) const;
    /// Exact value, ignoring the support restriction.
    mpq_class evaluate_exact(std::span<const mpq_class> t) const;

    /// e.g. "(1-P1)^2*P2" when built from power sums.
    std::optional<std::string> symmetric_basis_tag;

    std::string to_string() const;

    /// Caches double coefficients for fast evaluation. Not thread safe; call
    /// before sharing the polynomial between threads.
    void compile() const;

private:
    unsigned k_ = 0;
    std::map<Exponent, mpq_class> terms_;
    mutable std::vector<std::pair<Exponent, double>> cache_;
    mutable bool cache_valid_ = false;
};

}  // namespace artinlab
