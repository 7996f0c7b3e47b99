#include "artinlab/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace artinlab {

PolynomialF::PolynomialF(unsigned k) : k_(k) {
    if (k == 0) throw std::invalid_argument("PolynomialF: k must be at least 1");
}

PolynomialF PolynomialF::constant(unsigned k, const mpq_class& c) {
    PolynomialF f(k);
    f.add_term(Exponent(k, 0), c);
    return f;
}

PolynomialF PolynomialF::power_sum(unsigned k, unsigned j) {
    PolynomialF f(k);
    for (unsigned i = 0; i < k; ++i) {
        Exponent a(k, 0);
        a[i] = j;
        f.add_term(a, 1);
    }
    f.symmetric_basis_tag = "P" + std::to_string(j);
    return f;
}

PolynomialF PolynomialF::one_minus_P1(unsigned k) {
    PolynomialF f = constant(k, 1) - power_sum(k, 1);
    f.symmetric_basis_tag = "(1-P1)";
    return f;
}

unsigned PolynomialF::total_degree() const {
    unsigned d = 0;
    for (const auto& [a, c] : terms_) {
        unsigned s = 0;
        for (unsigned e : a) s += e;
        d = std::max(d, s);
    }
    return d;
}

void PolynomialF::add_term(const Exponent& a, const mpq_class& c) {
    if (a.size() != k_) throw std::invalid_argument("PolynomialF: exponent vector has the wrong length");
    if (c == 0) return;
    cache_valid_ = false;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolynomialF PolynomialF::operator+(const PolynomialF& o) const {
    if (o.k_ != k_) throw std::invalid_argument("PolynomialF: mismatched k");
    PolynomialF r = *this;
    r.symmetric_basis_tag.reset();
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

PolynomialF PolynomialF::operator-(const PolynomialF& o) const { return *this + o.scaled(-1); }

PolynomialF PolynomialF::scaled(const mpq_class& s) const {
    PolynomialF r(k_);
    for (const auto& [a, c] : terms_) r.add_term(a, c * s);
    return r;
}

PolynomialF PolynomialF::operator*(const PolynomialF& o) const {
    if (o.k_ != k_) throw std::invalid_argument("PolynomialF: mismatched k");
    PolynomialF r(k_);
    Exponent e(k_);
    for (const auto& [a, c] : terms_)
        for (const auto& [b, d] : o.terms_) {
            for (unsigned i = 0; i < k_; ++i) e[i] = a[i] + b[i];
            r.add_term(e, c * d);
        }
    return r;
}

PolynomialF PolynomialF::pow(unsigned e) const {
    PolynomialF r = constant(k_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

void PolynomialF::compile() const {
    cache_.clear();
    for (const auto& [a, c] : terms_) cache_.emplace_back(a, c.get_d());
    cache_valid_ = true;
}

double PolynomialF::operator()(std::span<const double> t) const {
    if (t.size() != k_) throw std::invalid_argument("PolynomialF: point has the wrong dimension");
    double s = 0.0;
    for (double v : t) {
        if (v < 0.0) return 0.0;
        s += v;
    }
    if (s > 1.0) return 0.0;
    if (!cache_valid_) {
        double value = 0.0;
        for (const auto& [a, c] : terms_) {
            double term = c.get_d();
            for (unsigned i = 0; i < k_; ++i)
                for (unsigned j = 0; j < a[i]; ++j) term *= t[i];
            value += term;
        }
        return value;
    }
    double value = 0.0;
    for (const auto& [a, c] : cache_) {
        double term = c;
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < a[i]; ++j) term *= t[i];
        value += term;
    }
    return value;
}

mpq_class PolynomialF::evaluate_exact(std::span<const mpq_class> t) const {
    if (t.size() != k_) throw std::invalid_argument("PolynomialF: point has the wrong dimension");
    mpq_class value = 0;
    for (const auto& [a, c] : terms_) {
        mpq_class term = c;
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; j < a[i]; ++j) term *= t[i];
        value += term;
    }
    return value;
}

std::string PolynomialF::to_string() const {
    if (symmetric_basis_tag) return *symmetric_basis_tag;
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (unsigned i = 0; i < k_; ++i)
            if (a[i] > 0) {
                os << "*t" << (i + 1);
                if (a[i] > 1) os << '^' << a[i];
            }
    }
    return os.str();
}

}  // namespace artinlab
