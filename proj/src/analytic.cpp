#include "blochlab/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace blochlab {

namespace {

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& c) {
    if (c.size() <= 1) return {Complex(0.0, 0.0)};
    std::vector<Complex> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        d[k - 1] = double(k) * c[k];
    return d;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("Polynomial: coefficient list must be nonempty");
    d1_ = derivative_coeffs(coeffs_);
    d2_ = derivative_coeffs(d1_);
}

Complex Polynomial::horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;)
        acc = acc * z + c[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    return Polynomial(d1_);
}

Polynomial Polynomial::antiderivative() const {
    std::vector<Complex> a(coeffs_.size() + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        a[k + 1] = coeffs_[k] / double(k + 1);
    return Polynomial(std::move(a));
}

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q) {
    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<Complex> c(a.size() + b.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return Polynomial(std::move(c));
}

Complex LogFixture::eval(Complex z) const {
    return std::log(1.0 - z * z);
}

Complex LogFixture::deriv(Complex z) const {
    return -2.0 * z / (1.0 - z * z);
}

Complex LogFixture::deriv2(Complex z) const {
    const Complex d = 1.0 - z * z;
    return -2.0 * (1.0 + z * z) / (d * d);
}

Complex MobiusComposed::eval(Complex z) const {
    return outer_->eval(inner_.apply(z));
}

Complex MobiusComposed::deriv(Complex z) const {
    return outer_->deriv(inner_.apply(z)) * inner_.derivative(z);
}

// (f ∘ phi)'' = f''(phi) phi'^2 + f'(phi) phi''
Complex MobiusComposed::deriv2(Complex z) const {
    const Complex p = inner_.apply(z);
    const Complex d1 = inner_.derivative(z);
    return outer_->deriv2(p) * d1 * d1 + outer_->deriv(p) * inner_.second_derivative(z);
}

AnalyticPtr make_polynomial(std::vector<Complex> coeffs) {
    return std::make_shared<Polynomial>(std::move(coeffs));
}

AnalyticPtr make_log_fixture() {
    return std::make_shared<LogFixture>();
}

AnalyticPtr compose_with_mobius(AnalyticPtr outer, DiskPoint w) {
    return std::make_shared<MobiusComposed>(std::move(outer), w);
}

}  // namespace blochlab
