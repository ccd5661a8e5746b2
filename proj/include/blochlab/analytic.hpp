#pragma once

#include <memory>
#include <vector>

#include "blochlab/disk.hpp"

namespace blochlab {

// Analytic function on the unit disk with exact first and second derivatives.
// Derivatives come from coefficients or the chain rule, never from finite
// differences; the tests use finite differences as the independent check.
class AnalyticFunction {
public:
    virtual ~AnalyticFunction() = default;
    virtual Complex eval(Complex z) const = 0;
    virtual Complex deriv(Complex z) const = 0;
    virtual Complex deriv2(Complex z) const = 0;
};

using AnalyticPtr = std::shared_ptr<const AnalyticFunction>;

// a_0 + a_1 z + ... + a_n z^n, evaluated by Horner's scheme. The derivative
// coefficient arrays are materialized once at construction; evaluation inside
// the supremum grids is the hot path.
class Polynomial final : public AnalyticFunction {
public:
    Polynomial() : Polynomial(std::vector<Complex>{Complex(0.0, 0.0)}) {}
    explicit Polynomial(std::vector<Complex> coeffs);

    Complex eval(Complex z) const override { return horner(coeffs_, z); }
    Complex deriv(Complex z) const override { return horner(d1_, z); }
    Complex deriv2(Complex z) const override { return horner(d2_, z); }

    const std::vector<Complex>& coefficients() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }

    Polynomial derivative() const;
    Polynomial antiderivative() const;  // constant of integration = 0

private:
    static Complex horner(const std::vector<Complex>& c, Complex z);

    std::vector<Complex> coeffs_, d1_, d2_;
};

Polynomial poly_multiply(const Polynomial& p, const Polynomial& q);

// h(z) = log(1 - z^2), principal branch. 1 - z^2 has positive real part on
// the disk, so the branch cut is never touched. h'(z) = -2z / (1 - z^2).
class LogFixture final : public AnalyticFunction {
public:
    Complex eval(Complex z) const override;
    Complex deriv(Complex z) const override;
    Complex deriv2(Complex z) const override;
};

// outer(phi_w(z)) with chain-rule derivatives.
class MobiusComposed final : public AnalyticFunction {
public:
    MobiusComposed(AnalyticPtr outer, DiskPoint w)
        : outer_(std::move(outer)), inner_(w) {}

    Complex eval(Complex z) const override;
    Complex deriv(Complex z) const override;
    Complex deriv2(Complex z) const override;

    const AnalyticPtr& outer() const { return outer_; }
    const MobiusTransform& inner() const { return inner_; }

private:
    AnalyticPtr outer_;
    MobiusTransform inner_;
};

AnalyticPtr make_polynomial(std::vector<Complex> coeffs);
AnalyticPtr make_log_fixture();
AnalyticPtr compose_with_mobius(AnalyticPtr outer, DiskPoint w);

}  // namespace blochlab
