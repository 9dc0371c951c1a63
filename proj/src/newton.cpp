#include "greenbound/newton.hpp"

#include "greenbound/error.hpp"

namespace greenbound {

NewtonPolynomial::NewtonPolynomial(NodeList nodes, std::vector<Complex> coeffs)
    : nodes_(std::move(nodes)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || nodes_.size() != coeffs_.size()) {
        throw InvalidInput("Newton polynomial needs matching, non-empty nodes and coefficients");
    }
}

Complex NewtonPolynomial::operator()(Complex z) const {
    const std::size_t n = coeffs_.size();
    Complex acc = coeffs_[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) {
        acc = acc * (z - nodes_[j]) + coeffs_[j];
    }
    return acc;
}

Jet NewtonPolynomial::operator()(const Jet& z) const {
    const std::size_t n = coeffs_.size();
    Jet acc = Jet::constant(z.center(), z.order(), coeffs_[n - 1]);
    for (std::size_t j = n - 1; j-- > 0;) {
        acc = acc * (z - nodes_[j]) + coeffs_[j];
    }
    return acc;
}

ComplexMatrix NewtonPolynomial::operator()(const ComplexMatrix& a) const {
    require_valid(a);
    const std::size_t n = coeffs_.size();
    const Eigen::Index dim = a.rows();
    ComplexMatrix acc = coeffs_[n - 1] * identity(dim);
    for (std::size_t j = n - 1; j-- > 0;) {
        ComplexMatrix shifted = a;
        shifted.diagonal().array() -= nodes_[j];
        acc = acc * shifted;
        acc.diagonal().array() += coeffs_[j];
    }
    return acc;
}

NewtonPolynomial build_newton(const AnalyticFn& f, const NodeList& nodes) {
    return NewtonPolynomial(nodes, divided_difference_table(f, nodes));
}

ComplexMatrix eval_matrix(const NewtonPolynomial& p, const ComplexMatrix& a) { return p(a); }

ComplexMatrix matrix_function(const AnalyticFn& f, const ComplexMatrix& a, const NodeList& nodes) {
    require_valid(a);
    if (static_cast<Eigen::Index>(nodes.size()) != a.rows()) {
        throw InvalidInput("matrix_function: node count must equal the matrix dimension");
    }
    return eval_matrix(build_newton(f, nodes), a);
}

bool hermite_check(const NewtonPolynomial& p, const AnalyticFn& f, double tolerance) {
    require_valid_nodes(p.nodes());
    for (const auto& run : node_runs(p.nodes())) {
        const int order = run.multiplicity - 1;
        const Jet expected = f.jet(run.value, order);
        const Jet actual = p(Jet::variable(run.value, order));
        for (int r = 0; r <= order; ++r) {
            if (std::abs(actual.coeff(r) - expected.coeff(r)) > tolerance * (1.0 + std::abs(expected.coeff(r)))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace greenbound
