#include "greenbound/dichotomy.hpp"

#include <algorithm>
#include <sstream>

#include "greenbound/error.hpp"

namespace greenbound {

DichotomyData split_eigenvalues(const Spectrum& clustered, double axis_tol) {
    if (!(axis_tol > 0.0)) {
        throw InvalidInput("axis_tol must be positive");
    }
    DichotomyData d;
    for (const auto& lambda : clustered.eigenvalues) {
        if (std::abs(lambda.real()) <= axis_tol) {
            std::ostringstream msg;
            msg << "spectrum intersects imaginary axis: eigenvalue " << lambda.real() << (lambda.imag() < 0 ? "" : "+")
                << lambda.imag() << "i";
            throw DichotomyViolation(msg.str());
        }
        (lambda.real() > 0.0 ? d.mu : d.nu).push_back(lambda);
    }
    auto by_re_im = [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    };
    std::sort(d.mu.begin(), d.mu.end(), by_re_im);
    std::sort(d.nu.begin(), d.nu.end(), by_re_im);
    if (!d.mu.empty()) {
        d.gamma_plus = d.mu.front().real();
    }
    if (!d.nu.empty()) {
        d.gamma_minus = -d.nu.back().real();
    }
    return d;
}

DichotomyData split_spectrum(const ComplexMatrix& a, std::optional<double> axis_tol) {
    const double norm = op_norm(a);
    const double scale = std::max(1.0, norm);
    const Spectrum raw = eigenvalues(a);
    return split_eigenvalues(cluster_eigenvalues(raw, 1e-8 * scale), axis_tol.value_or(1e-8 * scale));
}

NodeList ordered_nodes(const DichotomyData& d, TimeSign sign) {
    const NodeList& first = sign == TimeSign::positive ? d.mu : d.nu;
    const NodeList& second = sign == TimeSign::positive ? d.nu : d.mu;
    NodeList out = first;
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

}  // namespace greenbound
