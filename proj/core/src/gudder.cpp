#include "belllab/gudder.hpp"

#include <cmath>
#include <stdexcept>

#include "belllab/sampling.hpp"

namespace bell {

double measure(const ReferenceMeasure& m, const Direction& psi) {
    return m.form()(state_vector(psi));
}

OrthoAdditivityReport check_orthogonal_additivity(const std::function<double(const FourVector&)>& f,
                                                  int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SplitMix64 g(seed);
    OrthoAdditivityReport report;
    report.trials = trials;
    report.passed = true;
    for (int t = 0; t < trials; ++t) {
        const FourVector v = uniform_unit4(g);
        FourVector w = uniform_unit4(g);
        w = w - v * inner4(v, w);
        const double wn2 = inner4(w, w);
        if (wn2 < 1e-12) continue;  // degenerate draw, w parallel to v
        const double violation = std::abs(f(v + w) - f(v) - f(w));
        const double tol = 1e-10 * (1.0 + std::abs(f(v)) + std::abs(f(w)));
        if (violation > report.max_violation) {
            report.max_violation = violation;
            report.worst_a = v;
            report.worst_b = w;
        }
        if (violation >= tol) report.passed = false;
    }
    return report;
}

double gudder_correlation(BellStateKind state, const Direction& a, const Direction& b) {
    const BipartiteVector ab =
        tensor(observable_vector(Party::Alice, a), observable_vector(Party::Bob, b));
    return 2.0 * inner16(ab, bell_vector(state));
}

double gudder_joint_probability(BellStateKind state, const Direction& a, const Direction& b,
                                int alpha, int beta) {
    if ((alpha != 1 && alpha != -1) || (beta != 1 && beta != -1))
        throw std::invalid_argument("outcomes must be +1 or -1");
    const FourVector va{1.0, a.unit() * static_cast<double>(alpha)};
    const FourVector vb{1.0, b.unit() * static_cast<double>(beta)};
    return 0.5 * inner16(tensor(va, vb), bell_vector(state));
}

}  // namespace bell
