#include "belllab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "belllab/gudder.hpp"
#include "belllab/lhv.hpp"
#include "belllab/models.hpp"
#include "belllab/quantum.hpp"
#include "belllab/sampling.hpp"

namespace bell {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

std::string format_sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

SuiteResult finish(std::string name, double violation, double threshold, std::string detail = {}) {
    SuiteResult r;
    r.name = std::move(name);
    r.max_violation = violation;
    r.threshold = threshold;
    r.passed = violation < threshold;
    r.detail = std::move(detail);
    return r;
}

SuiteResult bell_orthonormality(const VerifyOptions& options) {
    std::array<BipartiteVector, 4> vectors;
    for (std::size_t i = 0; i < 4; ++i) vectors[i] = bell_vector(kAllBellStates[i]);
    if (options.inject_bell_sign_flip) vectors[0](2, 2) = -vectors[0](2, 2);

    double violation = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            violation = std::max(violation, std::abs(inner16(vectors[i], vectors[j]) - expected));
        }
    return finish("bell-orthonormality", violation, 1e-14);
}

SuiteResult measure_born_equivalence(const VerifyOptions& options) {
    SplitMix64 g(options.seed);
    double violation = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Direction phi = uniform_direction(g);
        const Direction psi = uniform_direction(g);
        violation = std::max(
            violation, std::abs(measure(ReferenceMeasure(phi), psi) - born_probability(phi, psi)));
    }
    return finish("measure-born-equivalence", violation, 1e-12, "10000 random direction pairs");
}

SuiteResult orthogonal_additivity(const VerifyOptions& options) {
    SplitMix64 g(options.seed ^ 0xadd1ULL);
    const ReferenceMeasure m(uniform_direction(g));
    const auto report = check_orthogonal_additivity(m.form(), 100000, g.next());
    SuiteResult r = finish("orthogonal-additivity", report.max_violation, 1e-10,
                           "100000 random orthogonal pairs");
    r.passed = report.passed;
    return r;
}

SuiteResult probability_range_sweep(const VerifyOptions& options) {
    SplitMix64 g(options.seed ^ 0x5feeULL);
    double violation = 0.0;
    for (int k = 0; k < 100; ++k) {
        const ReferenceMeasure m(uniform_direction(g));
        for (int t = 0; t <= 180; ++t)
            for (int p = 0; p < 360; ++p) {
                const double f = measure(m, Direction(t * kPi / 180.0, p * kPi / 180.0));
                violation = std::max({violation, -f, f - 1.0});
                if (t == 0 || t == 180) break;
            }
    }
    return finish("probability-range-sweep", violation, 1e-12,
                  "100 reference directions x 1-degree grid");
}

SuiteResult no_signaling(const VerifyOptions& options) {
    std::vector<std::unique_ptr<CorrelationModel>> models;
    for (BellStateKind k : kAllBellStates) {
        models.push_back(std::make_unique<QuantumModel>(k));
        models.push_back(std::make_unique<GudderModel>(k));
    }
    models.push_back(std::make_unique<WernerModel>(BellStateKind::PhiPlus, 0.5));
    models.push_back(std::make_unique<SignLocalModel>());
    models.push_back(std::make_unique<PeakedSourceModel>(
        BellStateKind::PhiPlus, PeakedDensity(0.0, 0.05), PeakedDensity(0.0, 0.05),
        RegularizedDelta(0.0005)));
    models.push_back(std::make_unique<IndependentSourceModel>(
        BellStateKind::PsiMinus, PeakedDensity(0.0, 0.05), PeakedDensity(0.0, 0.05)));

    double violation = 0.0;
    std::string worst = "-";
    for (const auto& model : models) {
        const auto report = no_signaling_audit(*model, 200, options.seed ^ 0x0b5eULL);
        if (report.max_deviation > violation) {
            violation = report.max_deviation;
            worst = model->name();
        }
    }
    return finish("no-signaling", violation, 1e-9, "largest deviation from " + worst);
}

SuiteResult lhv_bound(const VerifyOptions& options) {
    SplitMix64 g(options.seed ^ 0xb0edULL);
    double max_abs_s = 0.0;
    for (int i = 0; i < 100000; ++i)
        max_abs_s = std::max(max_abs_s, std::abs(exact_chsh_finite(random_deterministic_strategy(g.next()))));
    return finish("lhv-chsh-bound", std::max(0.0, max_abs_s - 2.0), 1e-12,
                  "100000 random finite strategies, max |S| = " + format_sci(max_abs_s));
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    std::vector<SuiteResult> results;
    results.push_back(bell_orthonormality(options));
    results.push_back(measure_born_equivalence(options));
    results.push_back(orthogonal_additivity(options));
    results.push_back(probability_range_sweep(options));
    results.push_back(no_signaling(options));
    results.push_back(lhv_bound(options));
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed; });
}

}  // namespace bell
