#include "belllab/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "belllab/rng.hpp"
#include "belllab/sampling.hpp"

namespace bell {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kDeg = kPi / 180.0;

constexpr std::array<int, 4> kOutcomeAlpha = {+1, +1, -1, -1};
constexpr std::array<int, 4> kOutcomeBeta = {+1, -1, +1, -1};

using Angles = std::array<double, 8>;

double chsh_value(const CorrelationModel& model, const Angles& x, long& evaluations) {
    const SettingsQuad q = SettingsQuad::from_angles(x);
    ++evaluations;
    return model.correlation(q.a, q.b) + model.correlation(q.a, q.b_prime) +
           model.correlation(q.a_prime, q.b) - model.correlation(q.a_prime, q.b_prime);
}

// One pass of per-direction scans over the 15-degree grid; keeps a move only
// if |S| strictly improves, so ties resolve to the first (lexicographically
// smallest) grid angles.
bool sweep_once(const CorrelationModel& model, Angles& x, double& best, long& evaluations) {
    bool improved = false;
    for (int dir = 0; dir < 4; ++dir) {
        const std::size_t ti = static_cast<std::size_t>(2 * dir);
        Angles trial = x;
        for (int t = 0; t <= 180; t += 15) {
            for (int p = 0; p < 360; p += 15) {
                trial[ti] = t * kDeg;
                trial[ti + 1] = p * kDeg;
                const double s = std::abs(chsh_value(model, trial, evaluations));
                if (s > best + 1e-15) {
                    best = s;
                    x = trial;
                    improved = true;
                }
                if (t == 0 || t == 180) break;  // phi redundant at the poles
            }
        }
    }
    return improved;
}

struct SimplexPoint {
    Angles x;
    double f;  // minimized objective, -|S|
};

Angles nelder_mead(const CorrelationModel& model, const Angles& start, double tol,
                   long& evaluations, double& spread_out) {
    const auto objective = [&](const Angles& x) {
        return -std::abs(chsh_value(model, x, evaluations));
    };

    constexpr int kDim = 8;
    std::vector<SimplexPoint> simplex;
    simplex.reserve(kDim + 1);
    simplex.push_back({start, objective(start)});
    for (int i = 0; i < kDim; ++i) {
        Angles v = start;
        v[static_cast<std::size_t>(i)] += 0.2;
        simplex.push_back({v, objective(v)});
    }

    const auto by_f = [](const SimplexPoint& l, const SimplexPoint& r) { return l.f < r.f; };
    std::sort(simplex.begin(), simplex.end(), by_f);

    for (int iter = 0; iter < 5000; ++iter) {
        spread_out = simplex.back().f - simplex.front().f;
        if (spread_out < tol) break;

        Angles centroid{};
        for (int i = 0; i < kDim; ++i)
            for (int d = 0; d < kDim; ++d)
                centroid[static_cast<std::size_t>(d)] +=
                    simplex[static_cast<std::size_t>(i)].x[static_cast<std::size_t>(d)] / kDim;

        const auto blend = [&](double coef) {
            Angles v;
            for (int d = 0; d < kDim; ++d) {
                const std::size_t k = static_cast<std::size_t>(d);
                v[k] = centroid[k] + coef * (simplex.back().x[k] - centroid[k]);
            }
            return v;
        };

        const Angles reflected = blend(-1.0);
        const double fr = objective(reflected);
        if (fr < simplex.front().f) {
            const Angles expanded = blend(-2.0);
            const double fe = objective(expanded);
            simplex.back() = fe < fr ? SimplexPoint{expanded, fe} : SimplexPoint{reflected, fr};
        } else if (fr < simplex[kDim - 1].f) {
            simplex.back() = {reflected, fr};
        } else {
            const Angles contracted = blend(fr < simplex.back().f ? -0.5 : 0.5);
            const double fc = objective(contracted);
            if (fc < std::min(fr, simplex.back().f)) {
                simplex.back() = {contracted, fc};
            } else {
                for (int i = 1; i <= kDim; ++i) {
                    auto& pt = simplex[static_cast<std::size_t>(i)];
                    for (int d = 0; d < kDim; ++d) {
                        const std::size_t k = static_cast<std::size_t>(d);
                        pt.x[k] = 0.5 * (pt.x[k] + simplex.front().x[k]);
                    }
                    pt.f = objective(pt.x);
                }
            }
        }
        std::sort(simplex.begin(), simplex.end(), by_f);
    }
    return simplex.front().x;
}

// Planar quads that are exactly optimal for at least one Bell state each:
// theta quad (0, 90, 45, 315) degrees in the x-z, y-z and x-y planes.
std::vector<Angles> deterministic_starts() {
    const std::array<double, 4> t = {0.0, 90.0, 45.0, 315.0};
    std::vector<Angles> starts;
    starts.push_back({t[0] * kDeg, 0, t[1] * kDeg, 0, t[2] * kDeg, 0, t[3] * kDeg, 0});
    starts.push_back({t[0] * kDeg, 90 * kDeg, t[1] * kDeg, 90 * kDeg, t[2] * kDeg, 90 * kDeg,
                      t[3] * kDeg, 90 * kDeg});
    starts.push_back({90 * kDeg, t[0] * kDeg, 90 * kDeg, t[1] * kDeg, 90 * kDeg, t[2] * kDeg,
                      90 * kDeg, t[3] * kDeg});
    return starts;
}

}  // namespace

double CorrelationModel::joint_probability(const Direction& a, const Direction& b, int alpha,
                                           int beta) const {
    if ((alpha != 1 && alpha != -1) || (beta != 1 && beta != -1))
        throw std::invalid_argument("outcomes must be +1 or -1");
    return 0.25 * (1.0 + alpha * beta * correlation(a, b));
}

SettingsQuad SettingsQuad::from_angles(const std::array<double, 8>& rad) {
    return {Direction(rad[0], rad[1]), Direction(rad[2], rad[3]), Direction(rad[4], rad[5]),
            Direction(rad[6], rad[7])};
}

std::array<double, 8> SettingsQuad::angles() const {
    return {a.theta(),       a.phi(),       a_prime.theta(), a_prime.phi(),
            b.theta(),       b.phi(),       b_prime.theta(), b_prime.phi()};
}

ChshResult chsh_exact(const CorrelationModel& model, const SettingsQuad& q) {
    ChshResult r;
    r.terms = {model.correlation(q.a, q.b), model.correlation(q.a, q.b_prime),
               model.correlation(q.a_prime, q.b), model.correlation(q.a_prime, q.b_prime)};
    r.s = r.terms[0] + r.terms[1] + r.terms[2] - r.terms[3];
    r.std_error = 0.0;
    return r;
}

MaximizeResult maximize_chsh(const CorrelationModel& model, int restarts, double tol,
                             std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");

    long evaluations = 0;
    std::vector<Angles> starts = deterministic_starts();
    SplitMix64 g(mix64(seed + 0xc45eULL));
    for (int r = 0; r < restarts; ++r) {
        Angles x;
        for (auto& v : x) v = 2.0 * kPi * g.uniform();
        starts.push_back(x);
    }

    Angles best_x = starts.front();
    double best = -1.0;
    double best_spread = 0.0;
    for (const Angles& start : starts) {
        Angles x = start;
        double s = std::abs(chsh_value(model, x, evaluations));
        for (int pass = 0; pass < 25 && sweep_once(model, x, s, evaluations); ++pass) {
        }
        double spread = 0.0;
        const Angles refined = nelder_mead(model, x, tol, evaluations, spread);
        const double s_ref = std::abs(chsh_value(model, refined, evaluations));
        const Angles& cand = s_ref >= s ? refined : x;
        const double s_cand = std::max(s_ref, s);
        if (s_cand > best + 1e-15 ||
            (std::abs(s_cand - best) <= 1e-15 && cand < best_x)) {
            best = s_cand;
            best_x = cand;
            best_spread = spread;
        }
    }

    MaximizeResult out{SettingsQuad::from_angles(best_x), best,
                       chsh_exact(model, SettingsQuad::from_angles(best_x)), evaluations,
                       best_spread};
    if (out.chsh.s < 0.0) {
        // Negating Bob's settings flips every correlation sign, so report the
        // S >= 0 representative of the optimum.
        Angles flipped = best_x;
        flipped[4] = kPi - flipped[4];
        flipped[5] += kPi;
        flipped[6] = kPi - flipped[6];
        flipped[7] += kPi;
        const SettingsQuad q = SettingsQuad::from_angles(flipped);
        const ChshResult r = chsh_exact(model, q);
        if (std::abs(r.s - out.abs_s) <= 1e-9 * (1.0 + out.abs_s)) {
            out.settings = q;
            out.chsh = r;
            out.abs_s = std::abs(r.s);
        }
    }
    return out;
}

CoincidenceCounts simulate_events(const CorrelationModel& model, const SettingsQuad& q,
                                  std::uint64_t n_per_pair, std::uint64_t seed) {
    if (n_per_pair < 1) throw std::invalid_argument("n_per_pair must be >= 1");

    const std::array<std::pair<const Direction*, const Direction*>, 4> pairs = {
        std::pair{&q.a, &q.b}, std::pair{&q.a, &q.b_prime}, std::pair{&q.a_prime, &q.b},
        std::pair{&q.a_prime, &q.b_prime}};

    CoincidenceCounts counts;
    for (int pair = 0; pair < 4; ++pair) {
        std::array<double, 4> p{};
        double sum = 0.0;
        for (int o = 0; o < 4; ++o) {
            const std::size_t k = static_cast<std::size_t>(o);
            p[k] = model.joint_probability(*pairs[static_cast<std::size_t>(pair)].first,
                                           *pairs[static_cast<std::size_t>(pair)].second,
                                           kOutcomeAlpha[k], kOutcomeBeta[k]);
            if (p[k] < -1e-9)
                throw std::invalid_argument("model has negative joint probability");
            sum += p[k];
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("model probabilities do not sum to 1");

        std::array<double, 4> cdf{};
        double acc = 0.0;
        for (int o = 0; o < 4; ++o) {
            acc += std::max(0.0, p[static_cast<std::size_t>(o)]) / sum;
            cdf[static_cast<std::size_t>(o)] = acc;
        }
        cdf[3] = 1.0;

        const CounterStream stream(seed, static_cast<std::uint64_t>(pair));
        auto& tally = counts.n[static_cast<std::size_t>(pair)];
        for (std::uint64_t i = 0; i < n_per_pair; ++i) {
            const double u = stream.uniform(i);
            int o = 0;
            while (u >= cdf[static_cast<std::size_t>(o)]) ++o;
            ++tally[static_cast<std::size_t>(o)];
        }
    }
    return counts;
}

ChshResult chsh_from_counts(const CoincidenceCounts& counts) {
    ChshResult r;
    double var = 0.0;
    for (int pair = 0; pair < 4; ++pair) {
        const auto& n = counts.n[static_cast<std::size_t>(pair)];
        const std::uint64_t total = counts.total(pair);
        if (total == 0) throw std::invalid_argument("setting pair has zero counts");
        const double nt = static_cast<double>(total);
        double e = 0.0;
        for (int o = 0; o < 4; ++o) {
            const std::size_t k = static_cast<std::size_t>(o);
            e += kOutcomeAlpha[k] * kOutcomeBeta[k] * static_cast<double>(n[k]) / nt;
        }
        r.terms[static_cast<std::size_t>(pair)] = e;
        var += std::max(0.0, 1.0 - e * e) / nt;
    }
    r.s = r.terms[0] + r.terms[1] + r.terms[2] - r.terms[3];
    r.std_error = std::sqrt(var);
    r.counts = counts;
    return r;
}

NoSignalingReport no_signaling_audit(const CorrelationModel& model, int trials, std::uint64_t seed,
                                     double threshold) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SplitMix64 g(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Direction a = uniform_direction(g);
        const Direction a2 = uniform_direction(g);
        const Direction b = uniform_direction(g);
        const Direction b2 = uniform_direction(g);
        for (int out : {+1, -1}) {
            const double alice_near = model.joint_probability(a, b, out, +1) +
                                      model.joint_probability(a, b, out, -1);
            const double alice_far = model.joint_probability(a, b2, out, +1) +
                                     model.joint_probability(a, b2, out, -1);
            const double bob_near = model.joint_probability(a, b, +1, out) +
                                    model.joint_probability(a, b, -1, out);
            const double bob_far = model.joint_probability(a2, b, +1, out) +
                                   model.joint_probability(a2, b, -1, out);
            worst = std::max({worst, std::abs(alice_near - alice_far),
                              std::abs(bob_near - bob_far)});
        }
    }
    return {worst, trials, threshold, worst < threshold};
}

}  // namespace bell
