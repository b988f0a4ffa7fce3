#include "degsplit/orient.hpp"

#include <algorithm>
#include <cmath>

namespace degsplit::orient {

Params derive_params(double rho1, double rho2, double slack_c,
                     std::uint64_t seed, long max_resample) {
    if (!(rho1 >= 0.0 && rho1 <= 0.5) || !(rho2 >= 0.0 && rho2 <= 0.5))
        throw DomainError("rho1, rho2 must lie in [0, 1/2]");
    if (rho1 + rho2 < 0.5 - 1e-12)
        throw DomainError("rho1 + rho2 must be at least 1/2");
    Params p;
    p.rho1 = rho1;
    p.rho2 = rho2;
    p.slack_c = slack_c;
    p.seed = seed;
    p.max_resample = max_resample;
    double den = 1.0 - rho1 - rho2;
    p.eta = den <= 1e-12 ? 0.5 : (0.5 - rho2) / den;
    p.nu = rho1 + rho2 - 0.5;
    return p;
}

SampleState sample_all(const TypedMultiGraph& g, const Params& p, Rng& rng) {
    SampleState s;
    s.x.resize(g.node_count());
    s.y.resize(g.edge_count());
    s.z.resize(g.edge_count());
    for (int v = 0; v < g.node_count(); ++v) s.x[v] = rng.bernoulli(p.eta);
    for (int e = 0; e < g.edge_count(); ++e) {
        s.y[e] = rng.bernoulli(p.nu);
        s.z[e] = rng.bernoulli(0.5);
    }
    return s;
}

void resample_scope(const TypedMultiGraph& g, const Params& p, SampleState& s,
                    int v, Rng& rng) {
    s.x[v] = rng.bernoulli(p.eta);
    std::vector<int> neighbors;
    for (const HalfEdge& h : g.incident(v))
        neighbors.push_back(g.other_endpoint(h.edge, v));
    std::sort(neighbors.begin(), neighbors.end());
    neighbors.erase(std::unique(neighbors.begin(), neighbors.end()),
                    neighbors.end());
    for (int u : neighbors) s.x[u] = rng.bernoulli(p.eta);
    for (const HalfEdge& h : g.incident(v)) {  // ascending edge ids
        s.y[h.edge] = rng.bernoulli(p.nu);
        s.z[h.edge] = rng.bernoulli(0.5);
    }
}

Orientation orient_from_sample(const TypedMultiGraph& g, const SampleState& s) {
    Orientation o(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int lo = std::min(g.edge(e).u, g.edge(e).v);
        int hi = std::max(g.edge(e).u, g.edge(e).v);
        bool lo_to_hi;
        if (s.x[lo] == s.x[hi])
            lo_to_hi = s.z[e] != 0;
        else if (s.x[lo] == 0)
            lo_to_hi = s.y[e] == 0;
        else
            lo_to_hi = s.y[e] != 0;
        bool forward = g.edge(e).u == lo ? lo_to_hi : !lo_to_hi;
        o.set(e, forward ? Dir::Forward : Dir::Backward);
    }
    return o;
}

double slack_absolute(const TypedMultiGraph& g, const Params& p) {
    int delta = g.max_degree();
    if (delta <= 1) return 0.0;
    return p.slack_c * std::sqrt(delta * std::log(double(delta)));
}

bool bad_event(const TypedMultiGraph& g, const Orientation& o, const Params& p,
               int v) {
    double slack = slack_absolute(g, p);
    int out = out_degree(g, o, v), in = in_degree(g, o, v);
    return out > p.rho1 * g.degree(v) + slack && in > p.rho2 * g.degree(v) + slack;
}

LllResult lll_orient(const TypedMultiGraph& g, const Params& p,
                     CostLedger* ledger) {
    Rng rng(p.seed);
    SampleState s = sample_all(g, p, rng);
    Orientation o = orient_from_sample(g, s);
    const double slack = slack_absolute(g, p);

    auto lowest_violated = [&]() {
        for (int v = 0; v < g.node_count(); ++v) {
            int out = out_degree(g, o, v), in = in_degree(g, o, v);
            if (out > p.rho1 * g.degree(v) + slack &&
                in > p.rho2 * g.degree(v) + slack)
                return v;
        }
        return -1;
    };

    LllResult res;
    for (int v = 0; v < g.node_count(); ++v)
        res.violations_initial += bad_event(g, o, p, v) ? 1 : 0;

    long resamples = 0;
    for (int v = lowest_violated(); v != -1; v = lowest_violated()) {
        if (resamples >= p.max_resample)
            throw BudgetExhaustedError(
                resamples, "resample budget exhausted after " +
                               std::to_string(resamples) + " redraws");
        resample_scope(g, p, s, v, rng);
        o = orient_from_sample(g, s);
        ++resamples;
    }

    res.orientation = std::move(o);
    res.resamples = resamples;
    for (int v = 0; v < g.node_count(); ++v)
        res.out_in.emplace_back(out_degree(g, res.orientation, v),
                                in_degree(g, res.orientation, v));
    if (ledger && resamples > 0)
        ledger->add("lll", UnitKind::LLL_RESAMPLE, 0.0, resamples);
    return res;
}

MeanStats empirical_means(const TypedMultiGraph& g, const Params& p, long trials) {
    if (trials < 1) throw BadParamError("need at least one trial");
    std::vector<double> in0, out1;  // one per trial where the class is nonempty
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive_seed(p.seed, static_cast<std::uint64_t>(t)));
        SampleState s = sample_all(g, p, rng);
        Orientation o = orient_from_sample(g, s);
        long n0 = 0, n1 = 0;
        long in_sum = 0, out_sum = 0;
        for (int v = 0; v < g.node_count(); ++v) {
            if (s.x[v] == 0) {
                ++n0;
                in_sum += in_degree(g, o, v);
            } else {
                ++n1;
                out_sum += out_degree(g, o, v);
            }
        }
        if (n0 > 0) in0.push_back(double(in_sum) / double(n0));
        if (n1 > 0) out1.push_back(double(out_sum) / double(n1));
    }

    auto summarize = [](const std::vector<double>& xs)
        -> std::pair<std::optional<double>, std::optional<double>> {
        if (xs.empty()) return {std::nullopt, std::nullopt};
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= double(xs.size());
        if (xs.size() == 1) return {mean, std::nullopt};
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= double(xs.size() - 1);
        return {mean, std::sqrt(var / double(xs.size()))};
    };

    MeanStats ms;
    ms.trials = trials;
    std::tie(ms.mean_in_x0, ms.se_in_x0) = summarize(in0);
    std::tie(ms.mean_out_x1, ms.se_out_x1) = summarize(out1);
    return ms;
}

}  // namespace degsplit::orient
