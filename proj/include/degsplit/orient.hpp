#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "degsplit/graph.hpp"
#include "degsplit/ledger.hpp"
#include "degsplit/rng.hpp"

namespace degsplit::orient {

// Unbalanced-orientation sampler: per-node bits X_v (probability eta), per-
// edge bits Y_e (probability nu) and Z_e (probability 1/2), an orientation
// rule local to each edge, and a Moser-Tardos resampling loop over the
// per-node bad events.

struct Params {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double slack_c = 2.0;  // the constant in slack_c * sqrt(Delta ln Delta)
    double eta = 0.0;
    double nu = 0.0;
    std::uint64_t seed = 0;
    long max_resample = 0;
};

// eta = (1/2 - rho2) / (1 - rho1 - rho2), nu = rho1 + rho2 - 1/2; the 0/0
// at rho1 = rho2 = 1/2 resolves to eta = 1/2. DomainError outside
// rho1, rho2 in [0, 1/2] with rho1 + rho2 >= 1/2.
Params derive_params(double rho1, double rho2, double slack_c,
                     std::uint64_t seed, long max_resample);

struct SampleState {
    std::vector<char> x;  // per node
    std::vector<char> y;  // per edge
    std::vector<char> z;  // per edge
};

// Draw every variable fresh: X_v in node order, then Y_e, Z_e per edge.
SampleState sample_all(const TypedMultiGraph& g, const Params& p, Rng& rng);

// Redraw exactly the scope of node v's event: X_v, X_u for neighbors u
// (ascending ids), and Y_e, Z_e for incident edges (ascending ids).
void resample_scope(const TypedMultiGraph& g, const Params& p, SampleState& s,
                    int v, Rng& rng);

// Per-edge rule with u the lower- and v the higher-id endpoint:
// X_u == X_v -> u->v iff Z_e = 1; X_u = 0, X_v = 1 -> u->v iff Y_e = 0;
// X_u = 1, X_v = 0 -> u->v iff Y_e = 1.
Orientation orient_from_sample(const TypedMultiGraph& g, const SampleState& s);

// The additive threshold slack_c * sqrt(Delta ln Delta) (0 when Delta <= 1).
double slack_absolute(const TypedMultiGraph& g, const Params& p);

// True iff v exceeds both thresholds: outdeg > rho1*d(v) + slack and
// indeg > rho2*d(v) + slack.
bool bad_event(const TypedMultiGraph& g, const Orientation& o, const Params& p,
               int v);

struct LllResult {
    Orientation orientation;
    long resamples = 0;
    long violations_initial = 0;
    std::vector<std::pair<int, int>> out_in;  // per node (outdeg, indeg)
};

// Moser-Tardos: while some bad event holds, redraw the lowest-id violated
// node's scope. Throws BudgetExhaustedError past max_resample redraws.
LllResult lll_orient(const TypedMultiGraph& g, const Params& p,
                     CostLedger* ledger = nullptr);

struct MeanStats {
    std::optional<double> mean_in_x0;   // mean indegree of X=0 nodes
    std::optional<double> se_in_x0;
    std::optional<double> mean_out_x1;  // mean outdegree of X=1 nodes
    std::optional<double> se_out_x1;
    long trials = 0;
};

// Monte-Carlo over fresh samples (no resampling); a statistic whose node
// class is empty in every trial is reported absent.
MeanStats empirical_means(const TypedMultiGraph& g, const Params& p, long trials);

}  // namespace degsplit::orient
