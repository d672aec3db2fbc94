#include "centra/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "centra/centrality.hpp"

namespace centra {

std::string_view measure_name(MeasureId id) {
    switch (id) {
        case MeasureId::Abh: return "ABH";
        case MeasureId::Ecd: return "ECD";
        case MeasureId::Nbc: return "NBC";
        case MeasureId::Ncc: return "NCC";
        case MeasureId::Ndc: return "NDC";
        case MeasureId::Nde: return "NDE";
        case MeasureId::Ndv: return "NDV";
        case MeasureId::Ngc: return "NGC";
        case MeasureId::Nhd: return "NHD";
        case MeasureId::Nht: return "NHT";
        case MeasureId::Nnc: return "NNC";
    }
    throw std::invalid_argument("unknown measure id");
}

MeasureId parse_measure(std::string_view name) {
    for (MeasureId id : kAllMeasures)
        if (measure_name(id) == name) return id;
    throw std::invalid_argument("unknown measure '" + std::string(name) + "'");
}

std::size_t measure_index(MeasureId id) {
    return static_cast<std::size_t>(id);
}

std::int64_t ndv_star_term(NodeId n) {
    return (n - 1) * (n - 2) * (n - 2);
}

std::int64_t ndv_two_hub_term(NodeId n) {
    const std::int64_t a = 2 * n * n * n - 6 * n;
    const std::int64_t b = 4 * n - 6;
    return a - b * b;
}

namespace {

struct DegreeStats {
    std::vector<NodeId> degrees;
    std::int64_t sum = 0;         // = 2m
    std::int64_t sum_squares = 0;
    NodeId max = 0;
};

DegreeStats degree_stats(const Graph& g) {
    DegreeStats st;
    st.degrees = degree_sequence(g);
    for (NodeId d : st.degrees) {
        st.sum += d;
        st.sum_squares += static_cast<std::int64_t>(d) * d;
        st.max = std::max(st.max, d);
    }
    return st;
}

/// Lazily-computed intermediates shared by evaluate_all.
struct EvalContext {
    const Graph& g;
    std::optional<DegreeStats> degrees_;
    std::optional<std::vector<double>> betweenness_;
    std::optional<std::vector<double>> closeness_;
    std::optional<std::vector<double>> eigenvector_;
    std::optional<Spectrum> spectrum_;

    explicit EvalContext(const Graph& graph) : g(graph) {}

    const DegreeStats& degrees() {
        if (!degrees_) degrees_ = degree_stats(g);
        return *degrees_;
    }
    const std::vector<double>& betweenness() {
        if (!betweenness_) betweenness_ = betweenness_normalized(g);
        return *betweenness_;
    }
    const std::vector<double>& closeness() {
        if (!closeness_) closeness_ = closeness_normalized(g);
        return *closeness_;
    }
    const std::vector<double>& eigenvector() {
        if (!eigenvector_) eigenvector_ = eigenvector_l2(g);
        return *eigenvector_;
    }
    const Spectrum& spectrum() {
        if (!spectrum_) spectrum_ = adjacency_spectrum(g);
        return *spectrum_;
    }
};

MeasureResult finalize(MeasureId id, double value) {
    if (value < -1e-9 || value > 1.0 + 1e-9)
        throw std::logic_error(std::string(measure_name(id)) + " outside [0,1]: " +
                               std::to_string(value));
    value = std::clamp(value, 0.0, 1.0) + 0.0;  // also normalizes -0.0
    return {id, value, false};
}

MeasureResult degenerate_zero(MeasureId id) {
    return {id, 0.0, true};
}

double centralization_sum(const std::vector<double>& values) {
    const double top = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += top - v;
    return sum;
}

/// Closeness profile of the star on n nodes, evaluated through the same
/// arithmetic as closeness_normalized. NCC's denominator (the maximum of
/// its numerator over all n-node graphs, realized in the star) is computed
/// from this so a star input scores bit-exact 1.
std::vector<double> star_closeness_profile(NodeId n) {
    std::vector<double> values(static_cast<std::size_t>(n));
    values[0] = static_cast<double>(n - 1) / static_cast<double>(n - 1);
    const double leaf = static_cast<double>(n - 1) / static_cast<double>(2 * n - 3);
    for (std::size_t i = 1; i < values.size(); ++i) values[i] = leaf;
    return values;
}

double log_sum_exp(std::span<const double> xs) {
    double top = xs[0];
    for (double x : xs) top = std::max(top, x);
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - top);
    return top + std::log(acc);
}

/// Mean natural-connectivity exponent ln((1/n) sum e^{lambda_i}), shifted
/// log-sum-exp so e^{n-1} never overflows.
double natural_connectivity(std::span<const double> eigenvalues, NodeId n) {
    return log_sum_exp(eigenvalues) - std::log(static_cast<double>(n));
}

MeasureResult abh_impl(EvalContext& ctx) {
    const Graph& g = ctx.g;
    if (g.node_count() < 2 || g.edge_count() == 0) return degenerate_zero(MeasureId::Abh);
    const double r = degree_assortativity(g);
    return finalize(MeasureId::Abh, (1.0 - r) / 2.0);
}

MeasureResult ecd_impl(EvalContext& ctx) {
    const Graph& g = ctx.g;
    const NodeId n = g.node_count();
    if (n < 2) return degenerate_zero(MeasureId::Ecd);
    const auto& values = ctx.eigenvector();

    const bool constant = std::all_of(values.begin(), values.end(),
                                      [&](double v) { return v == values[0]; });
    if (constant) return finalize(MeasureId::Ecd, 0.0);

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    const double max_std = std::sqrt(static_cast<double>(n - 1)) / static_cast<double>(n);
    return finalize(MeasureId::Ecd, std::sqrt(var) / max_std);
}

MeasureResult nbc_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    if (n < 3) return degenerate_zero(MeasureId::Nbc);
    const double sum = centralization_sum(ctx.betweenness());
    return finalize(MeasureId::Nbc, sum / static_cast<double>(n - 1));
}

MeasureResult ncc_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    if (n < 3) return degenerate_zero(MeasureId::Ncc);
    const double sum = centralization_sum(ctx.closeness());
    const double star_max = centralization_sum(star_closeness_profile(n));
    return finalize(MeasureId::Ncc, sum / star_max);
}

MeasureResult ndc_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    if (n < 3) return degenerate_zero(MeasureId::Ndc);
    const auto& st = ctx.degrees();
    // n(d_max - mean) / ((n-1)(n-2)) with the numerator kept integral
    const std::int64_t numerator = static_cast<std::int64_t>(n) * st.max - st.sum;
    const std::int64_t denominator = static_cast<std::int64_t>(n - 1) * (n - 2);
    return finalize(MeasureId::Ndc,
                    static_cast<double>(numerator) / static_cast<double>(denominator));
}

MeasureResult nde_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    if (n < 2) return degenerate_zero(MeasureId::Nde);
    const auto& st = ctx.degrees();
    std::map<NodeId, std::int64_t> classes;
    for (NodeId d : st.degrees) ++classes[d];
    double entropy = 0.0;
    for (const auto& [degree, count] : classes) {
        const double p = static_cast<double>(count) / static_cast<double>(n);
        entropy -= p * std::log(p);
    }
    return finalize(MeasureId::Nde, entropy / std::log(static_cast<double>(n)));
}

MeasureResult ndv_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    if (n < 3) return degenerate_zero(MeasureId::Ndv);
    const auto& st = ctx.degrees();
    // population variance * n^2 is integral: n * sum d^2 - (sum d)^2
    const std::int64_t variance_num =
        static_cast<std::int64_t>(n) * st.sum_squares - st.sum * st.sum;
    const std::int64_t max_num = std::max(ndv_star_term(n), ndv_two_hub_term(n));
    return finalize(MeasureId::Ndv,
                    static_cast<double>(variance_num) / static_cast<double>(max_num));
}

MeasureResult ngc_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    const std::int64_t m = ctx.g.edge_count();
    if (n < 3 || m == 0) return degenerate_zero(MeasureId::Ngc);
    const auto& st = ctx.degrees();

    // sum over ordered pairs of |d_i - d_j| via the sorted-prefix identity
    std::vector<NodeId> sorted = st.degrees;
    std::sort(sorted.begin(), sorted.end());
    std::int64_t gini_num = 0;  // = sum_{i<j} (d_(j) - d_(i))
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        gini_num += static_cast<std::int64_t>(i) * sorted[i] - prefix;
        prefix += sorted[i];
    }
    // [2*gini_num / (2 n^2 dbar)] / ((n-2)/n) with dbar = 2m/n reduces to
    // gini_num / (2 m (n-2))
    const std::int64_t denominator = 2 * m * (n - 2);
    return finalize(MeasureId::Ngc,
                    static_cast<double>(gini_num) / static_cast<double>(denominator));
}

MeasureResult nhd_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    if (n < 2 || ctx.g.edge_count() == 0) return degenerate_zero(MeasureId::Nhd);
    const auto& st = ctx.degrees();
    return finalize(MeasureId::Nhd, static_cast<double>(st.max) / static_cast<double>(n - 1));
}

MeasureResult nht_impl(EvalContext& ctx) {
    const NodeId n = ctx.g.node_count();
    const std::int64_t m = ctx.g.edge_count();
    if (n < 2 || m == 0) return degenerate_zero(MeasureId::Nht);
    const auto& st = ctx.degrees();
    // [sum d^2 / sum d] / ((m+1)/2) = 2 sum d^2 / (sum d * (m+1))
    const std::int64_t numerator = 2 * st.sum_squares;
    const std::int64_t denominator = st.sum * (m + 1);
    return finalize(MeasureId::Nht,
                    static_cast<double>(numerator) / static_cast<double>(denominator));
}

MeasureResult nnc_impl(EvalContext& ctx) {
    const Graph& g = ctx.g;
    const NodeId n = g.node_count();
    const std::int64_t m = g.edge_count();
    if (m == 0) return degenerate_zero(MeasureId::Nnc);

    const std::vector<double> reference = [&] {
        std::vector<double> exps(static_cast<std::size_t>(n), -1.0);
        exps[0] = static_cast<double>(n - 1);
        return exps;
    }();
    const double lambda_max = natural_connectivity(reference, n);

    // A complete graph has spectrum {n-1, -1 x (n-1)} exactly; evaluating it
    // through the same expression as lambda_max keeps NNC(K_n) at exact 0
    // instead of eigensolver noise.
    const bool complete = m == static_cast<std::int64_t>(n) * (n - 1) / 2;
    const double lambda_bar =
        complete ? natural_connectivity(reference, n)
                 : natural_connectivity(ctx.spectrum().eigenvalues, n);
    return finalize(MeasureId::Nnc, (lambda_max - lambda_bar) / lambda_max);
}

MeasureResult evaluate_in_context(EvalContext& ctx, MeasureId id) {
    switch (id) {
        case MeasureId::Abh: return abh_impl(ctx);
        case MeasureId::Ecd: return ecd_impl(ctx);
        case MeasureId::Nbc: return nbc_impl(ctx);
        case MeasureId::Ncc: return ncc_impl(ctx);
        case MeasureId::Ndc: return ndc_impl(ctx);
        case MeasureId::Nde: return nde_impl(ctx);
        case MeasureId::Ndv: return ndv_impl(ctx);
        case MeasureId::Ngc: return ngc_impl(ctx);
        case MeasureId::Nhd: return nhd_impl(ctx);
        case MeasureId::Nht: return nht_impl(ctx);
        case MeasureId::Nnc: return nnc_impl(ctx);
    }
    throw std::invalid_argument("unknown measure id");
}

}  // namespace

MeasureResult abh(const Graph& g) { EvalContext ctx(g); return abh_impl(ctx); }
MeasureResult ecd(const Graph& g) { EvalContext ctx(g); return ecd_impl(ctx); }
MeasureResult nbc(const Graph& g) { EvalContext ctx(g); return nbc_impl(ctx); }
MeasureResult ncc(const Graph& g) { EvalContext ctx(g); return ncc_impl(ctx); }
MeasureResult ndc(const Graph& g) { EvalContext ctx(g); return ndc_impl(ctx); }
MeasureResult nde(const Graph& g) { EvalContext ctx(g); return nde_impl(ctx); }
MeasureResult ndv(const Graph& g) { EvalContext ctx(g); return ndv_impl(ctx); }
MeasureResult ngc(const Graph& g) { EvalContext ctx(g); return ngc_impl(ctx); }
MeasureResult nhd(const Graph& g) { EvalContext ctx(g); return nhd_impl(ctx); }
MeasureResult nht(const Graph& g) { EvalContext ctx(g); return nht_impl(ctx); }
MeasureResult nnc(const Graph& g) { EvalContext ctx(g); return nnc_impl(ctx); }

MeasureResult evaluate(const Graph& g, MeasureId id) {
    EvalContext ctx(g);
    return evaluate_in_context(ctx, id);
}

std::vector<MeasureResult> evaluate_all(const Graph& g, std::span<const MeasureId> measures) {
    EvalContext ctx(g);

    // NBC and NCC together share one shortest-path sweep
    const bool wants_nbc = std::find(measures.begin(), measures.end(), MeasureId::Nbc) != measures.end();
    const bool wants_ncc = std::find(measures.begin(), measures.end(), MeasureId::Ncc) != measures.end();
    if (wants_nbc && wants_ncc && g.node_count() >= 3) {
        PathCentrality path = betweenness_closeness_normalized(g);
        ctx.betweenness_ = std::move(path.betweenness);
        ctx.closeness_ = std::move(path.closeness);
    }

    std::vector<MeasureResult> results;
    results.reserve(measures.size());
    for (MeasureId id : measures) results.push_back(evaluate_in_context(ctx, id));
    return results;
}

}  // namespace centra
