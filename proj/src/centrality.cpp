#include "centra/centrality.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "centra/eigen.hpp"

namespace centra {

namespace {

constexpr std::size_t kSourceBlock = 1024;   // fixed block size keeps merges bit-stable
constexpr std::size_t kDenseEigenLimit = 64; // below this, solve densely outright
constexpr std::size_t kDenseFallbackLimit = 4096;
constexpr std::size_t kSpectrumLimit = 4096;

std::size_t worker_count(std::size_t jobs) {
    const unsigned hw = std::thread::hardware_concurrency();
    return std::max<std::size_t>(1, std::min<std::size_t>(jobs, hw == 0 ? 1 : hw));
}

/// Runs fn(job) for job in [0, jobs) across a small pool. Work items must be
/// independent; any deterministic merging is the caller's business.
void parallel_jobs(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = worker_count(jobs);
    if (workers <= 1) {
        for (std::size_t j = 0; j < jobs; ++j) fn(j);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t j = next.fetch_add(1); j < jobs; j = next.fetch_add(1)) fn(j);
        });
    for (auto& t : pool) t.join();
}

/// Compact adjacency copy for the BFS-heavy sweeps; 32-bit ids halve the
/// memory traffic that dominates their runtime.
struct Csr32 {
    std::vector<std::uint32_t> offsets;
    std::vector<std::int32_t> adjacency;

    explicit Csr32(const Graph& g) {
        const std::size_t n = static_cast<std::size_t>(g.node_count());
        if (g.node_count() > std::numeric_limits<std::int32_t>::max() ||
            g.edge_count() > std::numeric_limits<std::uint32_t>::max() / 2)
            throw std::invalid_argument("graph too large for the path-centrality sweep");
        offsets.resize(n + 1);
        adjacency.resize(static_cast<std::size_t>(g.edge_count()) * 2);
        std::size_t cursor = 0;
        for (std::size_t v = 0; v < n; ++v) {
            offsets[v] = static_cast<std::uint32_t>(cursor);
            for (NodeId w : g.neighbors(static_cast<NodeId>(v)))
                adjacency[cursor++] = static_cast<std::int32_t>(w);
        }
        offsets[n] = static_cast<std::uint32_t>(cursor);
    }
};

struct BrandesScratch {
    std::vector<std::int32_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<std::int32_t> order;      // visit order of one BFS
    std::vector<std::uint32_t> pred_end;  // per-node cursor into pred_data
    std::vector<std::int32_t> pred_data;  // degree-sized segment per node

    BrandesScratch(const Csr32& csr, std::size_t nodes)
        : dist(nodes, -1), sigma(nodes, 0.0), delta(nodes, 0.0),
          pred_end(csr.offsets.begin(), csr.offsets.end() - 1),
          pred_data(csr.adjacency.size(), 0) {
        order.reserve(nodes);
    }
};

/// One Brandes source iteration. Predecessor lists live in fixed
/// degree-sized segments of one flat buffer. Also reports the source's
/// reach (nodes reached, total distance) so closeness can ride the BFS.
void accumulate_from_source(const Csr32& csr, std::int32_t s, BrandesScratch& sc,
                            std::vector<double>& raw, std::int64_t& reached,
                            std::int64_t& total_distance) {
    sc.order.clear();
    sc.order.push_back(s);
    sc.dist[static_cast<std::size_t>(s)] = 0;
    sc.sigma[static_cast<std::size_t>(s)] = 1.0;
    total_distance = 0;

    for (std::size_t head = 0; head < sc.order.size(); ++head) {
        const std::int32_t v = sc.order[head];
        const std::int32_t dv = sc.dist[static_cast<std::size_t>(v)];
        const std::uint32_t end = csr.offsets[static_cast<std::size_t>(v) + 1];
        for (std::uint32_t k = csr.offsets[static_cast<std::size_t>(v)]; k < end; ++k) {
            const std::int32_t w = csr.adjacency[k];
            auto& dw = sc.dist[static_cast<std::size_t>(w)];
            if (dw < 0) {
                dw = dv + 1;
                total_distance += dw;
                sc.order.push_back(w);
            }
            if (dw == dv + 1) {
                sc.sigma[static_cast<std::size_t>(w)] += sc.sigma[static_cast<std::size_t>(v)];
                sc.pred_data[sc.pred_end[static_cast<std::size_t>(w)]++] = v;
            }
        }
    }
    reached = static_cast<std::int64_t>(sc.order.size());

    for (std::size_t i = sc.order.size(); i-- > 1;) {
        const std::int32_t w = sc.order[i];
        const double coeff =
            (1.0 + sc.delta[static_cast<std::size_t>(w)]) / sc.sigma[static_cast<std::size_t>(w)];
        const std::uint32_t end = sc.pred_end[static_cast<std::size_t>(w)];
        for (std::uint32_t k = csr.offsets[static_cast<std::size_t>(w)]; k < end; ++k) {
            const std::int32_t p = sc.pred_data[k];
            sc.delta[static_cast<std::size_t>(p)] += sc.sigma[static_cast<std::size_t>(p)] * coeff;
        }
        raw[static_cast<std::size_t>(w)] += sc.delta[static_cast<std::size_t>(w)];
    }

    // reset only what this source touched
    for (const std::int32_t v : sc.order) {
        sc.dist[static_cast<std::size_t>(v)] = -1;
        sc.sigma[static_cast<std::size_t>(v)] = 0.0;
        sc.delta[static_cast<std::size_t>(v)] = 0.0;
        sc.pred_end[static_cast<std::size_t>(v)] = csr.offsets[static_cast<std::size_t>(v)];
    }
}

double closeness_from_reach(NodeId n, std::int64_t reached, std::int64_t total_distance) {
    if (reached <= 1) return 0.0;
    if (reached == n) return static_cast<double>(n - 1) / static_cast<double>(total_distance);
    const double fraction = static_cast<double>(reached - 1) / static_cast<double>(n - 1);
    return fraction * (static_cast<double>(reached - 1) / static_cast<double>(total_distance));
}

std::vector<double> sparse_matvec_plus_identity(const Graph& g, const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> y(n, 0.0);
    for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
        double acc = x[static_cast<std::size_t>(v)];
        for (NodeId w : g.neighbors(v)) acc += x[static_cast<std::size_t>(w)];
        y[static_cast<std::size_t>(v)] = acc;
    }
    return y;
}

double l2_norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

/// Projection of the all-ones vector onto the eigenspace of the top
/// eigenvalue (eigenvalues within tol of the maximum count as tied).
std::vector<double> dense_principal_vector(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.node_count());
    std::vector<double> a(n * n, 0.0);
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = 1.0;
        a[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = 1.0;
    }
    const SymmetricEigen eig = symmetric_eigen(n, a, true);
    const double top = eig.values[0];
    const double tol = 1e-8 * std::max(1.0, std::fabs(top));

    std::vector<double> proj(n, 0.0);
    for (std::size_t k = 0; k < n && eig.values[k] >= top - tol; ++k) {
        double coeff = 0.0;
        for (std::size_t i = 0; i < n; ++i) coeff += eig.vectors[i * n + k];
        for (std::size_t i = 0; i < n; ++i) proj[i] += coeff * eig.vectors[i * n + k];
    }
    double norm = l2_norm(proj);
    if (norm < 1e-8) {
        // ones is (numerically) orthogonal to the top eigenspace; fall back
        // to the leading eigenvector with nonnegative sum
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += eig.vectors[i * n];
        const double sign = sum < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) proj[i] = sign * eig.vectors[i * n];
        norm = l2_norm(proj);
    }
    for (double& v : proj) v /= norm;
    return proj;
}

std::vector<double> finalize_nonnegative_unit(std::vector<double> v) {
    for (double& x : v)
        if (x < 0.0) x = 0.0;
    const double norm = l2_norm(v);
    if (norm > 0.0)
        for (double& x : v) x /= norm;
    return v;
}

}  // namespace

std::vector<NodeId> degree_sequence(const Graph& g) {
    std::vector<NodeId> degrees;
    degrees.reserve(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) degrees.push_back(g.degree(v));
    return degrees;
}

PathCentrality betweenness_closeness_normalized(const Graph& g) {
    const NodeId n = g.node_count();
    if (n < 3) throw std::invalid_argument("betweenness centralization requires n >= 3");

    const std::size_t nodes = static_cast<std::size_t>(n);
    const Csr32 csr(g);
    const std::size_t blocks = (nodes + kSourceBlock - 1) / kSourceBlock;
    std::vector<std::vector<double>> partials(blocks);
    std::vector<double> closeness(nodes, 0.0);

    parallel_jobs(blocks, [&](std::size_t b) {
        BrandesScratch sc(csr, nodes);
        auto& raw = partials[b];
        raw.assign(nodes, 0.0);
        const std::size_t lo = b * kSourceBlock;
        const std::size_t hi = std::min(nodes, lo + kSourceBlock);
        for (std::size_t s = lo; s < hi; ++s) {
            std::int64_t reached = 0;
            std::int64_t total = 0;
            accumulate_from_source(csr, static_cast<std::int32_t>(s), sc, raw, reached, total);
            closeness[s] = closeness_from_reach(n, reached, total);
        }
    });

    std::vector<double> result(nodes, 0.0);
    for (const auto& part : partials)
        for (std::size_t i = 0; i < nodes; ++i) result[i] += part[i];

    // each unordered pair was accumulated from both endpoints
    const double pair_norm = static_cast<double>((n - 1) * (n - 2)) / 2.0;
    for (double& v : result) v = (v / 2.0) / pair_norm;
    return {std::move(result), std::move(closeness)};
}

std::vector<double> betweenness_normalized(const Graph& g) {
    return betweenness_closeness_normalized(g).betweenness;
}

std::vector<double> closeness_normalized(const Graph& g) {
    const NodeId n = g.node_count();
    if (n < 3) throw std::invalid_argument("closeness centralization requires n >= 3");

    const std::size_t nodes = static_cast<std::size_t>(n);
    const Csr32 csr(g);
    std::vector<double> result(nodes, 0.0);
    const std::size_t blocks = (nodes + kSourceBlock - 1) / kSourceBlock;

    parallel_jobs(blocks, [&](std::size_t b) {
        std::vector<std::int32_t> dist(nodes, -1);
        std::vector<std::int32_t> queue;
        queue.reserve(nodes);
        const std::size_t lo = b * kSourceBlock;
        const std::size_t hi = std::min(nodes, lo + kSourceBlock);
        for (std::size_t s = lo; s < hi; ++s) {
            queue.clear();
            queue.push_back(static_cast<std::int32_t>(s));
            dist[s] = 0;
            std::int64_t total = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const std::int32_t v = queue[head];
                const std::int32_t dv = dist[static_cast<std::size_t>(v)];
                const std::uint32_t end = csr.offsets[static_cast<std::size_t>(v) + 1];
                for (std::uint32_t k = csr.offsets[static_cast<std::size_t>(v)]; k < end; ++k) {
                    const std::int32_t w = csr.adjacency[k];
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = dv + 1;
                        total += dv + 1;
                        queue.push_back(w);
                    }
                }
            }
            result[s] = closeness_from_reach(n, static_cast<std::int64_t>(queue.size()), total);
            for (const std::int32_t v : queue) dist[static_cast<std::size_t>(v)] = -1;
        }
    });

    return result;
}

std::vector<double> eigenvector_l2(const Graph& g) {
    const NodeId n = g.node_count();
    if (n < 1) throw std::invalid_argument("eigenvector centrality requires n >= 1");
    const std::size_t nodes = static_cast<std::size_t>(n);
    if (g.edge_count() == 0) return std::vector<double>(nodes, 0.0);

    // Regular graphs (including disconnected ones with equal degrees) have
    // the uniform vector as the projection of ones onto the top eigenspace.
    bool regular = true;
    const NodeId d0 = g.degree(0);
    for (NodeId v = 1; v < n && regular; ++v) regular = g.degree(v) == d0;
    if (regular) return std::vector<double>(nodes, 1.0 / std::sqrt(static_cast<double>(n)));

    if (nodes <= kDenseEigenLimit)
        return finalize_nonnegative_unit(dense_principal_vector(g));

    // Shifted power iteration from the uniform vector; the +1 shift keeps
    // bipartite spectra from oscillating.
    std::vector<double> x(nodes, 1.0 / std::sqrt(static_cast<double>(n)));
    bool converged = false;
    for (int iter = 0; iter < 100000; ++iter) {
        std::vector<double> y = sparse_matvec_plus_identity(g, x);
        const double norm = l2_norm(y);
        if (norm == 0.0) break;
        for (double& v : y) v /= norm;
        double diff = 0.0;
        for (std::size_t i = 0; i < nodes; ++i) diff = std::max(diff, std::fabs(y[i] - x[i]));
        x.swap(y);
        if (diff <= 1e-12) {
            converged = true;
            break;
        }
    }

    double lambda = 0.0;
    {
        std::vector<double> ax = sparse_matvec_plus_identity(g, x);
        for (std::size_t i = 0; i < nodes; ++i) ax[i] -= x[i];
        for (std::size_t i = 0; i < nodes; ++i) lambda += x[i] * ax[i];
        double residual = 0.0;
        for (std::size_t i = 0; i < nodes; ++i) {
            const double r = ax[i] - lambda * x[i];
            residual += r * r;
        }
        residual = std::sqrt(residual);
        if ((!converged || residual > 1e-9 * std::max(1.0, std::fabs(lambda))) &&
            nodes <= kDenseFallbackLimit)
            return finalize_nonnegative_unit(dense_principal_vector(g));
    }
    return finalize_nonnegative_unit(std::move(x));
}

Spectrum adjacency_spectrum(const Graph& g) {
    const NodeId n = g.node_count();
    if (n < 1) throw std::invalid_argument("adjacency spectrum requires n >= 1");
    const std::size_t nodes = static_cast<std::size_t>(n);
    if (nodes > kSpectrumLimit)
        throw std::invalid_argument("adjacency_spectrum: dense eigendecomposition capped at n = " +
                                    std::to_string(kSpectrumLimit));
    std::vector<double> a(nodes * nodes, 0.0);
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.u) * nodes + static_cast<std::size_t>(e.v)] = 1.0;
        a[static_cast<std::size_t>(e.v) * nodes + static_cast<std::size_t>(e.u)] = 1.0;
    }
    Spectrum s;
    s.eigenvalues = symmetric_eigen(nodes, a, false).values;
    return s;
}

double degree_assortativity(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("assortativity requires m >= 1");

    // Integer moment sums over the 2m directed endpoint pairs; both marginals
    // coincide by symmetry.
    __int128 s1 = 0;   // sum of endpoint degrees
    __int128 s2 = 0;   // sum of squared endpoint degrees
    __int128 sxy = 0;  // sum of degree products
    for (const auto& e : g.edges()) {
        const __int128 du = g.degree(e.u);
        const __int128 dv = g.degree(e.v);
        s1 += du + dv;
        s2 += du * du + dv * dv;
        sxy += 2 * du * dv;
    }
    const __int128 pairs = 2 * static_cast<__int128>(g.edge_count());
    const __int128 numerator = pairs * sxy - s1 * s1;
    const __int128 denominator = pairs * s2 - s1 * s1;
    if (denominator == 0) return 1.0;  // degree-regular edge ends
    return static_cast<double>(static_cast<long double>(numerator) /
                               static_cast<long double>(denominator));
}

}  // namespace centra
