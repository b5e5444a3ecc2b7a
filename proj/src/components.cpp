#include "qpoints/components.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "qpoints/errors.hpp"

namespace qpoints {

CoherenceGraph::CoherenceGraph(int base, std::vector<int> vertices)
    : base_(base), vertices_(std::move(vertices)),
      adj_(vertices_.size() * vertices_.size(), 0) {}

bool CoherenceGraph::edge(std::size_t a, std::size_t b) const {
    return adj_[a * vertices_.size() + b] != 0;
}

void CoherenceGraph::set_edge(std::size_t a, std::size_t b) {
    adj_[a * vertices_.size() + b] = 1;
    adj_[b * vertices_.size() + a] = 1;
}

CoherenceGraph coherence_graph(const QuantumMatrix& q, int base) {
    if (base < 0 || base > q.n()) throw IndexOutOfRangeError();
    std::vector<int> vertices;
    vertices.reserve(q.n());
    for (int v = 0; v <= q.n(); ++v)
        if (v != base) vertices.push_back(v);
    CoherenceGraph g(base, std::move(vertices));
    for (std::size_t a = 0; a < g.vertex_count(); ++a)
        for (std::size_t b = a + 1; b < g.vertex_count(); ++b)
            if (coherent(q, base, g.vertices()[a], g.vertices()[b])) g.set_edge(a, b);
    return g;
}

namespace {

using PosList = std::vector<std::size_t>;  // sorted vertex positions

PosList intersect_neighbors(const CoherenceGraph& g, const PosList& set, std::size_t v) {
    PosList out;
    out.reserve(set.size());
    for (std::size_t p : set)
        if (g.edge(p, v)) out.push_back(p);
    return out;
}

std::size_t count_neighbors(const CoherenceGraph& g, const PosList& set, std::size_t v) {
    std::size_t c = 0;
    for (std::size_t p : set)
        if (g.edge(p, v)) ++c;
    return c;
}

struct CliqueSink {
    const CoherenceGraph& g;
    std::optional<std::size_t> limit;
    std::vector<IndexSubset> out;

    void emit(const PosList& positions) {
        if (limit && out.size() >= *limit)
            throw ComponentLimitExceededError(*limit);
        std::vector<int> labels;
        labels.reserve(positions.size());
        for (std::size_t p : positions) labels.push_back(g.vertices()[p]);
        out.emplace_back(std::move(labels));
    }
};

void bron_kerbosch(const CoherenceGraph& g, PosList& r, PosList p, PosList x,
                   CliqueSink& sink) {
    if (p.empty() && x.empty()) {
        sink.emit(r);
        return;
    }
    // Pivot on the vertex covering most of P, so only its non-neighbors branch.
    std::size_t pivot = 0, best = 0;
    bool have_pivot = false;
    for (const PosList* side : {&p, &x}) {
        for (std::size_t u : *side) {
            std::size_t c = count_neighbors(g, p, u);
            if (!have_pivot || c > best) { pivot = u; best = c; have_pivot = true; }
        }
    }
    PosList candidates;
    for (std::size_t v : p)
        if (!g.edge(v, pivot)) candidates.push_back(v);
    for (std::size_t v : candidates) {
        r.push_back(v);
        bron_kerbosch(g, r, intersect_neighbors(g, p, v), intersect_neighbors(g, x, v), sink);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

PosList degeneracy_order(const CoherenceGraph& g) {
    const std::size_t k = g.vertex_count();
    std::vector<std::size_t> degree(k, 0);
    std::vector<char> removed(k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && g.edge(a, b)) ++degree[a];
    PosList order;
    order.reserve(k);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t best = k;
        for (std::size_t v = 0; v < k; ++v)
            if (!removed[v] && (best == k || degree[v] < degree[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (std::size_t v = 0; v < k; ++v)
            if (!removed[v] && g.edge(best, v)) --degree[v];
    }
    return order;
}

}  // namespace

std::vector<IndexSubset> maximal_cliques(const CoherenceGraph& g,
                                         std::optional<std::size_t> limit) {
    CliqueSink sink{g, limit, {}};
    const PosList order = degeneracy_order(g);
    std::vector<std::size_t> rank(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    for (std::size_t v : order) {
        PosList p, x;
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            if (u == v || !g.edge(u, v)) continue;
            (rank[u] > rank[v] ? p : x).push_back(u);
        }
        PosList r{v};
        bron_kerbosch(g, r, std::move(p), std::move(x), sink);
    }
    return std::move(sink.out);
}

PointVariety PointVariety::from_subsets(int n, std::vector<IndexSubset> subsets) {
    if (subsets.empty()) throw Error("a point variety has at least one component");
    auto canonical_less = [](const IndexSubset& a, const IndexSubset& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.indices() < b.indices();
    };
    std::sort(subsets.begin(), subsets.end(), canonical_less);
    subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
    for (const auto& s : subsets) {
        if (s.empty()) throw EmptySubsetError();
        if (s.max() > n) throw IndexOutOfRangeError("component index exceeds n");
    }
    PointVariety v;
    v.n_ = n;
    v.components_ = std::move(subsets);
    return v;
}

int PointVariety::dimension() const {
    std::size_t largest = 0;
    for (const auto& s : components_) largest = std::max(largest, s.size());
    return static_cast<int>(largest) - 1;
}

bool PointVariety::is_full_space() const {
    return components_.size() == 1 &&
           components_.front().size() == static_cast<std::size_t>(n_) + 1;
}

namespace {

PointVariety single_point_variety() {
    return PointVariety::from_subsets(0, {IndexSubset{0}});
}

std::vector<IndexSubset> retain_maximal(std::vector<IndexSubset> subsets) {
    std::sort(subsets.begin(), subsets.end(),
              [](const IndexSubset& a, const IndexSubset& b) { return a.size() > b.size(); });
    std::vector<IndexSubset> maximal;
    for (auto& s : subsets) {
        bool covered = false;
        for (const auto& m : maximal) {
            if (m.contains_all(s)) { covered = true; break; }
        }
        if (!covered) maximal.push_back(std::move(s));
    }
    return maximal;
}

}  // namespace

PointVariety components(const QuantumMatrix& q, const ComponentsOptions& opts) {
    if (opts.max_components && *opts.max_components == 0)
        throw Error("max_components must be at least 1");
    if (q.n() == 0) return single_point_variety();

    const int bases = q.n() + 1;
    std::vector<std::vector<IndexSubset>> per_base(bases);
    std::vector<std::exception_ptr> failures(bases);
    auto enumerate_base = [&](int i) {
        try {
            per_base[i] = maximal_cliques(coherence_graph(q, i), opts.max_components);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };

    const int workers = std::min(std::max(opts.threads, 1), bases);
    if (workers <= 1) {
        for (int i = 0; i < bases; ++i) enumerate_base(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < bases; i = next.fetch_add(1))
                    enumerate_base(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Merge in base order; each component of size s shows up once per member.
    std::set<IndexSubset> dedup;
    for (int i = 0; i < bases; ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
        for (const auto& clique : per_base[i]) {
            std::vector<int> with_base = clique.indices();
            with_base.push_back(i);
            dedup.insert(IndexSubset(std::move(with_base)));
            if (opts.max_components && dedup.size() > *opts.max_components)
                throw ComponentLimitExceededError(*opts.max_components);
        }
    }
    return PointVariety::from_subsets(q.n(),
                                      std::vector<IndexSubset>(dedup.begin(), dedup.end()));
}

PointVariety brute_force_components(const QuantumMatrix& q) {
    if (q.n() > 16) throw TooLargeError("brute-force enumeration is limited to n <= 16");
    const int k = q.size();  // at most 17
    const std::uint32_t full = (1u << k) - 1;

    // Coherence of every triple, computed once.
    std::vector<char> triple(static_cast<std::size_t>(k) * k * k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                triple[(static_cast<std::size_t>(a) * k + b) * k + c] =
                    coherent(q, a, b, c) ? 1 : 0;

    std::vector<char> rank1(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<int> bits;
        for (int v = 0; v < k; ++v)
            if (mask & (1u << v)) bits.push_back(v);
        bool ok = true;
        for (std::size_t a = 0; a < bits.size() && ok; ++a)
            for (std::size_t b = a + 1; b < bits.size() && ok; ++b)
                for (std::size_t c = b + 1; c < bits.size() && ok; ++c)
                    ok = triple[(static_cast<std::size_t>(bits[a]) * k + bits[b]) * k +
                                bits[c]] != 0;
        rank1[mask] = ok ? 1 : 0;
    }

    std::vector<IndexSubset> maximal;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!rank1[mask]) continue;
        bool extendable = false;
        for (int v = 0; v < k && !extendable; ++v)
            extendable = !(mask & (1u << v)) && rank1[mask | (1u << v)];
        if (extendable) continue;
        std::vector<int> bits;
        for (int v = 0; v < k; ++v)
            if (mask & (1u << v)) bits.push_back(v);
        maximal.emplace_back(std::move(bits));
    }
    return PointVariety::from_subsets(q.n(), std::move(maximal));
}

PointVariety recursive_components(const QuantumMatrix& q, EliminationOrder order) {
    if (q.n() == 0) return single_point_variety();
    const int eliminated = (order == EliminationOrder::highest_first) ? q.n() : 0;

    // Components meeting the open locus of the eliminated coordinate.
    std::vector<IndexSubset> found;
    for (const auto& clique : maximal_cliques(coherence_graph(q, eliminated))) {
        std::vector<int> with_e = clique.indices();
        with_e.push_back(eliminated);
        found.emplace_back(std::move(with_e));
    }

    // Components inside the hyperplane where it vanishes, relabeled back.
    const ReindexedMatrix smaller = delete_index(q, eliminated);
    const PointVariety rest = recursive_components(smaller.matrix, order);
    for (const auto& s : rest.components()) {
        std::vector<int> original;
        original.reserve(s.size());
        for (int idx : s.indices()) original.push_back(smaller.kept[idx]);
        found.emplace_back(std::move(original));
    }
    return PointVariety::from_subsets(q.n(), retain_maximal(std::move(found)));
}

ProjectivePoint::ProjectivePoint(std::vector<std::optional<UnitMonomial>> coords)
    : coords_(std::move(coords)) {
    std::vector<int> engaged;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i]) engaged.push_back(static_cast<int>(i));
    if (engaged.empty())
        throw ZeroScalarError("a projective point needs a non-zero coordinate");
    support_ = IndexSubset(std::move(engaged));
}

bool membership(const QuantumMatrix& q, const ProjectivePoint& p) {
    if (static_cast<int>(p.coords().size()) != q.size())
        throw LengthMismatchError("point has " + std::to_string(p.coords().size()) +
                                  " coordinates, matrix needs " + std::to_string(q.size()));
    return is_rank_one_subset(q, p.support());
}

int dimension(const QuantumMatrix& q) {
    return components(q).dimension();
}

}  // namespace qpoints
