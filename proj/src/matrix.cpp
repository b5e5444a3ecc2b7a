#include "qpoints/matrix.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "qpoints/errors.hpp"

namespace qpoints {

IndexSubset::IndexSubset(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front() < 0)
        throw IndexOutOfRangeError("negative index in subset");
}

bool IndexSubset::contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool IndexSubset::contains_all(const IndexSubset& other) const {
    return std::includes(indices_.begin(), indices_.end(),
                         other.indices_.begin(), other.indices_.end());
}

QuantumMatrix::QuantumMatrix(int n) : n_(n) {
    if (n < 0) throw IndexOutOfRangeError("matrix size must be positive");
    entries_.resize(static_cast<std::size_t>(n + 1) * (n + 1));
}

QuantumMatrix QuantumMatrix::all_ones(int n) {
    return QuantumMatrix(n);
}

QuantumMatrix QuantumMatrix::from_upper_triangle(int n, const std::vector<UnitMonomial>& upper) {
    QuantumMatrix q(n);
    const auto expected = static_cast<std::size_t>(n) * (n + 1) / 2;
    if (upper.size() != expected)
        throw LengthMismatchError("expected " + std::to_string(expected) +
                                  " upper-triangle entries, got " + std::to_string(upper.size()));
    std::size_t k = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j, ++k) {
            q.entries_[static_cast<std::size_t>(i) * (n + 1) + j] = upper[k];
            q.entries_[static_cast<std::size_t>(j) * (n + 1) + i] = inv(upper[k]);
        }
    }
    return q;
}

void QuantumMatrix::check_index(int i) const {
    if (i < 0 || i > n_)
        throw IndexOutOfRangeError("index " + std::to_string(i) + " out of range 0.." +
                                   std::to_string(n_));
}

const UnitMonomial& QuantumMatrix::at(int i, int j) const {
    check_index(i);
    check_index(j);
    return entries_[static_cast<std::size_t>(i) * (n_ + 1) + j];
}

bool QuantumMatrix::is_valid() const {
    for (int i = 0; i <= n_; ++i) {
        if (!is_one(at(i, i))) return false;
        for (int j = i + 1; j <= n_; ++j) {
            if (at(j, i) != inv(at(i, j))) return false;
        }
    }
    return true;
}

namespace {

std::vector<int> indices_without(int n, int i) {
    std::vector<int> kept;
    kept.reserve(n);
    for (int k = 0; k <= n; ++k)
        if (k != i) kept.push_back(k);
    return kept;
}

}  // namespace

ReindexedMatrix delete_index(const QuantumMatrix& q, int i) {
    if (q.n() == 0) throw CannotDeleteLastError();
    if (i < 0 || i > q.n()) throw IndexOutOfRangeError();
    auto kept = indices_without(q.n(), i);
    std::vector<UnitMonomial> upper;
    upper.reserve(static_cast<std::size_t>(q.n()) * (q.n() - 1) / 2);
    for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = a + 1; b < kept.size(); ++b)
            upper.push_back(q.at(kept[a], kept[b]));
    return {QuantumMatrix::from_upper_triangle(q.n() - 1, upper), std::move(kept)};
}

ReindexedMatrix localize(const QuantumMatrix& q, int i) {
    if (q.n() == 0) throw CannotDeleteLastError();
    if (i < 0 || i > q.n()) throw IndexOutOfRangeError();
    auto kept = indices_without(q.n(), i);
    std::vector<UnitMonomial> upper;
    upper.reserve(static_cast<std::size_t>(q.n()) * (q.n() - 1) / 2);
    for (std::size_t a = 0; a < kept.size(); ++a) {
        for (std::size_t b = a + 1; b < kept.size(); ++b) {
            const int j = kept[a], l = kept[b];
            upper.push_back(q.at(i, j) * q.at(j, l) * inv(q.at(i, l)));
        }
    }
    return {QuantumMatrix::from_upper_triangle(q.n() - 1, upper), std::move(kept)};
}

bool coherent(const QuantumMatrix& q, int i, int j, int l) {
    if (i == j || i == l || j == l) throw IndicesNotDistinctError();
    return is_one(q.at(i, j) * q.at(j, l) * inv(q.at(i, l)));
}

bool is_rank_one_subset(const QuantumMatrix& q, const IndexSubset& s) {
    if (s.empty()) throw EmptySubsetError();
    if (s.max() > q.n()) throw IndexOutOfRangeError();
    const auto& idx = s.indices();
    if (idx.size() <= 2) return true;
    const int base = idx.front();
    for (std::size_t a = 1; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (!coherent(q, base, idx[a], idx[b])) return false;
    return true;
}

bool is_rank_one_subset_all_triples(const QuantumMatrix& q, const IndexSubset& s) {
    if (s.empty()) throw EmptySubsetError();
    if (s.max() > q.n()) throw IndexOutOfRangeError();
    const auto& idx = s.indices();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            for (std::size_t c = b + 1; c < idx.size(); ++c)
                if (!coherent(q, idx[a], idx[b], idx[c])) return false;
    return true;
}

bool is_rank_one(const QuantumMatrix& q) {
    std::vector<int> all(static_cast<std::size_t>(q.n()) + 1);
    for (int i = 0; i <= q.n(); ++i) all[i] = i;
    return is_rank_one_subset(q, IndexSubset(std::move(all)));
}

QuantumMatrix rank_one_from_weights(const std::vector<UnitMonomial>& weights) {
    if (weights.empty()) throw LengthMismatchError("weight list must be non-empty");
    const int n = static_cast<int>(weights.size()) - 1;
    std::vector<UnitMonomial> upper;
    upper.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            upper.push_back(weights[i] * inv(weights[j]));
    return QuantumMatrix::from_upper_triangle(n, upper);
}

QuantumMatrix gauge_twist(const QuantumMatrix& q, const std::vector<UnitMonomial>& weights) {
    if (static_cast<int>(weights.size()) != q.size())
        throw LengthMismatchError("need exactly " + std::to_string(q.size()) + " weights");
    std::vector<UnitMonomial> upper;
    upper.reserve(static_cast<std::size_t>(q.n()) * (q.n() + 1) / 2);
    for (int i = 0; i <= q.n(); ++i)
        for (int j = i + 1; j <= q.n(); ++j)
            upper.push_back(weights[i] * inv(weights[j]) * q.at(i, j));
    return QuantumMatrix::from_upper_triangle(q.n(), upper);
}

QuantumMatrix sign_matrix(int n) {
    const auto minus_one = UnitMonomial::root_of_unity(1, 2);
    std::vector<UnitMonomial> upper(static_cast<std::size_t>(n) * (n + 1) / 2, minus_one);
    return QuantumMatrix::from_upper_triangle(n, upper);
}

QuantumMatrix random_matrix(int n, std::uint64_t seed, const GeneratorPool& pool) {
    if (pool.max_phase_denominator < 1)
        throw Error("max_phase_denominator must be at least 1");
    std::mt19937_64 rng(seed);
    // Raw modulo draws keep the stream identical across standard libraries.
    auto draw = [&rng](std::uint64_t bound) { return bound ? rng() % bound : 0; };

    std::vector<UnitMonomial> upper;
    upper.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (pool.fresh_symbol_per_entry) {
                upper.push_back(UnitMonomial::symbol(
                    "e" + std::to_string(i) + "_" + std::to_string(j)));
                continue;
            }
            const auto d = 1 + draw(static_cast<std::uint64_t>(pool.max_phase_denominator));
            const auto k = draw(d);
            UnitMonomial entry = UnitMonomial::root_of_unity(
                static_cast<std::int64_t>(k), static_cast<std::int64_t>(d));
            for (int t = 0; t < pool.symbol_count; ++t) {
                const auto e = static_cast<std::int64_t>(draw(5)) - 2;  // -2..2
                if (e != 0)
                    entry = entry * pow(UnitMonomial::symbol("s" + std::to_string(t)), e);
            }
            upper.push_back(std::move(entry));
        }
    }
    return QuantumMatrix::from_upper_triangle(n, upper);
}

}  // namespace qpoints
