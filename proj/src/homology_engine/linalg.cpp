#include "monores/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace monores::linalg {

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto& c : columns)
        total += c.size();
    return total;
}

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

template <class T>
std::vector<std::vector<std::pair<std::uint32_t, T>>> to_rows(const SparseMatrix& m, auto convert)
{
    std::vector<std::vector<std::pair<std::uint32_t, T>>> rows(m.rows);
    for (std::uint32_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c])
            if (e.value != 0)
                rows[e.row].emplace_back(c, convert(e.value));
    return rows;
}

// Shared driver for sparse elimination. `Ops` supplies the scalar type and
// the row update rule; pivots are chosen Markowitz-style: the active column
// with fewest entries, then its shortest row.
template <class Ops>
std::size_t sparse_eliminate(const SparseMatrix& m, Ops ops)
{
    using T = typename Ops::Scalar;
    using Row = std::vector<std::pair<std::uint32_t, T>>;
    auto rows = to_rows<T>(m, [&](std::int64_t v) { return ops.from_int(v); });
    for (auto& row : rows)
        std::erase_if(row, [&](const auto& e) { return ops.is_zero(e.second); });

    std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            col_rows[c].push_back(r);
    std::vector<bool> row_done(m.rows, false);

    auto col_entries = [&](std::uint32_t c) {
        auto& list = col_rows[c];
        // Lazily drop rows that are finished or no longer hit this column.
        std::erase_if(list, [&](std::uint32_t r) {
            if (row_done[r])
                return true;
            const auto& row = rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), c,
                                       [](const auto& e, std::uint32_t key) { return e.first < key; });
            return it == row.end() || it->first != c;
        });
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        return list.size();
    };

    std::size_t rank = 0;
    std::vector<bool> col_done(m.cols, false);
    while (true) {
        std::uint32_t best_col = 0;
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        for (std::uint32_t c = 0; c < m.cols; ++c) {
            if (col_done[c])
                continue;
            std::size_t count = col_entries(c);
            if (count == 0) {
                col_done[c] = true;
                continue;
            }
            if (count < best_count) {
                best_count = count;
                best_col = c;
                if (count == 1)
                    break;
            }
        }
        if (best_count == std::numeric_limits<std::size_t>::max())
            break;

        const auto& candidates = col_rows[best_col];
        std::uint32_t pivot_row = candidates.front();
        for (std::uint32_t r : candidates)
            if (rows[r].size() < rows[pivot_row].size())
                pivot_row = r;

        const Row pivot = rows[pivot_row];
        const T pivot_value = std::lower_bound(pivot.begin(), pivot.end(), best_col,
                                               [](const auto& e, std::uint32_t key) { return e.first < key; })
                                  ->second;
        row_done[pivot_row] = true;
        col_done[best_col] = true;
        ++rank;

        const std::vector<std::uint32_t> targets = candidates;
        for (std::uint32_t r : targets) {
            if (r == pivot_row)
                continue;
            Row& row = rows[r];
            auto hit = std::lower_bound(row.begin(), row.end(), best_col,
                                        [](const auto& e, std::uint32_t key) { return e.first < key; });
            const auto mult = ops.prepare(pivot_value, hit->second);
            Row merged;
            merged.reserve(row.size() + pivot.size());
            auto a = row.begin();
            auto b = pivot.begin();
            while (a != row.end() || b != pivot.end()) {
                if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
                    T v = ops.scale_target(a->second, mult);
                    if (!ops.is_zero(v))
                        merged.emplace_back(a->first, std::move(v));
                    ++a;
                } else if (a == row.end() || b->first < a->first) {
                    T v = ops.combine(T{}, b->second, mult);
                    if (!ops.is_zero(v)) {
                        merged.emplace_back(b->first, std::move(v));
                        col_rows[b->first].push_back(r);
                    }
                    ++b;
                } else {
                    T v = ops.combine(a->second, b->second, mult);
                    if (!ops.is_zero(v))
                        merged.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            ops.normalize(merged);
            row = std::move(merged);
        }
    }
    return rank;
}

struct ModPOps {
    using Scalar = std::uint64_t;
    std::uint64_t p;

    Scalar from_int(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<Scalar>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    bool is_zero(Scalar v) const { return v == 0; }
    Scalar inverse(Scalar a) const
    {
        // Fermat: a^(p-2)
        Scalar result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }
    // row -= (factor / pivot) * pivot_row
    Scalar prepare(Scalar pivot, Scalar factor) const { return factor * inverse(pivot) % p; }
    Scalar scale_target(Scalar t, Scalar) const { return t; }
    Scalar combine(Scalar t, Scalar s, Scalar q) const { return (t + p - q * s % p) % p; }
    void normalize(std::vector<std::pair<std::uint32_t, Scalar>>&) const {}
};

struct IntegerOps {
    using Scalar = BigInt;

    Scalar from_int(std::int64_t v) const { return Scalar(v); }
    bool is_zero(const Scalar& v) const { return v.is_zero(); }
    // row := pivot * row - factor * pivot_row; fraction-free, no division
    struct Multiplier {
        Scalar pivot;
        Scalar factor;
    };
    Multiplier prepare(const Scalar& pivot, const Scalar& factor) const { return {pivot, factor}; }
    Scalar scale_target(const Scalar& t, const Multiplier& m) const { return m.pivot * t; }
    Scalar combine(const Scalar& t, const Scalar& s, const Multiplier& m) const { return m.pivot * t - m.factor * s; }
    // Divide out the row content to keep entries small.
    void normalize(std::vector<std::pair<std::uint32_t, Scalar>>& row) const
    {
        if (row.empty())
            return;
        Scalar g = 0;
        for (const auto& e : row) {
            g = boost::multiprecision::gcd(g, e.second);
            if (g == 1)
                return;
        }
        if (g < 0)
            g = -g;
        if (g > 1)
            for (auto& e : row)
                e.second /= g;
    }
};

std::vector<std::vector<BigInt>> to_dense(const SparseMatrix& m)
{
    std::vector<std::vector<BigInt>> d(m.rows, std::vector<BigInt>(m.cols));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c])
            d[e.row][c] = e.value;
    return d;
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("rank_mod_p: modulus must be prime");
    return sparse_eliminate(m, ModPOps{p});
}

std::size_t rank_integer_sparse(const SparseMatrix& m)
{
    return sparse_eliminate(m, IntegerOps{});
}

std::size_t rank_bareiss_dense(const SparseMatrix& m)
{
    auto a = to_dense(m);
    const std::size_t rows = m.rows, cols = m.cols;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] /= prev;  // exact: every entry is a minor of the input
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rank_rational(const SparseMatrix& m)
{
    if (m.rows == 0 || m.cols == 0)
        return 0;
    if (m.cols < kDenseColumnLimit && m.rows * m.cols <= kDenseEntryLimit)
        return rank_bareiss_dense(m);
    return rank_integer_sparse(m);
}

std::vector<BigInt> smith_invariants(const SparseMatrix& m)
{
    auto a = to_dense(m);
    const std::size_t rows = m.rows, cols = m.cols;
    std::vector<BigInt> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pr = t, pc = t;
        BigInt best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (!a[i][j].is_zero() && (!found || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero())
                    continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (!a[i][t].is_zero()) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero())
                    continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (!a[t][j].is_zero()) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Enforce d_t | every remaining entry.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols && divisible; ++j)
                    if (BigInt(a[i][j] % a[t][t]) != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] += a[i][k];
                        divisible = false;
                    }
            if (divisible)
                break;
        }
        out.push_back(abs(a[t][t]));
    }
    return out;
}

}  // namespace monores::linalg
