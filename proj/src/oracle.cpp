#include "torcat/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "torcat/tor.hpp"

namespace torcat {

namespace {

int mod_pow(std::int64_t base, int exp, int p) {
    std::int64_t r = 1 % p;
    base %= p;
    for (int i = 0; i < exp; ++i) r = r * base % p;
    return static_cast<int>(r);
}

int mod_inverse(int a, int p) { return mod_pow(a, p - 2, p); }

}  // namespace

std::int64_t rank_mod_p(SparseMatrix M, int p) {
    if (p < 2 || !is_prime(p)) throw InvalidInput("rank_mod_p needs a prime modulus");
    for (auto& row : M.row_entries) std::sort(row.begin(), row.end());

    std::vector<int> col_count(static_cast<std::size_t>(M.cols), 0);
    std::vector<bool> alive(M.row_entries.size(), true);
    for (const auto& row : M.row_entries)
        for (const auto& [c, v] : row) ++col_count[static_cast<std::size_t>(c)];

    auto find_in_row = [](const std::vector<std::pair<std::int32_t, std::int32_t>>& row,
                          std::int32_t col) {
        auto it = std::lower_bound(row.begin(), row.end(),
                                   std::make_pair(col, std::int32_t{0}));
        return (it != row.end() && it->first == col) ? it : row.end();
    };

    std::int64_t rank = 0;
    for (;;) {
        // pivot row: shortest alive row; pivot column: sparsest in that row
        std::size_t pivot_row = M.row_entries.size();
        for (std::size_t r = 0; r < M.row_entries.size(); ++r) {
            if (!alive[r] || M.row_entries[r].empty()) continue;
            if (pivot_row == M.row_entries.size() ||
                M.row_entries[r].size() < M.row_entries[pivot_row].size())
                pivot_row = r;
        }
        if (pivot_row == M.row_entries.size()) break;

        const auto& prow = M.row_entries[pivot_row];
        std::int32_t pivot_col = prow.front().first;
        for (const auto& [c, v] : prow)
            if (col_count[static_cast<std::size_t>(c)] <
                col_count[static_cast<std::size_t>(pivot_col)])
                pivot_col = c;
        const std::int32_t pivot_val = find_in_row(prow, pivot_col)->second;
        const int inv = mod_inverse(pivot_val, p);
        ++rank;

        for (std::size_t r = 0; r < M.row_entries.size(); ++r) {
            if (!alive[r] || r == pivot_row) continue;
            auto it = find_in_row(M.row_entries[r], pivot_col);
            if (it == M.row_entries[r].end()) continue;
            // row r -= (row_r[pivot_col] / pivot_val) * pivot_row
            const std::int64_t factor = static_cast<std::int64_t>(it->second) * inv % p;
            std::vector<std::pair<std::int32_t, std::int32_t>> merged;
            merged.reserve(M.row_entries[r].size() + prow.size());
            auto a = M.row_entries[r].begin(), a_end = M.row_entries[r].end();
            auto b = prow.begin(), b_end = prow.end();
            while (a != a_end || b != b_end) {
                if (b == b_end || (a != a_end && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == a_end || b->first < a->first) {
                    const int v = static_cast<int>((p - factor * b->second % p) % p);
                    if (v != 0) {
                        merged.emplace_back(b->first, v);
                        ++col_count[static_cast<std::size_t>(b->first)];
                    }
                    ++b;
                } else {
                    const int v =
                        static_cast<int>(((a->second - factor * b->second) % p + p) % p);
                    if (v != 0)
                        merged.emplace_back(a->first, static_cast<std::int32_t>(v));
                    else
                        --col_count[static_cast<std::size_t>(a->first)];
                    ++a, ++b;
                }
            }
            M.row_entries[r] = std::move(merged);
        }
        for (const auto& [c, v] : prow) --col_count[static_cast<std::size_t>(c)];
        alive[pivot_row] = false;
    }
    return rank;
}

std::string AlgebraPresentation::monomial_name(std::size_t i) const {
    const auto& m = basis[i];
    std::string out;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (m.exponents[f] == 0) continue;
        if (!out.empty()) out += "*";
        out += factors[f].name;
        if (m.exponents[f] > 1) out += "^" + std::to_string(m.exponents[f]);
    }
    return out.empty() ? "1" : out;
}

AlgebraPresentation materialize(const TensorAlgebra& A, int cap) {
    if (A.characteristic == 0)
        throw InvalidInput("the oracle works over a finite field; characteristic 0 rejected");
    if (cap > A.cap)
        throw InvalidInput("materialization cap exceeds the algebra's cap");
    const int p = A.characteristic;

    AlgebraPresentation P;
    P.p = p;
    P.cap = cap;

    for (const auto& b : A.blocks) {
        if (b.generator.degree < 1)
            throw InvalidInput("cannot materialize generator of degree < 1");
        if (b.generator.degree > cap) continue;
        switch (b.kind) {
            case BlockAlgebra::Kind::Polynomial:
                P.factors.push_back({b.generator.name(), b.generator.degree, 0});
                break;
            case BlockAlgebra::Kind::Exterior:
                P.factors.push_back({b.generator.name(), b.generator.degree, 2});
                break;
            case BlockAlgebra::Kind::Truncated:
                P.factors.push_back({b.generator.name(), b.generator.degree, b.truncation});
                break;
            case BlockAlgebra::Kind::DividedPower:
                // present via the height-p splitting
                for (const auto& piece : gamma_split(b.generator, p, cap).blocks)
                    P.factors.push_back({piece.generator.name(), piece.generator.degree, p});
                break;
        }
    }

    // enumerate monomials of total degree <= cap
    std::vector<int> expo(P.factors.size(), 0);
    auto enumerate = [&](auto&& self, std::size_t f, int degree) -> void {
        if (f == P.factors.size()) {
            P.basis.push_back({expo, degree});
            return;
        }
        const auto& fac = P.factors[f];
        for (int e = 0;; ++e) {
            if (fac.bound > 0 && e >= fac.bound) break;
            const std::int64_t d = degree + static_cast<std::int64_t>(e) * fac.degree;
            if (d > cap) break;
            expo[f] = e;
            self(self, f + 1, static_cast<int>(d));
        }
        expo[f] = 0;
    };
    enumerate(enumerate, 0, 0);
    std::sort(P.basis.begin(), P.basis.end(), [](const auto& a, const auto& b) {
        return std::tie(a.degree, a.exponents) < std::tie(b.degree, b.exponents);
    });

    constexpr std::size_t kBasisLimit = 4096;
    if (P.basis.size() > kBasisLimit)
        throw MemoryGuardError("presentation has " + std::to_string(P.basis.size()) +
                               " monomials (limit " + std::to_string(kBasisLimit) +
                               "); raise cap limit or shrink input");

    std::map<std::vector<int>, std::int32_t> index_of;
    for (std::size_t i = 0; i < P.basis.size(); ++i) {
        index_of[P.basis[i].exponents] = static_cast<std::int32_t>(i);
        if (P.basis[i].degree > 0) P.aug_ideal.push_back(i);
    }

    const std::size_t n = P.basis.size();
    P.mult.assign(n * n, {});
    std::vector<int> sum(P.factors.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto& out = P.mult[i * n + j];
            const auto& u = P.basis[i];
            const auto& v = P.basis[j];
            if (u.degree + v.degree > cap) {
                out.index = -2;
                continue;
            }
            bool zero = false;
            for (std::size_t f = 0; f < P.factors.size(); ++f) {
                sum[f] = u.exponents[f] + v.exponents[f];
                if (P.factors[f].bound > 0 && sum[f] >= P.factors[f].bound) {
                    zero = true;
                    break;
                }
            }
            if (zero) {
                out.index = -1;
                continue;
            }
            // Koszul sign: move each odd chunk of v past the later odd chunks of u
            int swaps = 0;
            int odd_tail = 0;  // odd-degree chunks of u strictly after factor f
            for (std::size_t f = P.factors.size(); f-- > 0;) {
                const bool v_odd =
                    (static_cast<std::int64_t>(v.exponents[f]) * P.factors[f].degree) % 2 != 0;
                if (v_odd) swaps += odd_tail;
                const bool u_odd =
                    (static_cast<std::int64_t>(u.exponents[f]) * P.factors[f].degree) % 2 != 0;
                if (u_odd) ++odd_tail;
            }
            out.index = index_of.at(sum);
            out.coeff = (swaps % 2 == 0) ? 1 : p - 1;
        }
    }
    return P;
}

namespace {

// chain tuples of augmentation-ideal basis indices, grouped by (s, internal)
using Chain = std::vector<std::int32_t>;

struct ChainBucket {
    std::vector<Chain> chains;
    std::map<Chain, std::int32_t> index;
};

}  // namespace

RankTable bar_homology(const AlgebraPresentation& P, int total_cap, const BarOptions& opts) {
    if (total_cap < 0) throw InvalidInput("total_cap must be nonnegative");
    if (total_cap > P.cap)
        throw InvalidInput("bar total_cap exceeds the presentation's degree cap");

    RankTable table;
    table.total_cap = total_cap;
    table.by_total.assign(static_cast<std::size_t>(total_cap) + 1, 0);
    table.by_total[0] = 1;  // B_0 = F_p, never hit by the differential
    table.by_bidegree.push_back({0, 0, 1});

    // count chains per (s, t) first so the guard can refuse before enumerating
    std::vector<std::int64_t> aug_by_degree(static_cast<std::size_t>(total_cap) + 1, 0);
    for (auto i : P.aug_ideal)
        if (P.basis[i].degree <= total_cap) ++aug_by_degree[P.basis[i].degree];

    const int deep = total_cap + 1;  // need d_{s+1} whose source has total s+1+t
    std::vector<std::vector<std::int64_t>> count(
        static_cast<std::size_t>(deep) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(total_cap) + 1, 0));
    count[0][0] = 1;
    for (int s = 1; s <= deep; ++s)
        for (int t = s; t <= total_cap; ++t)
            for (int d = 1; d <= t; ++d)
                if (aug_by_degree[d] != 0 && count[s - 1][t - d] != 0)
                    count[s][t] += aug_by_degree[d] * count[s - 1][t - d];
    for (int s = 1; s <= deep; ++s)
        for (int t = 0; t <= total_cap; ++t) {
            if (s + t > total_cap + 1) continue;
            const std::int64_t est = count[s][t] * std::max(0, s - 1);
            if (est > opts.nnz_limit)
                throw MemoryGuardError(
                    "bar differential at homological degree " + std::to_string(s) +
                    ", internal degree " + std::to_string(t) + " has an estimated " +
                    std::to_string(est) + " nonzero entries (limit " +
                    std::to_string(opts.nnz_limit) + "); raise cap limit or shrink input");
        }

    // per internal degree t the complex ... -> B_{s,t} -> B_{s-1,t} -> ... is
    // self-contained; homology at (s,t) with s+t <= total_cap needs d_{s+1,t}
    for (int t = 1; t <= total_cap; ++t) {
        const int s_lim = std::min(t, total_cap + 1 - t);
        if (s_lim < 1) continue;

        std::vector<ChainBucket> buckets(static_cast<std::size_t>(s_lim) + 1);
        Chain chain;
        auto enumerate = [&](auto&& self, int degree_left, int slots_left) -> void {
            if (degree_left == 0) {
                auto& bucket = buckets[chain.size()];
                bucket.index.emplace(chain, static_cast<std::int32_t>(bucket.chains.size()));
                bucket.chains.push_back(chain);
                return;
            }
            if (slots_left == 0) return;
            for (auto i : P.aug_ideal) {
                const int d = P.basis[i].degree;
                if (d > degree_left) continue;
                chain.push_back(static_cast<std::int32_t>(i));
                self(self, degree_left - d, slots_left - 1);
                chain.pop_back();
            }
        };
        enumerate(enumerate, t, s_lim);

        // rank of d_s for every s in 1..s_lim (d_1 = 0: no adjacent pair)
        std::vector<std::int64_t> rank_d(static_cast<std::size_t>(s_lim) + 2, 0);
        for (int s = 2; s <= s_lim; ++s) {
            const auto& cols = buckets[static_cast<std::size_t>(s)];
            const auto& rows = buckets[static_cast<std::size_t>(s - 1)];
            if (cols.chains.empty() || rows.chains.empty()) continue;
            SparseMatrix M;
            M.rows = static_cast<int>(rows.chains.size());
            M.cols = static_cast<int>(cols.chains.size());
            M.row_entries.resize(rows.chains.size());
            for (std::size_t c = 0; c < cols.chains.size(); ++c) {
                const Chain& ch = cols.chains[c];
                std::map<std::int32_t, std::int64_t> entries;
                for (int i = 0; i + 1 < s; ++i) {
                    const auto& prod =
                        P.product(static_cast<std::size_t>(ch[i]),
                                  static_cast<std::size_t>(ch[i + 1]));
                    if (prod.index < 0) continue;
                    Chain merged;
                    merged.reserve(ch.size() - 1);
                    merged.insert(merged.end(), ch.begin(), ch.begin() + i);
                    merged.push_back(prod.index);
                    merged.insert(merged.end(), ch.begin() + i + 2, ch.end());
                    const auto row = rows.index.at(merged);
                    const std::int64_t sign = (i % 2 == 0) ? P.p - 1 : 1;
                    entries[row] = (entries[row] + sign * prod.coeff) % P.p;
                }
                for (const auto& [row, val] : entries)
                    if (val % P.p != 0)
                        M.row_entries[static_cast<std::size_t>(row)].emplace_back(
                            static_cast<std::int32_t>(c),
                            static_cast<std::int32_t>(val % P.p));
            }
            rank_d[static_cast<std::size_t>(s)] = rank_mod_p(std::move(M), P.p);
        }

        for (int s = 1; s <= s_lim && s + t <= total_cap; ++s) {
            const std::int64_t dim =
                static_cast<std::int64_t>(buckets[static_cast<std::size_t>(s)].chains.size());
            const std::int64_t h = dim - rank_d[static_cast<std::size_t>(s)] -
                                   rank_d[static_cast<std::size_t>(s) + 1];
            if (h < 0)
                throw std::logic_error("negative homology rank; rank computation is broken");
            if (h > 0) {
                table.by_total[static_cast<std::size_t>(s + t)] += h;
                table.by_bidegree.push_back({s, t, h});
            }
        }
    }
    std::sort(table.by_bidegree.begin(), table.by_bidegree.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.s, a.internal) < std::tie(b.s, b.internal);
              });
    return table;
}

RankTable hochschild_small_complex(int p, int m, int x_deg, HochschildCoefficients coeffs,
                                   int cap) {
    if (!is_prime(p)) throw InvalidInput("p must be prime");
    if (m < 2) throw InvalidInput("truncation height must be >= 2");
    if (x_deg < 1 || x_deg % 2 != 0) throw InvalidInput("|x| must be even and positive");
    if (cap < 0) throw InvalidInput("cap must be nonnegative");

    const bool full = coeffs == HochschildCoefficients::Full;
    const int width = full ? m : 1;  // coefficients F_p[x]/x^m vs F_p

    // cell (s, j): x^j in homological spot s; total degree s + shift(s) + j|x|
    auto shift = [&](int s) {
        return (s / 2) * m * x_deg + (s % 2 == 0 ? 0 : x_deg);
    };
    auto total_of = [&](int s, int j) {
        return static_cast<std::int64_t>(s) + shift(s) + static_cast<std::int64_t>(j) * x_deg;
    };

    struct Cell {
        int s, j;
    };
    // per total degree, the cells of that degree (s is strictly increasing in
    // total for fixed j, so this is finite)
    std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(cap) + 2);
    for (int s = 0; total_of(s, 0) <= cap + 1; ++s)
        for (int j = 0; j < width; ++j)
            if (total_of(s, j) <= cap + 1)
                cells[static_cast<std::size_t>(total_of(s, j))].push_back({s, j});

    // d: cell (s, j) -> (s-1, j+m-1) times m, for even s >= 2 (full); else 0
    auto build_matrix = [&](int total) {
        SparseMatrix M;
        const auto& src = cells[static_cast<std::size_t>(total)];
        if (total == 0) return M;
        const auto& dst = cells[static_cast<std::size_t>(total) - 1];
        M.rows = static_cast<int>(dst.size());
        M.cols = static_cast<int>(src.size());
        M.row_entries.resize(dst.size());
        if (!full) return M;
        for (std::size_t c = 0; c < src.size(); ++c) {
            const auto [s, j] = src[c];
            if (s < 2 || s % 2 != 0) continue;
            const int jt = j + m - 1;
            if (jt >= m) continue;
            const int val = m % p;
            if (val == 0) continue;
            for (std::size_t r = 0; r < dst.size(); ++r)
                if (dst[r].s == s - 1 && dst[r].j == jt)
                    M.row_entries[r].emplace_back(static_cast<std::int32_t>(c), val);
        }
        return M;
    };

    RankTable table;
    table.total_cap = cap;
    table.by_total.assign(static_cast<std::size_t>(cap) + 1, 0);
    std::vector<std::int64_t> rank_at(static_cast<std::size_t>(cap) + 2, 0);
    for (int total = 1; total <= cap + 1; ++total)
        rank_at[static_cast<std::size_t>(total)] = rank_mod_p(build_matrix(total), p);

    // the maps are diagonal across cells of one total degree, so per-cell
    // homology splits off by homological spot
    for (int total = 0; total <= cap; ++total) {
        std::map<int, std::int64_t> per_s;
        for (const auto& cell : cells[static_cast<std::size_t>(total)]) per_s[cell.s] += 1;
        std::int64_t h_total = static_cast<std::int64_t>(
                                   cells[static_cast<std::size_t>(total)].size()) -
                               rank_at[static_cast<std::size_t>(total)] -
                               rank_at[static_cast<std::size_t>(total) + 1];
        table.by_total[static_cast<std::size_t>(total)] = h_total;
        // bidegree bookkeeping: a cell dies iff it maps out or is hit; both
        // are per-cell events for this diagonal complex
        for (const auto& cell : cells[static_cast<std::size_t>(total)]) {
            bool maps_out = full && cell.s >= 2 && cell.s % 2 == 0 && cell.j == 0 && m % p != 0;
            bool is_hit = full && cell.j == m - 1 && cell.s % 2 == 1 && m % p != 0;
            if (!maps_out && !is_hit)
                table.by_bidegree.push_back({cell.s, total - cell.s, 1});
        }
    }
    std::sort(table.by_bidegree.begin(), table.by_bidegree.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.s, a.internal) < std::tie(b.s, b.internal);
              });
    return table;
}

RankTable tor_over_zpm(int p, int m, int hom_cap) {
    if (!is_prime(p)) throw InvalidInput("p must be prime");
    if (m < 2)
        throw InvalidInput(
            "m = 1 rejected: the periodic resolution degenerates (Tor over Z/p is F_p "
            "concentrated in degree 0)");
    if (hom_cap < 0) throw InvalidInput("hom_cap must be nonnegative");

    // free resolution ... -> R -> R -> R of Z/p over R = Z/p^m with maps
    // alternately p and p^{m-1}; tensor with Z/p and read off the homology
    auto map_value = [&](int s) {  // d_s: spot s -> spot s-1
        return s % 2 == 1 ? p % p : mod_pow(p, m - 1, p);
    };
    RankTable table;
    table.total_cap = hom_cap;
    table.by_total.assign(static_cast<std::size_t>(hom_cap) + 1, 0);
    for (int s = 0; s <= hom_cap; ++s) {
        SparseMatrix out_map, in_map;
        out_map.rows = out_map.cols = 1;
        out_map.row_entries.resize(1);
        if (s > 0 && map_value(s) != 0) out_map.row_entries[0].emplace_back(0, map_value(s));
        in_map.rows = in_map.cols = 1;
        in_map.row_entries.resize(1);
        if (map_value(s + 1) != 0) in_map.row_entries[0].emplace_back(0, map_value(s + 1));
        const std::int64_t h =
            1 - (s > 0 ? rank_mod_p(out_map, p) : 0) - rank_mod_p(in_map, p);
        table.by_total[static_cast<std::size_t>(s)] = h;
        if (h > 0) table.by_bidegree.push_back({s, 0, h});
    }
    return table;
}

}  // namespace torcat
