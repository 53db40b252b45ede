#include <lda/error.hpp>
#include <lda/magic_rectangle.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

namespace lda {

namespace
{
    auto make(int rows, int cols) -> MagicRectangle
    {
        return MagicRectangle{rows, cols, std::vector<int>(static_cast<std::size_t>(rows) * cols, 0)};
    }

    auto cell(MagicRectangle & m, int i, int j) -> int & { return m.entries[static_cast<std::size_t>(i) * m.cols + j]; }

    // Odd order square, Siamese method.
    auto siamese(int n) -> MagicRectangle
    {
        auto m = make(n, n);
        int i = 0, j = n / 2;
        for (int k = 1; k <= n * n; ++k) {
            cell(m, i, j) = k;
            int ni = (i + n - 1) % n, nj = (j + 1) % n;
            if (cell(m, ni, nj) != 0) {
                ni = (i + 1) % n;
                nj = j;
            }
            i = ni;
            j = nj;
        }
        return m;
    }

    // 3 x n, n odd. Entries are 3*beta + alpha + 1 where beta is a fixed
    // Kotzig array over Z_n and alpha picks a permutation of {0,1,2} per
    // column so that every row gets alpha-sum n and no (alpha, beta) pair repeats.
    auto three_rows(int n) -> std::optional<MagicRectangle>
    {
        int h = (n - 1) / 2;
        std::array<std::vector<int>, 3> beta;
        for (auto & b : beta)
            b.resize(n);
        for (int j = 0; j < n; ++j) {
            beta[0][j] = j;
            beta[1][j] = (j + h) % n;
            beta[2][j] = ((-1 - 2 * j) % n + n) % n;
        }
        static constexpr std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

        // used[v] is a bitmask of alpha values already placed on beta value v.
        std::vector<int> used(n, 0), choice(n, 0);
        std::array<int, 3> row_sum{0, 0, 0};
        long long nodes = 0;
        const long long cap = 50'000'000;

        auto dfs = [&](auto & self, int j) -> bool {
            if (++nodes > cap)
                return false;
            if (j == n)
                return row_sum[0] == n && row_sum[1] == n && row_sum[2] == n;
            int left = n - j - 1;
            for (int p = 0; p < 6; ++p) {
                const auto & a = perms[p];
                bool ok = true;
                for (int r = 0; r < 3 && ok; ++r) {
                    int s = row_sum[r] + a[r];
                    if (s > n || s + 2 * left < n)
                        ok = false;
                    if (used[beta[r][j]] & (1 << a[r]))
                        ok = false;
                }
                if (! ok)
                    continue;
                for (int r = 0; r < 3; ++r) {
                    used[beta[r][j]] |= 1 << a[r];
                    row_sum[r] += a[r];
                }
                choice[j] = p;
                if (self(self, j + 1))
                    return true;
                for (int r = 0; r < 3; ++r) {
                    used[beta[r][j]] &= ~(1 << a[r]);
                    row_sum[r] -= a[r];
                }
            }
            return false;
        };
        if (! dfs(dfs, 0))
            return std::nullopt;
        auto m = make(3, n);
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < 3; ++r)
                cell(m, r, j) = 3 * beta[r][j] + perms[choice[j]][r] + 1;
        return m;
    }

    // Splits `pool` into `count` groups of `size` signed values with zero sum.
    auto zero_sum_groups(std::vector<int> pool, int count, int size, unsigned seed)
        -> std::optional<std::vector<std::vector<int>>>
    {
        std::mt19937 rng(seed);
        std::vector<std::vector<int>> groups;
        std::sort(pool.begin(), pool.end(), std::greater<>());
        for (int g = 0; g < count; ++g) {
            int anchor = pool.front();
            std::vector<int> c(pool.begin() + 1, pool.end());
            std::vector<long long> pre{0};
            for (int x : c)
                pre.push_back(pre.back() + x);
            std::unordered_map<int, int> pos;
            for (int i = 0; i < static_cast<int>(c.size()); ++i)
                pos[c[i]] = i;
            bool rotate = seed > 0 && (rng() & 1);
            long long nodes = 0;
            std::vector<int> group{anchor};

            auto fill = [&](auto & self, long long need, int k, int start) -> bool {
                if (++nodes > 20000)
                    return false;
                if (k == 1) {
                    auto it = pos.find(static_cast<int>(std::llabs(need)));
                    if (it != pos.end() && it->second >= start) {
                        group.push_back(static_cast<int>(need));
                        return true;
                    }
                    return false;
                }
                int last = static_cast<int>(c.size()) - k;
                std::vector<int> order;
                for (int idx = start; idx <= last; ++idx)
                    order.push_back(idx);
                if (rotate && ! order.empty())
                    std::rotate(order.begin(), order.begin() + static_cast<long>(rng() % order.size()), order.end());
                for (int idx : order) {
                    if (pre[idx + k] - pre[idx] < std::llabs(need)) {
                        if (rotate)
                            continue;
                        break;
                    }
                    int x = c[idx];
                    for (int sg : (need > 0 ? std::array<int, 2>{1, -1} : std::array<int, 2>{-1, 1})) {
                        long long rest = need - static_cast<long long>(sg) * x;
                        if (std::llabs(rest) > pre[idx + k] - pre[idx + 1])
                            continue;
                        group.push_back(sg * x);
                        if (self(self, rest, k - 1, idx + 1))
                            return true;
                        group.pop_back();
                    }
                }
                return false;
            };
            if (! fill(fill, -static_cast<long long>(anchor), size - 1, 0))
                return std::nullopt;
            for (int v : group)
                pool.erase(std::find(pool.begin(), pool.end(), std::abs(v)));
            groups.push_back(group);
        }
        return groups;
    }

    auto build(int rows, int cols) -> std::optional<MagicRectangle>;

    // Odd rows x cols: a scaled rows x width rectangle on the left, the rest as
    // complementary column pairs whose signed offsets cancel down each column.
    auto composite(int rows, int cols, int width, int scale, unsigned seed) -> std::optional<MagicRectangle>
    {
        int half = (rows * cols - 1) / 2;
        int inner = (rows * width - 1) / 2;
        if (static_cast<long long>(scale) * inner > half)
            return std::nullopt;
        std::vector<char> taken(half + 1, 0);
        for (int e = 1; e <= inner; ++e)
            taken[scale * e] = 1;
        std::vector<int> pool;
        int odd = 0;
        for (int d = 1; d <= half; ++d)
            if (! taken[d]) {
                pool.push_back(d);
                odd += d & 1;
            }
        if (odd % 2 != 0)
            return std::nullopt;
        auto groups = zero_sum_groups(pool, (cols - width) / 2, rows, seed);
        if (! groups)
            return std::nullopt;
        auto left = build(rows, width);
        if (! left)
            return std::nullopt;

        int centre = half + 1;
        int left_centre = inner + 1;
        auto m = make(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < width; ++j)
                cell(m, i, j) = centre + scale * (left->at(i, j) - left_centre);
        for (std::size_t g = 0; g < groups->size(); ++g)
            for (int i = 0; i < rows; ++i) {
                int off = (*groups)[g][i];
                cell(m, i, width + 2 * static_cast<int>(g)) = centre + off;
                cell(m, i, width + 2 * static_cast<int>(g) + 1) = centre - off;
            }
        return m;
    }

    // Swap-based local search; used only when the structured methods fail.
    auto anneal(int rows, int cols, unsigned seed, long long steps) -> std::optional<MagicRectangle>
    {
        std::mt19937 rng(seed);
        int n = rows * cols;
        auto m = make(rows, cols);
        std::iota(m.entries.begin(), m.entries.end(), 1);
        std::shuffle(m.entries.begin(), m.entries.end(), rng);
        long long row_target = static_cast<long long>(cols) * (n + 1) / 2;
        long long col_target = static_cast<long long>(rows) * (n + 1) / 2;
        std::vector<long long> rd(rows, -row_target), cd(cols, -col_target);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                rd[i] += m.at(i, j);
                cd[j] += m.at(i, j);
            }
        long long cost = 0;
        for (auto x : rd)
            cost += std::llabs(x);
        for (auto x : cd)
            cost += std::llabs(x);
        double temp = 2.0;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (long long step = 0; step < steps && cost > 0; ++step) {
            int i1 = static_cast<int>(rng() % rows), j1 = static_cast<int>(rng() % cols);
            int i2 = static_cast<int>(rng() % rows), j2 = static_cast<int>(rng() % cols);
            long long d = cell(m, i2, j2) - cell(m, i1, j1);
            if (d == 0)
                continue;
            long long before = 0, after = 0;
            if (i1 != i2) {
                before += std::llabs(rd[i1]) + std::llabs(rd[i2]);
                after += std::llabs(rd[i1] + d) + std::llabs(rd[i2] - d);
            }
            if (j1 != j2) {
                before += std::llabs(cd[j1]) + std::llabs(cd[j2]);
                after += std::llabs(cd[j1] + d) + std::llabs(cd[j2] - d);
            }
            long long delta = after - before;
            if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / temp)) {
                std::swap(cell(m, i1, j1), cell(m, i2, j2));
                if (i1 != i2) {
                    rd[i1] += d;
                    rd[i2] -= d;
                }
                if (j1 != j2) {
                    cd[j1] += d;
                    cd[j2] -= d;
                }
                cost += delta;
            }
            temp = std::max(0.05, temp * 0.999995);
        }
        if (cost != 0)
            return std::nullopt;
        return m;
    }

    // rows even, cols divisible by 4: entries rows*P + Q + 1 with P a row-wise
    // permutation array over Z_cols and Q a column-wise one over Z_rows.
    auto even_kotzig(int rows, int cols, int gap_at = -1, int gap = 0) -> MagicRectangle
    {
        auto m = make(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                int p = (i % 2 == 0) ? j : cols - 1 - j;
                bool plus = std::min(j, cols - 1 - j) % 2 == 0;
                int q = plus ? i : rows - 1 - i;
                if (gap_at >= 0 && p >= gap_at)
                    p += gap;
                cell(m, i, j) = rows * p + q + 1;
            }
        return m;
    }

    // 2 x cols with cols = 2 mod 4, cols >= 6.
    auto two_rows(int cols) -> MagicRectangle
    {
        // Doubled offsets 2cols+1-2j of column j (1-based) are the odd numbers;
        // pick signs so the top row cancels.
        std::vector<int> sign(cols + 1, 1);
        auto offset_column = [&](int odd) { return (2 * cols + 1 - odd) / 2; };
        for (int odd : {7, 11})
            sign[offset_column(odd)] = -1;
        for (int a = 13; a + 6 <= 2 * cols - 1; a += 8) {
            sign[offset_column(a + 2)] = -1;
            sign[offset_column(a + 4)] = -1;
        }
        auto m = make(2, cols);
        for (int j = 1; j <= cols; ++j) {
            int top = sign[j] > 0 ? 2 * cols + 1 - j : j;
            cell(m, 0, j - 1) = top;
            cell(m, 1, j - 1) = 2 * cols + 1 - top;
        }
        return m;
    }

    auto build_even(int rows, int cols) -> MagicRectangle
    {
        if (cols % 4 == 0)
            return even_kotzig(rows, cols);
        if (rows % 4 == 0)
            return transpose(even_kotzig(cols, rows));
        if (rows == 2)
            return two_rows(cols);
        if (cols == 2)
            return transpose(two_rows(rows));
        // Both 2 mod 4 and at least 6: a centred rows x 2 block beside a
        // Kotzig block whose upper half of P is shifted past it.
        int rest = cols - 2;
        auto right = even_kotzig(rows, rest, rest / 2, 2);
        auto left = transpose(two_rows(rows));
        auto m = make(rows, cols);
        int shift = rows * rest / 2;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < 2; ++j)
                cell(m, i, j) = left.at(i, j) + shift;
            for (int j = 0; j < rest; ++j)
                cell(m, i, j + 2) = right.at(i, j);
        }
        return m;
    }

    auto build_odd(int rows, int cols) -> std::optional<MagicRectangle>
    {
        if (rows == cols)
            return siamese(rows);
        if (rows == 3)
            if (auto m = three_rows(cols))
                return m;
        if (cols == 3)
            if (auto t = three_rows(rows))
                return transpose(*t);
        if (rows > 3 && cols > 3)
            for (unsigned seed = 0; seed < 20; ++seed)
                for (bool flip : {false, true}) {
                    int a = flip ? cols : rows, b = flip ? rows : cols;
                    for (int width = 3; width < b; width += 2)
                        for (int scale = 1; scale <= 5; ++scale)
                            if (auto m = composite(a, b, width, scale, seed))
                                return flip ? transpose(*m) : *m;
                }
        for (unsigned seed = 1; seed <= 8; ++seed)
            if (auto m = anneal(rows, cols, seed, 20'000'000))
                return m;
        return std::nullopt;
    }

    auto build(int rows, int cols) -> std::optional<MagicRectangle>
    {
        if (rows == 1 && cols == 1)
            return MagicRectangle{1, 1, {1}};
        if (rows % 2 == 0)
            return build_even(rows, cols);
        return build_odd(rows, cols);
    }
}

auto is_magic_rectangle(const MagicRectangle & m) -> bool
{
    long long n = static_cast<long long>(m.rows) * m.cols;
    if (m.rows < 1 || m.cols < 1 || static_cast<long long>(m.entries.size()) != n)
        return false;
    std::vector<char> seen(n + 1, 0);
    for (int x : m.entries) {
        if (x < 1 || x > n || seen[x])
            return false;
        seen[x] = 1;
    }
    if ((m.cols * (n + 1)) % 2 != 0 || (m.rows * (n + 1)) % 2 != 0)
        return false;
    long long row_target = m.cols * (n + 1) / 2, col_target = m.rows * (n + 1) / 2;
    for (int i = 0; i < m.rows; ++i) {
        long long s = 0;
        for (int j = 0; j < m.cols; ++j)
            s += m.at(i, j);
        if (s != row_target)
            return false;
    }
    for (int j = 0; j < m.cols; ++j) {
        long long s = 0;
        for (int i = 0; i < m.rows; ++i)
            s += m.at(i, j);
        if (s != col_target)
            return false;
    }
    return true;
}

auto transpose(const MagicRectangle & m) -> MagicRectangle
{
    auto t = make(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            cell(t, j, i) = m.at(i, j);
    return t;
}

auto magic_rectangle(int rows, int cols) -> MagicRectangle
{
    auto dims = std::to_string(rows) + "x" + std::to_string(cols);
    if (rows < 1 || cols < 1)
        throw Error(ErrorKind::invalid_spec, "magic rectangle dimensions must be positive");
    if ((rows + cols) % 2 != 0)
        throw Error(ErrorKind::domain, "no " + dims + " magic rectangle: dimensions of opposite parity");
    if ((rows == 1) != (cols == 1))
        throw Error(ErrorKind::domain, "no " + dims + " magic rectangle: a single row or column cannot balance");
    if (rows == 2 && cols == 2)
        throw Error(ErrorKind::domain, "no 2x2 magic rectangle exists");
    auto m = build(rows, cols);
    if (! m)
        throw Error(ErrorKind::unsupported, "construction of a " + dims + " magic rectangle failed");
    if (! is_magic_rectangle(*m))
        throw Error(ErrorKind::unsupported, "internal error: " + dims + " arrangement is not magic");
    return *m;
}

} // namespace lda
