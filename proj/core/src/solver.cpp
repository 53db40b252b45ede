#include <lda/error.hpp>
#include <lda/families.hpp>
#include <lda/solver.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

namespace lda {

namespace
{
    void check_searchable(const Graph & g, const SearchBudget & budget)
    {
        if (g.order() > budget.max_vertices)
            throw Error(ErrorKind::budget, "graph of order " + std::to_string(g.order()) +
                                               " exceeds the search cap of " + std::to_string(budget.max_vertices));
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0)
                throw Error(ErrorKind::domain, "vertex " + std::to_string(v) + " is isolated");
    }

    // Descending degree, ties by id.
    auto search_order(const Graph & g) -> std::vector<int>
    {
        std::vector<int> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    struct Shared {
        std::atomic<bool> stop{false};
        std::atomic<bool> out_of_budget{false};
        std::atomic<std::uint64_t> nodes{0};
        std::mutex mutex;
        std::optional<Labeling> witness;
    };

    // Permutation search for a labeling with at most `limit` distinct weights.
    class Worker {
      public:
        Worker(const Graph & g, const std::vector<int> & order, const std::vector<char> & may_take_one, int limit,
               const LabelingFilter & filter, std::uint64_t max_nodes, Shared & shared)
            : g_(g), n_(g.order()), order_(order), may_take_one_(may_take_one), limit_(limit), filter_(filter),
              max_nodes_(max_nodes), shared_(shared), label_(n_, 0), used_(n_ + 1, 0), weight_(n_, 0), open_(n_),
              count_(static_cast<std::size_t>(n_) * (n_ + 1) / 2 + 1, 0)
        {
            for (int v = 0; v < n_; ++v)
                open_[v] = g.degree(v);
        }

        void run_all() { dfs(0); }

        void run_first(int first_label)
        {
            int v = order_[0];
            if (! admissible(v, first_label))
                return;
            if (apply(v, first_label))
                dfs(1);
            undo(v, first_label);
        }

        void flush() { shared_.nodes += std::exchange(pending_, 0); }

      private:
        auto admissible(int v, int lbl) const -> bool { return lbl != 1 || may_take_one_[v]; }

        auto apply(int v, int lbl) -> bool
        {
            ++pending_;
            if (pending_ >= 4096) {
                if ((shared_.nodes += std::exchange(pending_, 0)) > max_nodes_) {
                    shared_.out_of_budget = true;
                    shared_.stop = true;
                }
            }
            label_[v] = lbl;
            used_[lbl] = 1;
            bool ok = true;
            for (int x : g_.neighbors(v)) {
                weight_[x] += lbl;
                if (--open_[x] == 0) {
                    if (count_[weight_[x]]++ == 0)
                        ++distinct_;
                    for (int y : g_.neighbors(x))
                        if (open_[y] == 0 && weight_[y] == weight_[x])
                            ok = false;
                }
            }
            return ok && distinct_ <= limit_;
        }

        void undo(int v, int lbl)
        {
            for (int x : g_.neighbors(v)) {
                if (open_[x] == 0 && --count_[weight_[x]] == 0)
                    --distinct_;
                ++open_[x];
                weight_[x] -= lbl;
            }
            label_[v] = 0;
            used_[lbl] = 0;
        }

        auto dfs(int depth) -> bool
        {
            if (shared_.stop.load(std::memory_order_relaxed))
                return false;
            if (depth == n_) {
                if (filter_ && ! filter_(label_))
                    return false;
                std::lock_guard lock(shared_.mutex);
                if (! shared_.witness)
                    shared_.witness = label_;
                shared_.stop = true;
                return true;
            }
            int v = order_[depth];
            for (int lbl = 1; lbl <= n_; ++lbl) {
                if (used_[lbl] || ! admissible(v, lbl))
                    continue;
                bool ok = apply(v, lbl);
                if (ok && dfs(depth + 1)) {
                    undo(v, lbl);
                    return true;
                }
                undo(v, lbl);
                if (shared_.stop.load(std::memory_order_relaxed))
                    return false;
            }
            return false;
        }

        const Graph & g_;
        int n_;
        const std::vector<int> & order_;
        const std::vector<char> & may_take_one_;
        int limit_;
        const LabelingFilter & filter_;
        std::uint64_t max_nodes_;
        Shared & shared_;
        std::vector<int> label_;
        std::vector<char> used_;
        std::vector<int> weight_;
        std::vector<int> open_;
        std::vector<int> count_;
        int distinct_ = 0;
        std::uint64_t pending_ = 0;
    };

    auto feasibility(const Graph & g, int k, const SearchBudget & budget, std::uint64_t max_nodes,
                     const LabelingFilter & filter) -> FeasibilityResult
    {
        int n = g.order();
        auto order = search_order(g);
        std::vector<char> may_take_one(n, 1);
        if (budget.symmetry) {
            std::fill(may_take_one.begin(), may_take_one.end(), 0);
            for (const auto & orbit : automorphism_orbits(g))
                may_take_one[orbit.front()] = 1;
        }

        Shared shared;
        int threads = std::max(1, budget.threads);
        if (threads == 1 || n < 2) {
            Worker worker(g, order, may_take_one, k, filter, max_nodes, shared);
            worker.run_all();
            worker.flush();
        }
        else {
            std::atomic<int> next{1};
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    Worker worker(g, order, may_take_one, k, filter, max_nodes, shared);
                    for (int lbl = next++; lbl <= n && ! shared.stop; lbl = next++)
                        worker.run_first(lbl);
                    worker.flush();
                });
            for (auto & th : pool)
                th.join();
        }

        FeasibilityResult result;
        result.nodes_explored = shared.nodes;
        if (shared.witness) {
            auto report = verify_lda(g, *shared.witness);
            if (! report.is_lda || report.color_count > k)
                throw Error(ErrorKind::invalid_labeling, "internal error: search produced an invalid witness");
            result.status = Feasibility::found;
            result.witness = std::move(shared.witness);
        }
        else
            result.status = shared.out_of_budget ? Feasibility::indeterminate : Feasibility::absent;
        return result;
    }

    auto refine_colours(const Graph & g) -> std::vector<int>
    {
        int n = g.order();
        std::vector<int> colour(n);
        for (int v = 0; v < n; ++v)
            colour[v] = g.degree(v);
        for (int round = 0; round < n; ++round) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> s{colour[v]};
                std::vector<int> around;
                for (int w : g.neighbors(v))
                    around.push_back(colour[w]);
                std::sort(around.begin(), around.end());
                s.insert(s.end(), around.begin(), around.end());
                sig[v] = {s, v};
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(n);
            int id = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first)
                    ++id;
                next[sorted[i].second] = id;
            }
            bool same = true;
            for (int v = 0; v < n; ++v)
                for (int w = v + 1; w < n; ++w)
                    if ((colour[v] == colour[w]) != (next[v] == next[w]))
                        same = false;
            colour = next;
            if (same)
                break;
        }
        return colour;
    }

    // Looks for an automorphism sending `from` to `to`.
    auto maps_to(const Graph & g, const std::vector<int> & colour, int from, int to) -> bool
    {
        int n = g.order();
        std::vector<int> order{from};
        std::vector<char> seen(n, 0);
        seen[from] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int w : g.neighbors(order[i]))
                if (! seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        for (int v = 0; v < n; ++v)
            if (! seen[v])
                order.push_back(v);

        std::vector<int> image(n, -1);
        std::vector<char> taken(n, 0);
        auto dfs = [&](auto & self, std::size_t depth) -> bool {
            if (depth == order.size())
                return true;
            int v = order[depth];
            for (int c = 0; c < n; ++c) {
                if (depth == 0 && c != to)
                    continue;
                if (taken[c] || colour[c] != colour[v])
                    continue;
                bool ok = true;
                for (std::size_t i = 0; i < depth && ok; ++i) {
                    int u = order[i];
                    if (g.adjacent(u, v) != g.adjacent(image[u], c))
                        ok = false;
                }
                if (! ok)
                    continue;
                image[v] = c;
                taken[c] = 1;
                if (self(self, depth + 1))
                    return true;
                taken[c] = 0;
                image[v] = -1;
            }
            return false;
        };
        return dfs(dfs, 0);
    }
}

auto budget_from_env() -> SearchBudget
{
    SearchBudget budget;
    if (const char * env = std::getenv("LDA_BUDGET")) {
        char * end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            budget.max_nodes = value;
    }
    return budget;
}

auto automorphism_orbits(const Graph & g) -> std::vector<std::vector<int>>
{
    int n = g.order();
    auto colour = refine_colours(g);
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < n; ++v) {
        if (orbit_of[v] != -1)
            continue;
        int id = static_cast<int>(orbits.size());
        orbits.push_back({v});
        orbit_of[v] = id;
        for (int w = v + 1; w < n; ++w)
            if (orbit_of[w] == -1 && colour[w] == colour[v] && maps_to(g, colour, v, w)) {
                orbit_of[w] = id;
                orbits.back().push_back(w);
            }
    }
    return orbits;
}

auto exists_lda_with_at_most(const Graph & g, int k, const SearchBudget & budget, const LabelingFilter & filter)
    -> FeasibilityResult
{
    check_searchable(g, budget);
    if (k < 1)
        return {Feasibility::absent, std::nullopt, 0};
    return feasibility(g, k, budget, budget.max_nodes, filter);
}

auto chi_ld_exact(const Graph & g, const SearchBudget & budget) -> SolveResult
{
    check_searchable(g, budget);
    SolveResult result;
    int n = g.order();
    int lower = n <= 16 ? chi_exact(g) : 2;
    for (int k = lower; k <= n; ++k) {
        std::uint64_t left = budget.max_nodes > result.nodes_explored ? budget.max_nodes - result.nodes_explored : 0;
        auto attempt = feasibility(g, k, budget, left, {});
        result.nodes_explored += attempt.nodes_explored;
        if (attempt.status == Feasibility::found) {
            result.lower = k;
            result.upper = k;
            result.witness = std::move(attempt.witness);
            result.exhausted = true;
            return result;
        }
        if (attempt.status == Feasibility::indeterminate) {
            result.lower = k;
            return result;
        }
    }
    throw Error(ErrorKind::domain, "graph admits no local distance antimagic labeling");
}

auto chi_exact(const Graph & g) -> int
{
    int n = g.order();
    if (n > 16)
        throw Error(ErrorKind::budget, "chromatic number limited to 16 vertices");
    if (n == 0)
        return 0;
    auto order = search_order(g);
    std::vector<int> colour(n, -1);
    for (int k = 1; k <= n; ++k) {
        auto dfs = [&](auto & self, int depth, int used) -> bool {
            if (depth == n)
                return true;
            int v = order[depth];
            for (int c = 0; c < std::min(k, used + 1); ++c) {
                bool ok = true;
                for (int w : g.neighbors(v))
                    if (colour[w] == c)
                        ok = false;
                if (! ok)
                    continue;
                colour[v] = c;
                if (self(self, depth + 1, std::max(used, c + 1)))
                    return true;
                colour[v] = -1;
            }
            return false;
        };
        std::fill(colour.begin(), colour.end(), -1);
        if (dfs(dfs, 0, 0))
            return k;
    }
    return n;
}

auto parse_table_family(const std::string & name) -> TableFamily
{
    if (name == "cycles" || name == "cycle")
        return TableFamily::cycles;
    if (name == "paths" || name == "path")
        return TableFamily::paths;
    if (name == "complete")
        return TableFamily::complete;
    if (name == "friendship")
        return TableFamily::friendship;
    if (name == "books" || name == "book-c4")
        return TableFamily::books;
    if (name == "wheels" || name == "wheel")
        return TableFamily::wheels;
    throw Error(ErrorKind::invalid_spec, "unknown table family '" + name + "'");
}

auto table_family_name(TableFamily family) -> std::string
{
    switch (family) {
        case TableFamily::cycles: return "cycles";
        case TableFamily::paths: return "paths";
        case TableFamily::complete: return "complete";
        case TableFamily::friendship: return "friendship";
        case TableFamily::books: return "books";
        case TableFamily::wheels: return "wheels";
    }
    return "?";
}

auto table_family_min(TableFamily family) -> int
{
    switch (family) {
        case TableFamily::cycles: return 3;
        case TableFamily::paths: return 2;
        case TableFamily::complete: return 2;
        case TableFamily::friendship: return 1;
        case TableFamily::books: return 1;
        case TableFamily::wheels: return 3;
    }
    return 1;
}

auto known_value(TableFamily family, int n) -> std::optional<KnownValue>
{
    auto exact = [](int v) { return std::optional<KnownValue>(KnownValue{v, v}); };
    auto in = [](int n, std::initializer_list<int> xs) { return std::find(xs.begin(), xs.end(), n) != xs.end(); };
    switch (family) {
        case TableFamily::cycles:
            if (n == 4)
                return exact(2);
            if (in(n, {3, 12}))
                return exact(3);
            if (in(n, {6, 8, 10, 14}))
                return exact(4);
            if (in(n, {5, 7, 9}))
                return exact(5);
            if (in(n, {11, 13}))
                return KnownValue{4, 5};
            if (n >= 15)
                return KnownValue{4, 6};
            return std::nullopt;
        case TableFamily::paths:
            if (in(n, {2, 3}))
                return exact(2);
            if (in(n, {5, 11}))
                return exact(3);
            if (in(n, {4, 6, 7, 8, 9, 10}))
                return exact(4);
            if (n >= 12)
                return n % 2 == 0 ? KnownValue{4, 5} : KnownValue{4, 6};
            return std::nullopt;
        case TableFamily::complete: return n >= 2 ? exact(n) : std::nullopt;
        case TableFamily::friendship: return n >= 1 ? exact(2 * n + 1) : std::nullopt;
        case TableFamily::books: return n >= 1 ? exact(n + 1) : std::nullopt;
        case TableFamily::wheels: return n >= 3 ? std::optional<KnownValue>(KnownValue{3, 7}) : std::nullopt;
    }
    return std::nullopt;
}

auto reproduce_table(TableFamily family, int from, int to, const SearchBudget & budget) -> std::vector<TableRow>
{
    std::vector<TableRow> rows;
    for (int n = std::max(from, table_family_min(family)); n <= to; ++n) {
        FamilySpec spec;
        switch (family) {
            case TableFamily::cycles: spec = CycleSpec{n}; break;
            case TableFamily::paths: spec = PathSpec{n}; break;
            case TableFamily::complete: spec = CompleteSpec{n}; break;
            case TableFamily::friendship: spec = FriendshipSpec{n}; break;
            case TableFamily::books: spec = BookSpec{n}; break;
            case TableFamily::wheels: spec = WheelSpec{n}; break;
        }
        auto g = generate(spec);
        TableRow row;
        row.instance = family_name(spec);
        row.parameter = n;
        row.order = g.order();
        row.known = known_value(family, n);
        row.result = chi_ld_exact(g, budget);
        if (row.result.exhausted && row.known)
            row.agrees = row.known->lower <= *row.result.upper && *row.result.upper <= row.known->upper;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace
{
    auto computed_text(const SolveResult & r) -> std::string
    {
        if (r.exhausted)
            return std::to_string(*r.upper);
        return ">=" + std::to_string(r.lower);
    }

    auto known_text(const std::optional<KnownValue> & k) -> std::string
    {
        if (! k)
            return "-";
        if (k->lower == k->upper)
            return std::to_string(k->lower);
        return std::to_string(k->lower) + ".." + std::to_string(k->upper);
    }

    auto agree_text(const std::optional<bool> & a) -> std::string
    {
        if (! a)
            return "?";
        return *a ? "yes" : "NO";
    }
}

auto format_table(const std::vector<TableRow> & rows) -> std::string
{
    std::vector<std::array<std::string, 5>> cells{{"instance", "order", "chi_ld", "known", "agrees"}};
    for (const auto & r : rows)
        cells.push_back({r.instance, std::to_string(r.order), computed_text(r.result), known_text(r.known),
                         agree_text(r.agrees)});
    std::array<std::size_t, 5> width{};
    for (const auto & c : cells)
        for (std::size_t i = 0; i < 5; ++i)
            width[i] = std::max(width[i], c[i].size());
    std::ostringstream out;
    for (const auto & c : cells) {
        out << std::left << std::setw(static_cast<int>(width[0])) << c[0];
        for (std::size_t i = 1; i < 5; ++i)
            out << "  " << std::right << std::setw(static_cast<int>(width[i])) << c[i];
        out << '\n';
    }
    return out.str();
}

auto format_table_csv(const std::vector<TableRow> & rows) -> std::string
{
    std::ostringstream out;
    out << "instance,parameter,order,lower,upper,exhausted,known_lower,known_upper,agrees\n";
    for (const auto & r : rows) {
        out << r.instance << ',' << r.parameter << ',' << r.order << ',' << r.result.lower << ','
            << (r.result.upper ? std::to_string(*r.result.upper) : "") << ',' << (r.result.exhausted ? "true" : "false")
            << ',' << (r.known ? std::to_string(r.known->lower) : "") << ','
            << (r.known ? std::to_string(r.known->upper) : "") << ',' << agree_text(r.agrees) << '\n';
    }
    return out.str();
}

} // namespace lda
