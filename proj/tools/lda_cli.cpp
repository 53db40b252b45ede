#include <lda/coloring.hpp>
#include <lda/constructions.hpp>
#include <lda/error.hpp>
#include <lda/families.hpp>
#include <lda/io.hpp>
#include <lda/solver.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

namespace {

constexpr int exit_usage = 64;

struct Options {
    std::string family;
    std::string kind;
    std::string in = "-";
    std::string with;
    std::string out = "-";
    int n = 0;
    int t = 0;
    int m = 0;
    int p = 0;
    int c = 0;
    int d = 0;
    int from = 0;
    int to = 0;
    std::vector<int> parts;
    std::uint64_t budget = 0;
    int threads = 1;
    int max_vertices = 11;
    std::uint64_t seed = 1;
    bool symmetry = false;
    bool verify = false;
    bool interior = false;
    bool csv = false;
};

auto read_text(const std::string & path) -> std::string
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream file(path);
    if (! file)
        throw lda::Error(lda::ErrorKind::parse, "cannot open " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_text(const std::string & path, const std::string & text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (! file)
        throw lda::Error(lda::ErrorKind::parse, "cannot write " + path);
    file << text;
}

auto search_budget(const Options & o) -> lda::SearchBudget
{
    auto budget = lda::budget_from_env();
    if (o.budget > 0)
        budget.max_nodes = o.budget;
    budget.threads = o.threads;
    budget.max_vertices = o.max_vertices;
    budget.symmetry = o.symmetry;
    return budget;
}

auto need(int value, const char * flag) -> int
{
    if (value <= 0)
        throw lda::Error(lda::ErrorKind::invalid_spec, std::string("missing or non-positive ") + flag);
    return value;
}

// Prufer decoding of a seeded random sequence.
auto random_tree(int n, std::uint64_t seed) -> lda::Graph
{
    if (n < 2)
        throw lda::Error(lda::ErrorKind::invalid_spec, "random tree needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (auto & x : seq)
        x = pick(rng);
    std::vector<int> deg(n, 1);
    for (int x : seq)
        ++deg[x];
    std::vector<lda::Edge> edges;
    for (int x : seq)
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[leaf] == 1) {
                edges.push_back({leaf, x});
                --deg[leaf];
                --deg[x];
                break;
            }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            last.push_back(v);
    edges.push_back({last[0], last[1]});
    return lda::tree_graph(n, std::move(edges));
}

auto generate(const Options & o) -> lda::Graph
{
    const auto & f = o.family;
    if (f == "path")
        return lda::path_graph(need(o.n, "--n"));
    if (f == "cycle")
        return lda::cycle_graph(need(o.n, "--n"));
    if (f == "complete")
        return lda::complete_graph(need(o.n, "--n"));
    if (f == "multipartite")
        return lda::complete_multipartite(o.parts);
    if (f == "star")
        return lda::star_graph(need(o.n, "--n"));
    if (f == "bistar")
        return lda::bistar_graph(need(o.c, "--c"), need(o.d, "--d"));
    if (f == "friendship")
        return lda::friendship_graph(need(o.t ? o.t : o.n, "--t"));
    if (f == "wheel")
        return lda::wheel_graph(need(o.n, "--n"));
    if (f == "book")
        return lda::book_c4(need(o.t, "--t"));
    if (f == "empty")
        return lda::empty_graph(need(o.n, "--n"));
    if (f == "tree")
        return random_tree(need(o.n, "--n"), o.seed);
    throw lda::Error(lda::ErrorKind::invalid_spec, "unknown family " + f);
}

struct Factor {
    lda::Graph graph;
    lda::Labeling labels;
    lda::SignColoring signs;
};

// Labels and signs default to a solver witness and an NBC search when absent.
auto load_factor(const std::string & path, const Options & o, bool want_signs) -> Factor
{
    auto text = read_text(path);
    auto g = lda::graph_from_json(text);
    auto f = lda::find_labeling(text);
    if (! f) {
        auto result = lda::chi_ld_exact(g, search_budget(o));
        if (! result.exhausted)
            throw lda::Error(lda::ErrorKind::budget, "no base labeling within budget");
        f = result.witness;
    }
    auto s = lda::find_signs(text);
    if (! s && want_signs) {
        s = lda::nbc_search(g);
        if (! s)
            throw lda::Error(lda::ErrorKind::no_coloring, "factor has no neighbourhood balanced colouring");
    }
    return {std::move(g), std::move(*f), s.value_or(lda::SignColoring{})};
}

auto construct(const Options & o) -> lda::ConstructionResult
{
    const auto & k = o.kind;
    if (k == "book-c4")
        return lda::label_book_c4(need(o.t, "--t"));
    if (k == "complete-multipartite")
        return lda::label_complete_multipartite(o.parts);
    if (k == "lexi-bistar")
        return lda::label_lexi_bistar(need(o.c, "--c"), need(o.d, "--d"), o.parts);
    if (k == "direct-bipartite") {
        if (o.parts.size() != 2)
            throw lda::Error(lda::ErrorKind::invalid_spec, "--parts needs n1,n2");
        return lda::label_direct_complete_bipartite(lda::graph_from_json(read_text(o.in)), o.parts[0], o.parts[1]);
    }
    if (k == "corona") {
        auto g = load_factor(o.in, o, false);
        return lda::label_corona(g.graph, g.labels, need(o.p, "--p"));
    }
    if (k == "copies" || k == "copies-pendant") {
        auto text = read_text(o.in);
        auto g = lda::graph_from_json(text);
        auto f = lda::find_labeling(text);
        auto s = lda::find_signs(text);
        if (! s)
            s = lda::nbc_search(g, {.max_vertices = 24, .interior_only = k == "copies-pendant"});
        if (! s)
            throw lda::Error(lda::ErrorKind::no_coloring, "graph has no suitable balanced colouring");
        if (! f) {
            auto result = lda::chi_ld_exact(g, search_budget(o));
            if (! result.exhausted)
                throw lda::Error(lda::ErrorKind::budget, "no base labeling within budget");
            f = result.witness;
        }
        if (k == "copies")
            return lda::label_copies_nbc(g, *f, *s, need(o.m, "--m"));
        return lda::label_copies_pendant(g, *f, *s, need(o.m, "--m"));
    }
    if (o.with.empty())
        throw lda::Error(lda::ErrorKind::invalid_spec, "--with is required for " + k);
    if (k == "direct") {
        auto g = load_factor(o.in, o, true);
        auto h = lda::graph_from_json(read_text(o.with));
        return lda::label_direct_nbc(g.graph, g.labels, g.signs, h);
    }
    auto g = lda::graph_from_json(read_text(o.in));
    auto h = load_factor(o.with, o, true);
    if (k == "lexi-regular")
        return lda::label_lexi_regular_bipartite(g, h.graph, h.labels, h.signs);
    if (k == "lexi-biregular")
        return lda::label_lexi_biregular(g, h.graph, h.labels, h.signs);
    if (k == "lexi-join")
        return lda::label_lexi_join_k1(g, h.graph, h.labels, h.signs);
    throw lda::Error(lda::ErrorKind::invalid_spec, "unknown construction " + k);
}

auto product(const Options & o) -> lda::Graph
{
    auto g = lda::graph_from_json(read_text(o.in));
    const auto & k = o.kind;
    if (k == "union")
        return lda::disjoint_union(g, need(o.m, "--m"));
    if (k == "corona")
        return lda::corona_empty(g, need(o.p, "--p"));
    if (k == "join-k1")
        return lda::join_k1(g);
    if (o.with.empty())
        throw lda::Error(lda::ErrorKind::invalid_spec, "--with is required for " + k);
    auto h = lda::graph_from_json(read_text(o.with));
    if (k == "direct")
        return lda::direct_product(g, h);
    if (k == "lexi")
        return lda::lexicographic_product(g, h);
    throw lda::Error(lda::ErrorKind::invalid_spec, "unknown product " + k);
}

auto nbc(const Options & o) -> int
{
    auto text = read_text(o.in);
    auto g = lda::graph_from_json(text);
    auto sigma = lda::find_signs(text);
    if (! sigma) {
        if (o.interior && lda::is_tree(g))
            sigma = lda::nbc_tree_interior(g);
        else
            sigma = lda::nbc_search(g, {.max_vertices = std::max(24, g.order()), .interior_only = o.interior});
        if (! sigma)
            throw lda::Error(lda::ErrorKind::no_coloring, "graph has no neighbourhood balanced colouring");
    }
    bool ok = o.interior ? lda::verify_interior_nbc(g, *sigma) : lda::verify_nbc(g, *sigma);
    write_text(o.out, o.verify ? lda::census_to_json(g, *sigma) : lda::signs_to_json(*sigma));
    if (! ok)
        throw lda::Error(lda::ErrorKind::no_coloring, "colouring is not balanced");
    return 0;
}

auto verify(const Options & o) -> int
{
    auto text = read_text(o.in);
    auto g = lda::graph_from_json(text);
    auto report = lda::verify_lda(g, lda::labeling_from_json(text));
    write_text(o.out, lda::report_to_json(report));
    if (! report.is_lda)
        throw lda::Error(lda::ErrorKind::invalid_labeling, "labeling is not local distance antimagic");
    return 0;
}

auto solve(const Options & o) -> int
{
    auto g = lda::graph_from_json(read_text(o.in));
    auto result = lda::chi_ld_exact(g, search_budget(o));
    write_text(o.out, lda::solve_result_to_json(g, result));
    return result.exhausted ? 0 : 2;
}

auto table(const Options & o) -> int
{
    auto family = lda::parse_table_family(o.family);
    int from = o.from > 0 ? o.from : lda::table_family_min(family);
    auto rows = lda::reproduce_table(family, from, need(o.to, "--to"), search_budget(o));
    write_text(o.out, o.csv ? lda::format_table_csv(rows) : lda::format_table(rows));
    for (const auto & row : rows)
        if (! row.result.exhausted)
            return 2;
    return 0;
}

auto export_dot(const Options & o) -> int
{
    auto text = read_text(o.in);
    write_text(o.out, lda::to_dot(lda::graph_from_json(text), lda::find_labeling(text)));
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Local distance antimagic labelings"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App * sub) {
        sub->add_option("input", o.in, "input JSON, - for stdin");
        sub->add_option("--in", o.in, "input JSON, - for stdin");
        sub->add_option("--out", o.out, "output file, - for stdout");
    };
    auto search = [&](CLI::App * sub) {
        sub->add_option("--budget", o.budget, "node budget (default LDA_BUDGET or 1e9)");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--max-vertices", o.max_vertices, "largest graph the search accepts");
        sub->add_flag("--symmetry", o.symmetry, "fix label 1 on orbit representatives");
    };

    auto * gen = app.add_subcommand("gen", "generate a named graph");
    gen->add_option("--family", o.family, "path cycle complete multipartite star bistar friendship wheel book empty tree")
        ->required();
    gen->add_option("--n", o.n);
    gen->add_option("--t", o.t);
    gen->add_option("--c", o.c);
    gen->add_option("--d", o.d);
    gen->add_option("--parts", o.parts)->delimiter(',')->allow_extra_args(false);
    gen->add_option("--seed", o.seed, "seed for random trees");
    gen->add_option("--out", o.out);

    auto * prod = app.add_subcommand("product", "combine graphs");
    prod->add_option("kind", o.kind, "direct lexi union corona join-k1")->required();
    input(prod);
    prod->add_option("--with", o.with, "second factor");
    prod->add_option("--m", o.m, "copies for union");
    prod->add_option("--p", o.p, "pendants per vertex for corona");

    auto * nbc_cmd = app.add_subcommand("nbc", "find or check a neighbourhood balanced colouring");
    input(nbc_cmd);
    nbc_cmd->add_flag("--verify", o.verify, "emit census and balance check");
    nbc_cmd->add_flag("--interior", o.interior, "only non-leaf vertices must balance");

    auto * cons = app.add_subcommand("construct", "run a labeling construction");
    cons->add_option("kind", o.kind,
                     "book-c4 corona copies copies-pendant direct direct-bipartite lexi-regular lexi-biregular "
                     "lexi-join lexi-bistar complete-multipartite")
        ->required();
    input(cons);
    search(cons);
    cons->add_option("--with", o.with, "second factor");
    cons->add_option("--t", o.t);
    cons->add_option("--m", o.m);
    cons->add_option("--p", o.p);
    cons->add_option("--c", o.c);
    cons->add_option("--d", o.d);
    cons->add_option("--parts", o.parts)->delimiter(',')->allow_extra_args(false);

    auto * ver = app.add_subcommand("verify", "check a labeling");
    input(ver);

    auto * sol = app.add_subcommand("solve", "exact chi_ld by search");
    input(sol);
    search(sol);

    auto * tab = app.add_subcommand("table", "reproduce known values for a family");
    tab->add_option("--family", o.family, "cycles paths complete friendship books wheels")->required();
    tab->add_option("--from", o.from);
    tab->add_option("--to", o.to)->required();
    tab->add_flag("--csv", o.csv);
    tab->add_option("--out", o.out);
    search(tab);

    auto * dot = app.add_subcommand("export-dot", "write Graphviz DOT");
    input(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen) {
            write_text(o.out, lda::graph_to_json(generate(o)));
            return 0;
        }
        if (*prod) {
            write_text(o.out, lda::graph_to_json(product(o)));
            return 0;
        }
        if (*nbc_cmd)
            return nbc(o);
        if (*cons) {
            write_text(o.out, lda::construction_to_json(construct(o)));
            return 0;
        }
        if (*ver)
            return verify(o);
        if (*sol)
            return solve(o);
        if (*tab)
            return table(o);
        if (*dot)
            return export_dot(o);
    } catch (const lda::Error & e) {
        std::cerr << lda::error_to_json(std::string(lda::to_string(e.kind())), e.what());
        return e.kind() == lda::ErrorKind::budget ? 2 : 1;
    } catch (const std::exception & e) {
        std::cerr << lda::error_to_json("internal", e.what());
        return 1;
    }
    return exit_usage;
}
