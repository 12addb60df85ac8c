#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "bruteres.hpp"
#include "fcext/chainmap.hpp"
#include "fcext/chart_io.hpp"
#include "fcext/checkpoint.hpp"
#include "fcext/parse.hpp"
#include "pairing.hpp"
#include "svg.hpp"

using namespace fcext;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    FCEXT_CHECK(in.good(), "cannot open " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void spit(const fs::path& path, const std::string& data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    FCEXT_CHECK(out.good(), "cannot write " + path.string());
    out << data;
}

fs::path default_checkpoint(const std::string& module_path)
{
    fs::path stem = fs::path(module_path).stem();
    if (const char* root = std::getenv("FCEXT_CHECKPOINT_ROOT"))
        return fs::path(root) / stem;
    return fs::path(stem.string() + ".ckpt");
}

struct Options {
    std::string module;
    std::string checkpoint;
    int t_max = -1;
    int s_max = -1;
    int threads = 1;
    int checkpoint_every = 1;
    bool literal_pairs = false;
    bool triple = false;
    std::string out;
    std::string svg;
    std::string range;
    std::string gens;
    bool all_gens = false;

    fs::path ckpt() const
    {
        if (!checkpoint.empty())
            return checkpoint;
        FCEXT_CHECK(!module.empty(), "need --checkpoint or --module");
        return default_checkpoint(module);
    }
    GroebnerOptions gb(bool lit, bool tri) const
    {
        GroebnerOptions o;
        o.literal_step1 = lit;
        o.triple_criterion = tri;
        o.threads = threads;
        return o;
    }
    int parse_range(int fallback) const
    {
        if (range.empty())
            return fallback;
        FCEXT_CHECK(range.rfind("t=", 0) == 0, "--range expects t=<N>");
        return std::stoi(range.substr(2));
    }
};

struct Loaded {
    std::shared_ptr<Algebra> alg;
    std::unique_ptr<Resolution> res;
    CheckpointInfo info;
};

Loaded load_checkpoint(const Options& opt, int trunc_at_least = -1)
{
    fs::path dir = opt.ckpt();
    auto info = checkpoint::read_info(dir);
    FCEXT_CHECK(info.has_value(), "no checkpoint at " + dir.string());
    int trunc = std::max(info->t_done, trunc_at_least);
    auto alg = std::make_shared<Algebra>(trunc);
    GroebnerOptions gb = opt.gb(info->literal_step1, info->triple_criterion);
    auto res = std::make_unique<Resolution>(
        checkpoint::load(dir, alg, info->stamp(), info->s_max, gb));
    return Loaded{std::move(alg), std::move(res), *info};
}

std::vector<ProductLine> read_products_tsv(const fs::path& path)
{
    std::vector<ProductLine> lines;
    if (!fs::exists(path))
        return lines;
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        ProductLine p;
        std::getline(ls, p.g1, '\t');
        std::getline(ls, p.g2, '\t');
        std::getline(ls, p.result, '\t');
        if (!p.g1.empty())
            lines.push_back(std::move(p));
    }
    return lines;
}

int cmd_resolve(const Options& opt)
{
    std::string text = slurp(opt.module);
    fs::path dir = opt.ckpt();
    RunStamp stamp{text, opt.literal_pairs, opt.triple};
    int t_max = opt.t_max;
    FCEXT_CHECK(t_max >= 0, "resolve needs --tmax");

    std::shared_ptr<Algebra> alg;
    std::unique_ptr<Resolution> res;
    if (checkpoint::exists(dir)) {
        auto info = checkpoint::read_info(dir);
        int s_max = opt.s_max > 0 ? opt.s_max : info->s_max;
        alg = std::make_shared<Algebra>(std::max(t_max, info->t_done));
        res = std::make_unique<Resolution>(
            checkpoint::load(dir, alg, stamp, s_max, opt.gb(opt.literal_pairs, opt.triple)));
        std::cout << "resume checkpoint=" << dir.string() << " t_done=" << res->t_done() << "\n";
    }
    else {
        int s_max = opt.s_max > 0 ? opt.s_max : t_max;
        alg = std::make_shared<Algebra>(t_max);
        ModuleFile mf = parse_module_file(text);
        ModulePresentation pres = minimize_presentation(*alg, to_presentation(*alg, mf));
        ResolveOptions ro;
        ro.s_max = s_max;
        ro.gb = opt.gb(opt.literal_pairs, opt.triple);
        res = std::make_unique<Resolution>(alg, std::move(pres), ro);
    }

    res->extend(t_max, [&](const ResolutionProgress& p) {
        std::cout << "t=" << p.t << " new_gens=" << p.new_gens << " total_gens=" << p.total_gens
                  << " gb_entries=" << p.gb_entries << " pending_pairs=" << p.pending_pairs
                  << " ms=" << p.ms << "\n";
        std::cout.flush();
        if (p.t % std::max(1, opt.checkpoint_every) == 0 || p.t == t_max)
            checkpoint::save(dir, *res, stamp);
    });
    if (!checkpoint::exists(dir))
        checkpoint::save(dir, *res, stamp);
    std::cout << "done t_done=" << res->t_done() << " total_gens=" << res->total_gens() << "\n";
    return 0;
}

int cmd_chart(const Options& opt)
{
    Loaded l = load_checkpoint(opt);
    std::string tsv = chart_tsv(*l.res, opt.t_max);
    if (opt.out.empty())
        std::cout << tsv;
    else
        spit(opt.out, tsv);
    if (!opt.svg.empty()) {
        auto products = read_products_tsv(opt.ckpt() / "products.tsv");
        spit(opt.svg, chart_svg(*l.res, opt.t_max, products));
    }
    return 0;
}

int cmd_products(const Options& opt)
{
    Loaded l = load_checkpoint(opt);
    Resolution& res = *l.res;
    FCEXT_CHECK(res.trivial_module(), "products need a resolution of the trivial module");
    ChainMaps maps(res);
    maps.import_blobs(checkpoint::load_chainmaps(opt.ckpt(), res.t_done(), *l.alg));

    int t_cap = opt.t_max >= 0 ? std::min(opt.t_max, res.t_done()) : res.t_done();
    std::vector<ChartEntry> gens;
    if (opt.all_gens) {
        for (const ChartEntry& e : res.chart())
            if (e.t <= t_cap)
                gens.push_back(e);
    }
    else {
        FCEXT_CHECK(!opt.gens.empty(), "products needs --gens or --all");
        std::istringstream in(opt.gens);
        std::string name;
        while (std::getline(in, name, ',')) {
            auto e = res.find_gen(name);
            FCEXT_CHECK(e.has_value(), "unknown generator '" + name + "'");
            FCEXT_CHECK(e->t <= res.t_done(), "generator beyond the frontier");
            gens.push_back(*e);
        }
    }

    std::vector<ProductLine> lines;
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i; j < gens.size(); ++j) {
            const ChartEntry &a = gens[i], &b = gens[j];
            if (a.t + b.t > t_cap || a.s + b.s > res.s_max())
                continue;
            auto prod = maps.product(a, b);
            std::string result;
            for (int k : prod)
                result += (result.empty() ? "" : "+") + res.gen_name(a.s + b.s, a.t + b.t, k);
            lines.push_back({res.gen_name(a.s, a.t, a.index), res.gen_name(b.s, b.t, b.index), result});
        }
    }
    std::string tsv = products_tsv(std::move(lines));
    if (opt.out.empty())
        std::cout << tsv;
    else
        spit(opt.out, tsv);
    spit(opt.ckpt() / "products.tsv", tsv);
    checkpoint::save_chainmaps(opt.ckpt(), res.t_done(), maps.export_blobs());
    return 0;
}

int cmd_verify(const Options& opt)
{
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "ok   " : "FAIL ") << name << (detail.empty() ? "" : " " + detail) << "\n";
        if (!ok)
            ++failures;
    };
    int range = opt.parse_range(12);

    // ordering axioms on random monomials
    try {
        GenTable table(60);
        std::mt19937_64 rng(1);
        auto random_mono = [&] {
            for (;;) {
                uint64_t bits = rng() & rng() & rng() & ((uint64_t(1) << table.size()) - 1);
                Mono m = mono_from_bits(table, bits);
                if (m.fdeg <= 25)
                    return m;
            }
        };
        bool ok = true;
        for (int trial = 0; trial < 20000 && ok; ++trial) {
            Mono m = random_mono(), n = random_mono(), l = random_mono();
            if (m.fdeg > n.fdeg && !(m < n))
                ok = false;
            Mono ml, nl;
            if (mono_mul_squarefree(table, m, l, ml) && mono_mul_squarefree(table, n, l, nl))
                if (cmp(m, n) != cmp(ml, nl))
                    ok = false;
        }
        report("ordering-axioms", ok);
    }
    catch (const std::exception& e) {
        report("ordering-axioms", false, e.what());
    }

    // associativity and filtration multiplicativity
    try {
        bool ok = true;
        std::mt19937_64 rng(2);
        TruncationBound big{96};
        auto rand_basis = [&](int dmax) {
            auto all = oracle::milnor_basis((int)(rng() % (dmax + 1)));
            return all.empty() ? MilnorBasisElt{} : all[rng() % all.size()];
        };
        for (int trial = 0; trial < 400 && ok; ++trial) {
            auto a = rand_basis(14), b = rand_basis(14), c = rand_basis(14);
            auto left = milnor_product_elt(milnor_product(a, b, big), MilnorElt::single(c), big);
            auto right = milnor_product_elt(MilnorElt::single(a), milnor_product(b, c, big), big);
            if (!(left == right))
                ok = false;
            if (filtration_v(milnor_product(a, b, big)) < a.weight() + b.weight())
                ok = false;
        }
        report("milnor-associativity", ok);
    }
    catch (const std::exception& e) {
        report("milnor-associativity", false, e.what());
    }

    // Adem relations against the product
    try {
        bool ok = true;
        for (int j = 1; 2 * j <= 20 && ok; ++j)
            for (int i = 1; i < 2 * j && i + j <= 20 && ok; ++i)
                ok = milnor_product(MilnorBasisElt::sq(i), MilnorBasisElt::sq(j), TruncationBound{i + j}) ==
                     adem_expand(i, j);
        report("adem-cross-check", ok);
    }
    catch (const std::exception& e) {
        report("adem-cross-check", false, e.what());
    }

    // dual-pairing oracle in low degrees
    try {
        bool ok = true;
        int cap = std::min(range, 12);
        for (int d = 0; d <= cap && ok; ++d) {
            oracle::PairingTable table(d);
            for (int da = 0; da <= d && ok; ++da)
                for (const auto& a : oracle::milnor_basis(da))
                    for (const auto& b : oracle::milnor_basis(d - da))
                        if (!(milnor_product(a, b, TruncationBound{d}) == table.product(a, b)))
                            ok = false;
        }
        report("milnor-pairing-oracle", ok, "t<=" + std::to_string(std::min(range, 12)));
    }
    catch (const std::exception& e) {
        report("milnor-pairing-oracle", false, e.what());
    }

    // checkpoint checks: the load itself verifies d d = 0 and minimality
    fs::path dir;
    bool have_ckpt = false;
    try {
        dir = opt.ckpt();
        have_ckpt = checkpoint::exists(dir);
    }
    catch (const Error&) {
    }
    if (have_ckpt) {
        try {
            Loaded l = load_checkpoint(opt);
            report("checkpoint-complex", true, "d²=0 at t<=" + std::to_string(l.res->t_done()));
            try {
                int cap = std::min({range, l.res->t_done()});
                const ModulePresentation& pres = l.res->presentation();
                std::vector<oracle::BruteElt> rels;
                for (const FreeElt& r : pres.relations) {
                    oracle::BruteElt be(pres.rank());
                    for (const ModMono& tm : r.terms)
                        be[tm.slot] = add(be[tm.slot], l.alg->lift_mono(tm.m));
                    rels.push_back(std::move(be));
                }
                oracle::BruteResolution brute(pres.gen_degrees, rels, cap, cap);
                std::map<std::pair<int, int>, int> ranks;
                for (const ChartEntry& e : l.res->chart())
                    ranks[{e.s, e.t}] += 1;
                bool ok = true;
                for (int t = 0; t <= cap; ++t)
                    for (int s = 0; s <= cap; ++s)
                        if (ranks[{s, t}] != brute.rank(s, t))
                            ok = false;
                report("chart-oracle", ok, "t<=" + std::to_string(cap));
            }
            catch (const std::exception& e) {
                report("chart-oracle", false, e.what());
            }
        }
        catch (const std::exception& e) {
            report("checkpoint-complex", false, e.what());
        }
    }

    std::cout << (failures ? "verify: FAILED\n" : "verify: all checks passed\n");
    return failures ? 1 : 0;
}

int cmd_info(const Options& opt)
{
    fs::path dir = opt.ckpt();
    auto info = checkpoint::read_info(dir);
    FCEXT_CHECK(info.has_value(), "no checkpoint at " + dir.string());
    std::cout << "checkpoint=" << dir.string() << "\n";
    std::cout << "format=" << info->format << "\n";
    std::cout << "config_hash=" << info->config_hash << "\n";
    std::cout << "t_done=" << info->t_done << "\n";
    std::cout << "s_max=" << info->s_max << "\n";
    std::cout << "literal_step1=" << (info->literal_step1 ? 1 : 0) << "\n";
    std::cout << "triple_criterion=" << (info->triple_criterion ? 1 : 0) << "\n";
    Loaded l = load_checkpoint(opt);
    std::cout << "total_gens=" << l.res->total_gens() << "\n";
    std::cout << "trivial_module=" << (l.res->trivial_module() ? 1 : 0) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ext charts over the mod-2 Steenrod algebra via filtered-commutative Groebner bases"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--module", opt.module, "module definition file");
        cmd->add_option("--checkpoint", opt.checkpoint,
                        "checkpoint directory (default: $FCEXT_CHECKPOINT_ROOT/<module> or ./<module>.ckpt)");
        cmd->add_option("--threads", opt.threads, "worker threads (results are thread-count independent)");
    };

    CLI::App* resolve = app.add_subcommand("resolve", "extend the minimal resolution to (smax, tmax)");
    add_common(resolve);
    resolve->add_option("--tmax", opt.t_max, "internal degree bound")->required();
    resolve->add_option("--smax", opt.s_max, "homological degree bound (default tmax)");
    resolve->add_option("--checkpoint-every", opt.checkpoint_every, "write a snapshot every N degrees");
    resolve->add_flag("--paper-literal-pairs", opt.literal_pairs, "schedule every step-(1) pair");
    resolve->add_flag("--buchberger-triple", opt.triple, "triple-criterion pair pruning");

    CLI::App* chart = app.add_subcommand("chart", "emit the chart TSV (and optionally an SVG)");
    add_common(chart);
    chart->add_option("--tmax", opt.t_max, "filter to t <= tmax");
    chart->add_option("--out", opt.out, "TSV path (default stdout)");
    chart->add_option("--svg", opt.svg, "also write an Adams-grid SVG here");

    CLI::App* products = app.add_subcommand("products", "Yoneda products of chart generators");
    add_common(products);
    products->add_option("--gens", opt.gens, "comma-separated generator names (h0,h1,2_5_0,...)");
    products->add_flag("--all", opt.all_gens, "all generators in range");
    products->add_option("--tmax", opt.t_max, "only products with t <= tmax");
    products->add_option("--out", opt.out, "TSV path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant and oracle suites");
    add_common(verify);
    verify->add_option("--range", opt.range, "oracle range, e.g. t=12");

    CLI::App* info = app.add_subcommand("info", "checkpoint summary");
    add_common(info);

    CLI11_PARSE(app, argc, argv);
    try {
        if (resolve->parsed())
            return cmd_resolve(opt);
        if (chart->parsed())
            return cmd_chart(opt);
        if (products->parsed())
            return cmd_products(opt);
        if (verify->parsed())
            return cmd_verify(opt);
        if (info->parsed())
            return cmd_info(opt);
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
