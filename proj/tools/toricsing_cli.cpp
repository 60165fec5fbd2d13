// Command line front end. Exit codes: 0 success, 1 a verification failed,
// 2 usage or input problems, 3 step budget exhausted, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <toricsing/toricsing.hpp>

namespace ts = toricsing;

namespace {

struct Options {
    std::string kind;
    int n = 0;
    std::string points_file;
    bool lipman = false;
    bool minimal = false;
    std::string order = "grevlex";
    std::string mode = "gcd";
    std::string format = "text";
    std::string output;
    int samples = 0;
    uint64_t seed = 1;
    int jobs = 1;
    long long extract_seed = -1;
    long long bound = -1;
    long long budget = 0;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::invalid_argument("cannot write " + opt.output);
    out << text;
}

ts::Limits make_limits(const Options& opt) {
    ts::Limits lim;
    if (const char* env = std::getenv("TORICSING_BUDGET_STEPS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw std::invalid_argument("TORICSING_BUDGET_STEPS must be a positive integer");
        lim.reduction_steps = v;
    }
    if (opt.budget > 0) lim.reduction_steps = opt.budget;
    return lim;
}

ts::Configuration load_config(const Options& opt) {
    if (!opt.points_file.empty()) {
        std::ifstream in(opt.points_file);
        if (!in) throw std::invalid_argument("cannot read " + opt.points_file);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        size_t at = text.find_first_not_of(" \t\r\n");
        if (at != std::string::npos && text[at] == '{')
            return ts::config_from_json(ts::Json::parse(text));
        return ts::config_from_text(text);
    }
    if (opt.kind.empty()) throw std::invalid_argument("need --kind and --n, or --points");
    ts::AdeKind kind = ts::ade_kind_from(opt.kind);
    if (opt.lipman) return ts::lipman_configuration(kind, opt.n);
    return ts::closed_form_configuration(kind, opt.n, !opt.minimal);
}

ts::TermOrder pick_order(const Options& opt, const ts::Configuration& c) {
    int N = c.size();
    if (opt.order == "lex") return ts::TermOrder(ts::OrderKind::lex, N);
    if (opt.order == "grlex") return ts::TermOrder(ts::OrderKind::grlex, N);
    if (opt.order == "grevlex") return ts::TermOrder(ts::OrderKind::grevlex, N);
    if (opt.order == "published") {
        if (c.name == "E6") return ts::e6_published_order();
        if (c.name == "E7") return ts::e7_published_order();
        if (c.name == "A4") return ts::a4_published_order();
        if (c.name == "A5") return ts::a5_published_order();
        throw std::invalid_argument("no published order for " + (c.name.empty() ? "this configuration" : c.name));
    }
    throw std::invalid_argument("unknown order " + opt.order);
}

int run_config(const Options& opt) {
    ts::Configuration c = load_config(opt);
    if (opt.format == "json")
        emit(opt, ts::config_to_json(c).dump(2) + "\n");
    else
        emit(opt, ts::config_to_text(c));
    return 0;
}

int run_gb(const Options& opt) {
    ts::Configuration c = load_config(opt);
    ts::Limits lim = make_limits(opt);
    ts::MarkedBasis gb = ts::toric_ideal(c, pick_order(opt, c), lim);
    if (opt.format == "json") {
        ts::Json j = ts::basis_to_json(gb);
        j["config"] = ts::config_to_json(c);
        j["squarefree_initial"] = ts::all_squarefree(ts::initial_ideal(gb));
        emit(opt, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "# " << (c.name.empty() ? "configuration" : c.name) << ": reduced basis, "
       << gb.elems.size() << " elements\n";
    for (const auto& g : gb.elems) os << g.str(gb.vars) << "\n";
    emit(opt, os.str());
    return 0;
}

int run_verify(const Options& opt) {
    if (opt.kind.empty()) throw std::invalid_argument("verify needs --kind and --n");
    ts::AdeKind kind = ts::ade_kind_from(opt.kind);
    ts::Limits lim = make_limits(opt);
    ts::VerificationReport r = ts::verify_family(kind, opt.n, lim);
    if (opt.format == "json") {
        emit(opt, ts::verification_to_json(r).dump(2) + "\n");
        return r.ok() ? 0 : 1;
    }
    std::ostringstream os;
    auto line = [&](const std::string& label, bool value) {
        os << "  " << label << ": " << (value ? "yes" : "NO") << "\n";
    };
    os << r.family << ": published table, " << r.table_size << " elements (expected "
       << r.expected_size << ")\n";
    line("cardinality matches", r.size_ok);
    if (!r.inhomogeneous_rows.empty()) {
        os << "  rows with mismatched degrees as printed:";
        for (int i : r.inhomogeneous_rows) os << ' ' << i;
        os << "\n";
        ts::MarkedBasis printed = ts::catalog_table(kind, opt.n);
        for (const auto& f : r.fixes)
            os << "    row " << f.row << ": " << f.printed.str(printed.vars) << "  ->  "
               << f.corrected.str(printed.vars) << "\n";
    }
    line("corrections cover the bad rows", r.fixes_match);
    line("marking admits a term order", r.marking_coherent);
    if (r.marking_matches_order)
        line("marking agrees with the published order", *r.marking_matches_order);
    line("table is a Groebner basis", r.groebner);
    line("initial ideal is squarefree", r.squarefree);
    line("generates the toric ideal", r.generates);
    os << (r.ok() ? "ok" : "FAILED") << "\n";
    emit(opt, os.str());
    return r.ok() ? 0 : 1;
}

int run_betti(const Options& opt) {
    ts::Configuration c = load_config(opt);
    ts::Limits lim = make_limits(opt);
    ts::TermOrder order(ts::OrderKind::grevlex, c.size());
    ts::MarkedBasis gb = ts::toric_ideal(c, order, lim);
    ts::FiberMode mode = ts::FiberMode::gcd;
    if (opt.mode == "ideal")
        mode = ts::FiberMode::ideal;
    else if (opt.mode != "gcd")
        throw std::invalid_argument("unknown fiber mode " + opt.mode);
    ts::BettiReport r = ts::betti_report(c, gb, mode, lim);

    std::optional<std::vector<ts::Binomial>> extracted;
    bool extracted_minimal = false;
    if (opt.extract_seed >= 0) {
        extracted = ts::extract_minimal_generating_set(r, ts::Int(opt.extract_seed));
        extracted_minimal = ts::minimality_check(c, r, *extracted);
    }

    if (opt.format == "json") {
        ts::Json j = ts::betti_to_json(r);
        j["config"] = ts::config_to_json(c);
        if (extracted) {
            ts::Json gens = ts::Json::array();
            for (const auto& g : *extracted) gens.push_back(ts::binomial_to_json(g));
            j["extracted"] = gens;
            j["extracted_minimal"] = extracted_minimal;
        }
        emit(opt, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "# " << (c.name.empty() ? "configuration" : c.name) << ": " << r.degrees.size()
       << " Betti degrees, " << r.minimal_generators << " minimal generators, "
       << r.generating_sets.str() << " minimal generating sets\n";
    for (const auto& d : r.degrees) {
        os << "degree (";
        for (size_t i = 0; i < d.graph.degree.size(); ++i)
            os << (i ? "," : "") << d.graph.degree[i];
        os << "): " << d.graph.ncomp << " components, " << d.choices.str() << " choices"
           << (d.indispensable ? ", indispensable" : "") << "\n";
    }
    if (extracted) {
        os << "# extracted generating set (seed " << opt.extract_seed << "), minimality "
           << (extracted_minimal ? "confirmed" : "REFUTED") << "\n";
        for (const auto& g : *extracted) os << g.str(c.vars) << "\n";
    }
    emit(opt, os.str());
    return 0;
}

int run_fan(const Options& opt) {
    ts::Configuration c = load_config(opt);
    ts::Limits lim = make_limits(opt);
    ts::FanResult fan;
    if (opt.samples > 0) {
        fan = ts::sample_initial_ideals(c, opt.samples, opt.seed, opt.jobs, lim);
    } else {
        if (opt.bound > 0) lim.max_cones = static_cast<int>(opt.bound);
        fan = ts::groebner_fan(c, ts::TermOrder(ts::OrderKind::grevlex, c.size()), lim);
    }
    std::vector<int> sqf = ts::squarefree_initials(fan);
    if (opt.format == "json") {
        ts::Json j = ts::fan_to_json(fan);
        j["config"] = ts::config_to_json(c);
        j["squarefree"] = sqf;
        j["sampled"] = opt.samples > 0;
        emit(opt, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "# " << (c.name.empty() ? "configuration" : c.name) << ": " << fan.cones.size()
       << " distinct initial ideals"
       << (opt.samples > 0 ? " (sampled)" : (fan.complete ? "" : " (cone cap hit)")) << "\n";
    os << "# squarefree: " << sqf.size() << "\n";
    for (size_t i = 0; i < fan.cones.size(); ++i) {
        os << "cone " << i << " (" << fan.cones[i].initials.size() << " generators";
        if (std::find(sqf.begin(), sqf.end(), static_cast<int>(i)) != sqf.end())
            os << ", squarefree";
        os << "):";
        for (const auto& m : fan.cones[i].initials) os << ' ' << m.str(c.vars);
        os << "\n";
    }
    emit(opt, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric ideals of rational double point resolution graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_source = [&](CLI::App* cmd, bool with_points) {
        cmd->add_option("--kind", opt.kind, "family: A, D or E");
        cmd->add_option("--n", opt.n, "index within the family");
        if (with_points) cmd->add_option("--points", opt.points_file, "configuration file");
        cmd->add_option("--budget", opt.budget, "rewrite step budget");
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", opt.output, "write here instead of stdout");
        cmd->add_flag("--minimal", opt.minimal, "drop redundant generators (odd D)");
    };

    CLI::App* cfg = app.add_subcommand("config", "emit a point configuration");
    add_source(cfg, true);
    cfg->add_flag("--lipman", opt.lipman, "enumerate the semigroup generators from scratch");

    CLI::App* gb = app.add_subcommand("gb", "compute a reduced Groebner basis");
    add_source(gb, true);
    gb->add_option("--order", opt.order, "grevlex, grlex, lex or published");

    CLI::App* verify = app.add_subcommand("verify", "replay the published claims for a family");
    add_source(verify, false);

    CLI::App* betti = app.add_subcommand("betti", "Betti degrees and minimal generating sets");
    add_source(betti, true);
    betti->add_option("--mode", opt.mode, "fiber edges: gcd or ideal");
    betti->add_option("--extract", opt.extract_seed, "extract the generating set with this index");

    CLI::App* fan = app.add_subcommand("fan", "enumerate or sample initial ideals");
    add_source(fan, true);
    fan->add_option("--samples", opt.samples, "sample this many weight vectors instead");
    fan->add_option("--seed", opt.seed, "sampling seed");
    fan->add_option("--jobs", opt.jobs, "worker threads for sampling");
    fan->add_option("--bound", opt.bound, "cone cap for full enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cfg) return run_config(opt);
        if (*gb) return run_gb(opt);
        if (*verify) return run_verify(opt);
        if (*betti) return run_betti(opt);
        if (*fan) return run_fan(opt);
    } catch (const ts::resource_exceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
