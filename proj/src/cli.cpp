#include "sturmkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>

#include "sturmkit/contfrac.hpp"
#include "sturmkit/find.hpp"
#include "sturmkit/grammar.hpp"
#include "sturmkit/solver.hpp"
#include "sturmkit/trees.hpp"
#include "sturmkit/words.hpp"

namespace sturmkit::cli {

namespace {

using nlohmann::ordered_json;

long long to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw ResourceError("value too large for the output encoding");
    return v.convert_to<long long>();
}

int depth_cap_from_env() {
    const char* env = std::getenv("STURMKIT_DEPTH_CAP");
    if (!env) return kDefaultDepthCap;
    try {
        std::size_t used = 0;
        int cap = std::stoi(env, &used);
        if (used != std::string(env).size() || cap < 0) throw std::invalid_argument("");
        return cap;
    } catch (const std::exception&) {
        throw DomainError("STURMKIT_DEPTH_CAP must be a non-negative integer");
    }
}

std::string format_cf_text(const ContinuedFraction& cf) {
    std::string s = "[0";
    for (std::size_t i = 1; i < cf.preperiod.size(); ++i)
        s += (i == 1 ? "; " : ", ") + cf.preperiod[i].str();
    if (!cf.period.empty()) {
        s += cf.preperiod.size() == 1 ? "; (" : ", (";
        for (std::size_t i = 0; i < cf.period.size(); ++i)
            s += (i ? ", " : "") + cf.period[i].str();
        s += ")";
    }
    return s + "]";
}

ordered_json cf_json(const ContinuedFraction& cf) {
    ordered_json j;
    j["preperiod"] = ordered_json::array();
    for (const BigInt& d : cf.preperiod) j["preperiod"].push_back(to_int64(d));
    j["period"] = ordered_json::array();
    for (const BigInt& d : cf.period) j["period"].push_back(to_int64(d));
    return j;
}

struct Options {
    std::string alpha, rho, x, fraction, morphism, word, kind, set, rho_kind, format = "plain";
    std::size_t len = 100;
    int depth = 0, max_depth = 10, max_steps = 4096, letter = -1, depth_cap = -1;
    bool ceiling = false;
};

void check_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (opt.format == a) return;
    throw DomainError("unsupported --format \"" + opt.format + "\" for this subcommand");
}

int run_parsed(const std::string& sub, const Options& opt, std::ostream& out) {
    if (sub == "word") {
        check_format(opt, {"plain", "json"});
        QuadraticNumber alpha = parse_quadratic(opt.alpha);
        QuadraticNumber rho = opt.rho.empty() ? alpha : parse_quadratic(opt.rho);
        Word w = opt.ceiling ? sturmian_ceil(alpha, rho, opt.len)
                             : sturmian_floor(alpha, rho, opt.len);
        if (opt.format == "json") {
            ordered_json j{{"alpha", format_quadratic(alpha)},
                           {"rho", format_quadratic(rho)},
                           {"word", w.str()}};
            out << j.dump() << "\n";
        } else {
            out << w.str() << "\n";
        }
        return 0;
    }
    if (sub == "cf") {
        check_format(opt, {"plain", "json"});
        ContinuedFraction cf = continued_fraction(parse_quadratic(opt.x), opt.max_steps);
        if (opt.format == "json") out << cf_json(cf).dump() << "\n";
        else out << format_cf_text(cf) << "\n";
        return 0;
    }
    if (sub == "sturm") {
        check_format(opt, {"plain", "json"});
        QuadraticNumber x = parse_quadratic(opt.x);
        bool sturm = is_sturm_number(x);
        if (opt.format == "json") {
            ordered_json j{{"sturm", sturm}};
            if (sturm) {
                SturmForm form = cf_sturm_form(x, opt.max_steps);
                j["case"] = form.slope == SlopeCase::Small ? "small" : "large";
                j["a0"] = to_int64(form.a0);
                j["k"] = static_cast<long long>(form.k());
                j["period"] = ordered_json::array();
                for (const BigInt& d : form.period_digits) j["period"].push_back(to_int64(d));
                j["cf"] = cf_json(form.raw);
            }
            out << j.dump() << "\n";
            return 0;
        }
        out << "sturm: " << (sturm ? "true" : "false") << "\n";
        if (sturm) {
            SturmForm form = cf_sturm_form(x, opt.max_steps);
            out << "case: " << (form.slope == SlopeCase::Small ? "small" : "large") << "\n";
            out << "a0: " << form.a0.str() << "\n";
            out << "k: " << form.k() << "\n";
            std::string digits;
            for (const BigInt& d : form.period_digits) digits += (digits.empty() ? "" : " ") + d.str();
            out << "period: " << digits << "\n";
            out << "cf: " << format_cf_text(form.raw) << "\n";
        }
        return 0;
    }
    if (sub == "invariant") {
        QuadraticNumber alpha = parse_quadratic(opt.alpha);
        QuadraticNumber rho = parse_quadratic(opt.rho);
        out << (is_substitution_invariant(alpha, rho) ? "true" : "false") << "\n";
        return 0;
    }
    if (sub == "tree") {
        TreeKind kind;
        if (opt.kind == "kepler") kind = TreeKind::Kepler;
        else if (opt.kind == "phi") kind = TreeKind::Phi;
        else if (opt.kind == "matrixK") kind = TreeKind::MatrixK;
        else if (opt.kind == "matrixM") kind = TreeKind::MatrixM;
        else if (opt.kind == "sturm") kind = TreeKind::Sturm;
        else if (opt.kind == "m38") kind = TreeKind::M38;
        else throw DomainError("unknown tree kind \"" + opt.kind + "\"");
        TreeFormat format;
        if (opt.format == "ascii" || opt.format == "plain") format = TreeFormat::Ascii;
        else if (opt.format == "dot") format = TreeFormat::Dot;
        else if (opt.format == "json") format = TreeFormat::Json;
        else throw DomainError("unsupported --format \"" + opt.format + "\" for this subcommand");
        // An explicit --depth-cap wins over the environment override.
        int cap = opt.depth_cap >= 0 ? opt.depth_cap : depth_cap_from_env();
        std::string text = export_tree(kind, opt.depth, format, cap);
        out << text;
        if (format == TreeFormat::Json) out << "\n";
        return 0;
    }
    if (sub == "locate") {
        QuadraticNumber f = parse_quadratic(opt.fraction);
        if (!f.is_rational()) throw DomainError("locate expects a rational fraction");
        NodeAddress addr = locate_fraction(
            {f.rational_part().numerator(), f.rational_part().denominator()});
        out << (addr.empty() ? "L" : addr) << "\n";
        return 0;
    }
    if (sub == "fix") {
        BinaryMorphism m = parse_morphism(opt.morphism);
        std::optional<int> letter;
        if (opt.letter >= 0) letter = opt.letter;
        out << fixed_point(m, opt.len, letter).str() << "\n";
        return 0;
    }
    if (sub == "check") {
        BinaryMorphism m = parse_morphism(opt.morphism);
        QuadraticNumber alpha = parse_quadratic(opt.alpha);
        QuadraticNumber rho = opt.rho.empty() ? alpha : parse_quadratic(opt.rho);
        out << (is_fixed_by(m, alpha, rho, opt.len, opt.ceiling) ? "true" : "false") << "\n";
        return 0;
    }
    if (sub == "conjugate-psi") {
        out << format_morphism(shift_conjugate(parse_morphism(opt.morphism))) << "\n";
        return 0;
    }
    if (sub == "decompose") {
        GeneratorSet set;
        bool phi_names = false;
        if (opt.set == "phi01") set = GeneratorSet::Phi01, phi_names = true;
        else if (opt.set == "psi38") set = GeneratorSet::Psi38;
        else if (opt.set == "psi24") set = GeneratorSet::Psi24;
        else if (opt.set == "psi47") set = GeneratorSet::Psi47;
        else throw DomainError("unknown generator set \"" + opt.set + "\"");
        PsiWord word = decompose(parse_morphism(opt.morphism), set);
        out << format_generator_word(word, phi_names) << "\n";
        return 0;
    }
    if (sub == "solve") {
        check_format(opt, {"plain", "json"});
        PsiWord word = parse_generator_word(opt.word);
        SturmianParams sol = fixed_point_solve(word);
        const char* rep = sol.representative == Representative::Floor ? "floor" : "ceiling";
        if (opt.format == "json") {
            FracLinMap m = word_map(word);
            ordered_json j{{"alpha", format_quadratic(sol.alpha)},
                           {"rho", format_quadratic(sol.rho)},
                           {"representative", rep},
                           {"morphism", format_morphism(sol.morphism)},
                           {"generator_word", format_generator_word(sol.word)}};
            if (sol.floor_fixer) j["floor_fixing_morphism"] = format_morphism(*sol.floor_fixer);
            j["map"] = ordered_json{{"a", to_int64(m.a)}, {"b", to_int64(m.b)},
                                    {"c", to_int64(m.c)}, {"d", to_int64(m.d)},
                                    {"p", to_int64(m.p)}, {"q", to_int64(m.q)},
                                    {"r", to_int64(m.r)}};
            out << j.dump() << "\n";
            return 0;
        }
        out << "alpha: " << format_quadratic(sol.alpha) << "\n";
        out << "rho: " << format_quadratic(sol.rho) << "\n";
        out << "representative: " << rep << "\n";
        out << "morphism: " << format_morphism(sol.morphism) << "\n";
        if (sol.floor_fixer)
            out << "floor-fixer: " << format_morphism(*sol.floor_fixer) << "\n";
        return 0;
    }
    if (sub == "find") {
        check_format(opt, {"plain", "json"});
        RhoKind kind;
        if (opt.rho_kind == "alpha") kind = RhoKind::Alpha;
        else if (opt.rho_kind == "zero") kind = RhoKind::Zero;
        else if (opt.rho_kind == "one-minus-alpha") kind = RhoKind::OneMinusAlpha;
        else throw DomainError("unknown --rho-kind \"" + opt.rho_kind + "\"");
        FixerResult res =
            find_fixing_morphism(parse_quadratic(opt.alpha), kind, opt.ceiling, opt.max_depth);
        // The characteristic-word search runs over {phi0, phi1}; report it
        // in those names (the dual search above 1/2 stays with psi labels).
        bool phi_names = kind == RhoKind::Alpha && !res.word.empty() &&
                         (res.word.front() == 1 || res.word.front() == 3);
        if (opt.format == "json") {
            ordered_json j{{"generator_word", format_generator_word(res.word, phi_names)},
                           {"morphism", format_morphism(res.morphism)},
                           {"squared", res.squared},
                           {"alpha", format_quadratic(res.alpha)},
                           {"rho", format_quadratic(res.rho)}};
            out << j.dump() << "\n";
            return 0;
        }
        out << "word: " << format_generator_word(res.word, phi_names) << "\n";
        out << "morphism: " << format_morphism(res.morphism) << "\n";
        if (res.squared) out << "squared: true\n";
        return 0;
    }
    if (sub == "lozenge") {
        check_format(opt, {"plain", "json"});
        QuadraticNumber alpha = parse_quadratic(opt.alpha);
        QuadraticNumber rho = parse_quadratic(opt.rho);
        LozengeReport rep = lozenge_report(alpha, rho, opt.len);
        if (opt.format == "json") {
            ordered_json j;
            j["index"] = rep.index ? ordered_json(to_int64(*rep.index)) : ordered_json(nullptr);
            j["differing"] = ordered_json::array();
            for (std::size_t p : rep.differing_positions)
                j["differing"].push_back(static_cast<long long>(p));
            out << j.dump() << "\n";
            return 0;
        }
        out << "index: " << (rep.index ? rep.index->str() : "none") << "\n";
        out << "differ:";
        for (std::size_t p : rep.differing_positions) out << " " << p;
        out << "\n";
        return 0;
    }
    throw DomainError("unknown subcommand");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Sturmian words, fixing morphisms, and their binary trees"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) { cmd->add_option("--format", opt.format); };

    CLI::App* word = app.add_subcommand("word", "Generate a rotation word prefix");
    word->add_option("--alpha", opt.alpha)->required();
    word->add_option("--rho", opt.rho);
    word->add_option("--len", opt.len);
    word->add_flag("--ceiling", opt.ceiling);
    add_format(word);

    CLI::App* cf = app.add_subcommand("cf", "Continued fraction with period detection");
    cf->add_option("--x", opt.x)->required();
    cf->add_option("--max-steps", opt.max_steps);
    add_format(cf);

    CLI::App* sturm = app.add_subcommand("sturm", "Sturm-number test and expansion shape");
    sturm->add_option("--x", opt.x)->required();
    sturm->add_option("--max-steps", opt.max_steps);
    add_format(sturm);

    CLI::App* invariant = app.add_subcommand("invariant", "Substitution invariance of (alpha, rho)");
    invariant->add_option("--alpha", opt.alpha)->required();
    invariant->add_option("--rho", opt.rho)->required();

    CLI::App* tree = app.add_subcommand("tree", "Export a labeled binary tree");
    tree->add_option("--kind", opt.kind)->required();
    tree->add_option("--depth", opt.depth)->required();
    tree->add_option("--depth-cap", opt.depth_cap);
    tree->add_option("--format", opt.format);

    CLI::App* locate = app.add_subcommand("locate", "Address of a fraction in the harmonic tree");
    locate->add_option("--fraction", opt.fraction)->required();

    CLI::App* fix = app.add_subcommand("fix", "Fixed-point prefix of a morphism");
    fix->add_option("--morphism", opt.morphism)->required();
    fix->add_option("--len", opt.len);
    fix->add_option("--letter", opt.letter);

    CLI::App* check = app.add_subcommand("check", "Test whether a morphism fixes a word");
    check->add_option("--morphism", opt.morphism)->required();
    check->add_option("--alpha", opt.alpha)->required();
    check->add_option("--rho", opt.rho);
    check->add_option("--len", opt.len)->default_val(300);
    check->add_flag("--ceiling", opt.ceiling);

    CLI::App* conj = app.add_subcommand("conjugate-psi", "Shift conjugate of a fixer of c_alpha");
    conj->add_option("--morphism", opt.morphism)->required();

    CLI::App* dec = app.add_subcommand("decompose", "Factor a morphism over a generator pair");
    dec->add_option("--morphism", opt.morphism)->required();
    dec->add_option("--set", opt.set)->required();

    CLI::App* solve = app.add_subcommand("solve", "Solve T(x,y) = (x,y) for a generator word");
    solve->add_option("--word", opt.word)->required();
    add_format(solve);

    CLI::App* find = app.add_subcommand("find", "Search for a fixing morphism");
    find->add_option("--alpha", opt.alpha)->required();
    find->add_option("--rho-kind", opt.rho_kind)->required();
    find->add_flag("--ceiling", opt.ceiling);
    find->add_option("--max-depth", opt.max_depth);
    add_format(find);

    CLI::App* lozenge = app.add_subcommand("lozenge", "Floor/ceiling difference analysis");
    lozenge->add_option("--alpha", opt.alpha)->required();
    lozenge->add_option("--rho", opt.rho)->required();
    lozenge->add_option("--len", opt.len)->default_val(500);
    add_format(lozenge);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        return run_parsed(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const NotFoundError& e) {
        err << "not found: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace sturmkit::cli
