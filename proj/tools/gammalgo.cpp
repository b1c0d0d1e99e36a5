#include "gammalgo/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace gammalgo;

namespace {

struct GlobalConfig
{
    unsigned digits = 12;
    std::size_t max_depth = 400;
    bool json = false;
    unsigned threads = 0;
};

Integer parse_integer(const std::string &text, const char *what)
{
    try {
        return Integer(text);
    } catch (const std::exception &) {
        throw std::invalid_argument(std::string(what) + ": not an integer: " + text);
    }
}

long long small_int(const Integer &x, const char *what)
{
    if (x > Integer("9000000000000000000") || x < Integer("-9000000000000000000")) {
        throw std::invalid_argument(std::string(what) + ": out of range");
    }
    return x.convert_to<long long>();
}

std::string zero_decimal(unsigned digits)
{
    return "0." + std::string(digits, '0');
}

void emit(const GlobalConfig &cfg, const Json &json_doc, const std::string &text)
{
    if (cfg.json) {
        std::cout << json_doc.dump() << "\n";
    } else {
        std::cout << text;
    }
    std::cout.flush();
}

int run_gamma(const GlobalConfig &cfg, const std::string &a_s, const std::string &b_s,
              bool minus_b, bool engine_only)
{
    Integer a = parse_integer(a_s, "--a");
    Integer b = parse_integer(b_s, "--b");

    if (minus_b) {
        // beta^2 = a*beta - b: both roots are positive, and for a Pisot
        // root the conjugate lies in (0, 1), which forces b <= a - 2.
        if (b < 1 || a < b + 2) {
            throw std::invalid_argument("gamma --minus-b: require 1 <= b <= a - 2");
        }
        Integer d = a * a - 4 * b;
        if (is_perfect_square(d)) {
            throw std::invalid_argument("gamma --minus-b: a^2 - 4b is a perfect square, beta is rational");
        }
        GammaDocument doc;
        doc.a = small_int(a, "--a");
        doc.b = small_int(b, "--b");
        doc.classification = "zero";
        doc.method = "positive-norm";
        doc.gamma_lo = zero_decimal(cfg.digits);
        doc.gamma_hi = zero_decimal(cfg.digits);
        doc.digits = cfg.digits;
        doc.depth = 0;
        std::string text = gamma_document_text(doc);
        text += "note: beta' > 0 for beta^2 = a*beta - b, so gamma = 0 "
                "(Akiyama 1998, Proposition 5)\n";
        emit(cfg, gamma_document_json(doc), text);
        return 0;
    }

    small_int(a, "--a");
    small_int(b, "--b");
    PisotBase base = make_base(a, b);
    GammaOptions opts;
    opts.digits = cfg.digits;
    opts.max_depth = cfg.max_depth;
    opts.threads = cfg.threads;
    opts.force_engine = engine_only;
    GammaResult result = gamma(base, opts);
    GammaDocument doc = make_gamma_document(result, cfg.digits);
    emit(cfg, gamma_document_json(doc), gamma_document_text(doc));
    return result.classification == GammaClass::Undecided ? 3 : 0;
}

int run_expand(const GlobalConfig &cfg, const std::string &a_s, const std::string &b_s,
               const std::string &x0_s, const std::string &x1_s, std::size_t n, bool minus_beta)
{
    PisotBase base = make_base(parse_integer(a_s, "--a"), parse_integer(b_s, "--b"));
    Integer x0 = parse_integer(x0_s, "--x0");
    Integer x1 = minus_beta ? Integer(-1) : parse_integer(x1_s, "--x1");
    DigitWord w = expand_prefix(base, ZBetaElem(x0, x1), n);

    Json j;
    j["a"] = small_int(base.a(), "--a");
    j["b"] = small_int(base.b(), "--b");
    j["x0"] = x0.str();
    j["x1"] = x1.str();
    j["n"] = n;
    j["digits"] = w.str();
    emit(cfg, j, w.str() + "\n");
    return 0;
}

int run_check(const GlobalConfig &cfg, const std::string &a_s, const std::string &b_s,
              const std::string &num_s, const std::string &den_s)
{
    PisotBase base = make_base(parse_integer(a_s, "--a"), parse_integer(b_s, "--b"));
    Integer num = parse_integer(num_s, "--num");
    Integer den = parse_integer(den_s, "--den");
    if (den < 1) {
        throw std::invalid_argument("check: require den >= 1");
    }
    Rational x(num, den);
    if (!(x >= 0 && x < 1)) {
        throw std::invalid_argument("check: fraction outside [0, 1)");
    }
    OrbitReport rep = is_purely_periodic(base, FieldPoint(x, Rational(0)));
    bool admissible = boost::multiprecision::gcd(rat_den(x), base.b()) == 1;

    std::ostringstream text;
    if (rep.purely_periodic) {
        text << "purely periodic (period " << rep.period_length << ")\n";
    } else {
        text << "not purely periodic (";
        if (!admissible) {
            text << "q not coprime to b; ";
        }
        text << "preperiod " << rep.preperiod_length << ", period " << rep.period_length
             << ")\n";
    }

    Json j;
    j["a"] = small_int(base.a(), "--a");
    j["b"] = small_int(base.b(), "--b");
    j["num"] = num.str();
    j["den"] = den.str();
    j["purely_periodic"] = rep.purely_periodic;
    j["preperiod"] = rep.preperiod_length;
    j["period"] = rep.period_length;
    j["admissible"] = admissible;
    emit(cfg, j, text.str());
    return 0;
}

int run_scan(const GlobalConfig &cfg, const std::string &a_s, const std::string &b_s,
             const std::string &qmax_s, const std::string &lo_s, const std::string &hi_s)
{
    PisotBase base = make_base(parse_integer(a_s, "--a"), parse_integer(b_s, "--b"));
    Integer qmax = parse_integer(qmax_s, "--qmax");
    Rational lo = parse_rational(lo_s);
    Rational hi = parse_rational(hi_s);
    std::vector<ScanHit> hits = scan(base, qmax, lo, hi, cfg.threads);

    std::ostringstream text;
    Json list = Json::array();
    for (const ScanHit &hit : hits) {
        std::string frac = rat_num(hit.x).str() + "/" + rat_den(hit.x).str();
        text << frac << " preperiod=" << hit.report.preperiod_length
             << " period=" << hit.report.period_length << "\n";
        Json item;
        item["x"] = frac;
        item["preperiod"] = hit.report.preperiod_length;
        item["period"] = hit.report.period_length;
        list.push_back(std::move(item));
    }
    Json j;
    j["a"] = small_int(base.a(), "--a");
    j["b"] = small_int(base.b(), "--b");
    j["qmax"] = small_int(qmax, "--qmax");
    j["count"] = hits.size();
    j["hits"] = std::move(list);
    emit(cfg, j, text.str());
    return 0;
}

int run_table(const GlobalConfig &cfg, std::size_t bmax, std::size_t ratio_max, bool reference)
{
    GammaOptions opts;
    opts.max_depth = cfg.max_depth;
    opts.threads = cfg.threads;
    TableGrid grid = table_grid(bmax, ratio_max, opts);
    if (reference) {
        std::vector<std::string> mismatches = diff_against_reference(grid);
        if (mismatches.empty()) {
            std::cout << "reference: match\n";
            return 0;
        }
        for (const std::string &m : mismatches) {
            std::cout << "reference mismatch " << m << "\n";
        }
        return 1;
    }
    emit(cfg, render_table_json(grid), render_table_text(grid));
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"certified gamma thresholds for quadratic Pisot beta-expansions"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("--digits", cfg.digits, "decimal digits to certify (default 12)")
        ->check(CLI::Range(1u, 100000u));
    app.add_option("--max-depth", cfg.max_depth,
                   "automaton-step cap for the frontier search (default 400)")
        ->envname("GAMMALGO_MAX_DEPTH")
        ->check(CLI::Range(std::size_t(1), std::size_t(100000000)));
    app.add_flag("--json", cfg.json, "emit a single JSON object instead of text");
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");

    std::string a_s, b_s;
    std::string x0_s, x1_s = "0", num_s, den_s, qmax_s, lo_s, hi_s;
    std::size_t n = 1, bmax = 12, ratio_max = 15;
    bool minus_b = false, engine_only = false, minus_beta = false, reference = false;

    CLI::App *cmd_gamma = app.add_subcommand("gamma", "compute gamma(beta) for beta^2 = a*beta + b");
    cmd_gamma->add_option("--a", a_s, "coefficient a")->required();
    cmd_gamma->add_option("--b", b_s, "coefficient b")->required();
    cmd_gamma->add_flag("--minus-b", minus_b, "use the positive-norm family beta^2 = a*beta - b");
    cmd_gamma->add_flag("--engine-only", engine_only,
                        "skip closed-form dispatch and run the frontier engine");

    CLI::App *cmd_expand = app.add_subcommand("expand", "beta-adic expansion prefix of x0 + x1*beta");
    cmd_expand->add_option("--a", a_s)->required();
    cmd_expand->add_option("--b", b_s)->required();
    cmd_expand->add_option("--x0", x0_s, "coordinate on 1")->required();
    CLI::Option *x1_opt = cmd_expand->add_option("--x1", x1_s, "coordinate on beta (default 0)");
    cmd_expand->add_option("--n", n, "prefix length")->required()->check(CLI::PositiveNumber);
    cmd_expand->add_flag("--minus-beta", minus_beta, "expand x0 - beta instead")->excludes(x1_opt);

    CLI::App *cmd_check = app.add_subcommand("check", "pure periodicity of the expansion of num/den");
    cmd_check->add_option("--a", a_s)->required();
    cmd_check->add_option("--b", b_s)->required();
    cmd_check->add_option("--num", num_s)->required();
    cmd_check->add_option("--den", den_s)->required();

    CLI::App *cmd_scan = app.add_subcommand(
        "scan", "list non-purely-periodic admissible rationals in [lo, hi) with q <= qmax");
    cmd_scan->add_option("--a", a_s)->required();
    cmd_scan->add_option("--b", b_s)->required();
    cmd_scan->add_option("--qmax", qmax_s)->required();
    cmd_scan->add_option("--lo", lo_s, "lower endpoint (fraction or decimal)")->required();
    cmd_scan->add_option("--hi", hi_s, "upper endpoint (fraction or decimal)")->required();

    CLI::App *cmd_table = app.add_subcommand("table", "0 / 1 / * grid over bases a = c*b");
    cmd_table->add_option("--bmax", bmax, "largest b (default 12)")->check(CLI::PositiveNumber);
    cmd_table->add_option("--ratio-max", ratio_max, "largest a/b (default 15)")
        ->check(CLI::PositiveNumber);
    cmd_table->add_flag("--reference", reference, "diff the computed grid against the embedded fixture");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gamma->parsed()) {
            return run_gamma(cfg, a_s, b_s, minus_b, engine_only);
        }
        if (cmd_expand->parsed()) {
            return run_expand(cfg, a_s, b_s, x0_s, x1_s, n, minus_beta);
        }
        if (cmd_check->parsed()) {
            return run_check(cfg, a_s, b_s, num_s, den_s);
        }
        if (cmd_scan->parsed()) {
            return run_scan(cfg, a_s, b_s, qmax_s, lo_s, hi_s);
        }
        if (cmd_table->parsed()) {
            return run_table(cfg, bmax, ratio_max, reference);
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
