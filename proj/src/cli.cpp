#include "bernden/cli.hpp"

#include "bernden/arith.hpp"
#include "bernden/errors.hpp"
#include "bernden/lab.hpp"
#include "bernden/primes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

namespace bernden::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Rendered {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    bool exact = true;
    json extra_meta = json::object();
    std::string csv;
    std::string plain;
    int code = kExitOk;
};

std::string join(const std::vector<std::uint64_t>& values, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

Natural parse_natural(const std::string& text, const char* what)
{
    Natural n;
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || n.set_str(text, 10) != 0)
        throw DomainError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    return n;
}

json factorization_json(const std::vector<std::uint64_t>& primes, const Natural& product)
{
    return json{{"primes", primes}, {"product", product.get_str()}};
}

// Primes up to n + 1 dividing d, plus whatever cofactor is left over.
std::pair<std::vector<std::uint64_t>, Natural> split_denominator(const Natural& d, std::uint64_t n)
{
    std::vector<std::uint64_t> primes;
    Natural rest = d;
    for (auto p : primes_up_to(n + 1)) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.push_back(p);
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p))
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
    }
    return {primes, rest};
}

Rendered cmd_denom(std::uint64_t n, const std::string& method, std::size_t cap, const Context& ctx)
{
    if (n == 0)
        throw DomainError("n must be >= 1");
    Rendered r;
    r.command = "denom";
    r.inputs = {{"n", n}, {"method", method}};

    std::ostringstream csv, plain;
    csv << "n,method,primes,product,agree\n";

    std::optional<DenominatorFactorization> formula;
    std::optional<Natural> oracle;
    if (method == "formula" || method == "both") {
        formula = denom_formula(n);
        r.result["formula"] = factorization_json(formula->primes, formula->product);
        plain << "formula: " << (formula->primes.empty() ? "1" : join(formula->primes, " * ")) << " = "
              << formula->product.get_str() << "\n";
    }
    if (method == "oracle" || method == "both") {
        std::shared_ptr<const BernoulliTable> table = ctx.bernoulli_override;
        if (!table) {
            if (n > cap)
                throw DomainError("n = " + std::to_string(n) + " exceeds the Bernoulli cap " + std::to_string(cap));
            table = n <= kDefaultBernoulliCap ? BernoulliCache::global().up_to(n)
                                               : std::make_shared<const BernoulliTable>(bernoulli_numbers(n, cap));
        }
        oracle = poly_denominator(bt_poly(n, *table));
        auto [primes, cofactor] = split_denominator(*oracle, n);
        json o = factorization_json(primes, *oracle);
        if (cofactor != 1)
            o["cofactor"] = cofactor.get_str();
        r.result["oracle"] = std::move(o);
        plain << "oracle:  " << (primes.empty() ? "1" : join(primes, " * "))
              << (cofactor != 1 ? " * " + cofactor.get_str() : std::string()) << " = " << oracle->get_str() << "\n";
    }

    std::string agree_cell;
    if (formula && oracle) {
        const bool agree = formula->product == *oracle;
        r.result["agree"] = agree;
        agree_cell = agree ? "true" : "false";
        plain << (agree ? "agree" : "DISAGREE") << "\n";
        if (!agree)
            r.code = kExitFalsified;
    }
    if (formula)
        csv << n << ",formula," << join(formula->primes, ";") << "," << formula->product.get_str() << "," << agree_cell << "\n";
    if (oracle) {
        const auto primes = split_denominator(*oracle, n).first;
        csv << n << ",oracle," << join(primes, ";") << "," << oracle->get_str() << "," << agree_cell << "\n";
    }
    r.csv = csv.str();
    r.plain = plain.str();
    return r;
}

Rendered cmd_frac(const std::string& n_text, std::uint64_t p)
{
    const Natural n = parse_natural(n_text, "n");
    const FracSum fs = frac_sum(n, p);
    const auto expansion = digit_expansion(n, p);

    Rendered r;
    r.command = "frac";
    r.inputs = {{"n", n.get_str()}, {"p", p}};
    r.result = {{"frac_sum", to_string(fs.value)},
                {"digit_sum", expansion.digit_sum()},
                {"digits", expansion.digits()},
                {"gt_one", fs.exceeds_one()}};
    r.csv = "n,p,frac_sum,digit_sum,gt_one\n" + n.get_str() + "," + std::to_string(p) + "," + to_string(fs.value) + ","
          + std::to_string(expansion.digit_sum()) + "," + (fs.exceeds_one() ? "true" : "false") + "\n";
    r.plain = "<" + n.get_str() + "|" + std::to_string(p) + "> = " + to_string(fs.value) + "\ndigit sum "
            + std::to_string(expansion.digit_sum()) + "\n" + (fs.exceeds_one() ? "> 1" : "<= 1") + "\n";
    return r;
}

Rendered cmd_verify(const std::string& suite, std::uint64_t min_n, std::uint64_t max_n, unsigned jobs)
{
    std::vector<TheoremId> ids;
    if (suite == "all") {
        ids = all_theorems();
    } else if (auto id = theorem_from_name(suite)) {
        ids.push_back(*id);
    } else {
        throw DomainError("unknown suite '" + suite + "'");
    }

    Rendered r;
    r.command = "verify";
    r.inputs = {{"suite", suite}, {"min_n", min_n}, {"max_n", max_n}};

    std::ostringstream csv, plain;
    csv << "record,suite,range,cases_total,cases_failed,n,p,lhs,rhs\n";
    json suites = json::array();
    bool all_passed = true;
    for (auto id : ids) {
        const auto report = run_suite(id, min_n, max_n, VerifyOptions{jobs, std::nullopt});
        const std::string name(theorem_name(id));
        json failures = json::array();
        for (const auto& f : report.failures)
            failures.push_back({{"n", f.n}, {"p", f.p}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        suites.push_back({{"suite", name},
                          {"range", report.range},
                          {"cases_total", report.cases_total},
                          {"cases_failed", report.cases_failed()},
                          {"passed", report.passed()},
                          {"failures", std::move(failures)}});
        r.extra_meta["suite_elapsed_ms"][name] = report.elapsed.count();
        all_passed = all_passed && report.passed();

        csv << "summary," << name << "," << csv_field(report.range) << "," << report.cases_total << ","
            << report.cases_failed() << ",,,,\n";
        for (const auto& f : report.failures)
            csv << "failure," << name << ",,,," << f.n << "," << f.p << "," << csv_field(f.lhs) << "," << csv_field(f.rhs) << "\n";
        plain << (report.passed() ? "PASS " : "FAIL ") << name << "  " << report.range << "  cases "
              << report.cases_total << "  failed " << report.cases_failed() << "  (" << report.elapsed.count() << " ms)\n";
        for (const auto& f : report.failures)
            plain << "  n=" << f.n << " p=" << f.p << ": " << f.lhs << " | " << f.rhs << "\n";
    }
    r.result = {{"passed", all_passed}, {"suites", std::move(suites)}};
    r.csv = csv.str();
    r.plain = plain.str();
    r.code = all_passed ? kExitOk : kExitFalsified;
    return r;
}

Rendered cmd_scan(const std::string& n_text, const std::vector<std::uint64_t>& primes, std::uint64_t k_cap)
{
    const Natural n = parse_natural(n_text, "n");
    const auto scan = power_scan(n, primes, k_cap);

    Rendered r;
    r.command = "scan";
    r.inputs = {{"n", n.get_str()}, {"primes", scan.prime_set}, {"k_cap", k_cap}};
    json min_k = json::object(), stable_k = json::object();
    for (const auto& [p, k] : scan.per_prime_min_k)
        min_k[std::to_string(p)] = k;
    for (const auto& [p, k] : scan.per_prime_stable_k)
        stable_k[std::to_string(p)] = k;
    r.result = {{"per_prime_min_k", std::move(min_k)},
                {"per_prime_stable_k", std::move(stable_k)},
                {"first_exceedance_max", scan.first_exceedance_max},
                {"M", scan.M},
                {"k_cap", scan.k_cap},
                {"capped", scan.capped}};

    std::ostringstream csv, plain;
    csv << "p,min_k,stable_k\n";
    for (auto p : scan.prime_set) {
        auto cell = [p](const std::map<std::uint64_t, std::uint64_t>& m) {
            auto it = m.find(p);
            return it == m.end() ? std::string() : std::to_string(it->second);
        };
        csv << p << "," << cell(scan.per_prime_min_k) << "," << cell(scan.per_prime_stable_k) << "\n";
        plain << "p=" << p << "  min_k=" << (cell(scan.per_prime_min_k).empty() ? "-" : cell(scan.per_prime_min_k))
              << "  stable_k=" << (cell(scan.per_prime_stable_k).empty() ? "-" : cell(scan.per_prime_stable_k)) << "\n";
    }
    plain << "M=" << scan.M << (scan.capped ? "  (capped at k=" + std::to_string(k_cap) + ")" : std::string()) << "\n";
    r.csv = csv.str();
    r.plain = plain.str();
    r.code = scan.capped ? kExitCapped : kExitOk;
    return r;
}

Rendered cmd_growth(const std::string& n_text, std::uint64_t p, std::uint64_t k_cap)
{
    const Natural n = parse_natural(n_text, "n");
    const auto series = digit_sum_growth(n, p, k_cap);

    Rendered r;
    r.command = "growth";
    r.inputs = {{"n", n.get_str()}, {"p", p}, {"k_cap", k_cap}};
    json points = json::array();
    std::ostringstream csv, plain;
    csv << "k,digit_sum,running_max\n";
    for (const auto& pt : series.points) {
        points.push_back({{"k", pt.k}, {"digit_sum", pt.digit_sum}, {"running_max", pt.running_max}});
        csv << pt.k << "," << pt.digit_sum << "," << pt.running_max << "\n";
        plain << "k=" << pt.k << "  s_p(n^k)=" << pt.digit_sum << "  max=" << pt.running_max << "\n";
    }
    r.result = {{"series", std::move(points)},
                {"record_count", series.record_count},
                {"running_max_increased", series.running_max_increased},
                {"note", "empirical sample; a finite series cannot establish the limit"}};
    r.csv = csv.str();
    r.plain = plain.str();
    return r;
}

Rendered cmd_bernoulli(std::size_t max, std::size_t cap)
{
    const auto table = bernoulli_numbers(max, cap);
    Rendered r;
    r.command = "bernoulli";
    r.inputs = {{"max", max}};
    json values = json::array();
    std::ostringstream csv, plain;
    csv << "k,B_k\n";
    for (std::size_t k = 0; k <= table.max_index(); ++k) {
        const auto text = to_string(table[k]);
        values.push_back(text);
        csv << k << "," << text << "\n";
        plain << "B_" << k << " = " << text << "\n";
    }
    r.result = {{"values", std::move(values)}};
    r.csv = csv.str();
    r.plain = plain.str();
    return r;
}

Rendered cmd_stewart(const std::string& n_text, double c)
{
    const Natural n = parse_natural(n_text, "n");
    const double bound = stewart_bound(n, c);
    Rendered r;
    r.command = "stewart";
    r.exact = false;
    r.inputs = {{"n", n.get_str()}, {"c", c}};
    r.result = {{"bound", bound}};
    std::ostringstream num;
    num.precision(17);
    num << bound;
    r.csv = "n,c,bound\n" + n.get_str() + "," + json(c).dump() + "," + num.str() + "\n";
    r.plain = "log log n / (log log log n + c) - 1 = " + num.str() + "\n";
    return r;
}

std::string render(const Rendered& r, const std::string& format, std::chrono::milliseconds elapsed)
{
    if (format == "csv")
        return r.csv;
    if (format == "plain")
        return r.plain;
    json meta = {{"elapsed_ms", elapsed.count()}, {"version", kVersion}};
    for (const auto& [key, value] : r.extra_meta.items())
        meta[key] = value;
    json doc = {{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"exact", r.exact}, {"meta", std::move(meta)}};
    return doc.dump(2) + "\n";
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text)
{
    std::vector<std::uint64_t> primes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const Natural v = parse_natural(item, "prime");
        if (!v.fits_ulong_p())
            throw DomainError("prime out of range: " + item);
        primes.push_back(v.get_ui());
    }
    if (primes.empty())
        throw DomainError("--primes needs at least one prime");
    return primes;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Context& ctx)
{
    CLI::App app{"Denominators of Bernoulli polynomials and fractional-part sums"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    std::string output_path;
    std::size_t bernoulli_cap = kDefaultBernoulliCap;
    app.add_option("-o,--output", output_path, "Write the result to this file instead of stdout");
    app.add_option("--bernoulli-cap", bernoulli_cap, "Largest Bernoulli index computed")
        ->envname("BERNDEN_BERNOULLI_CAP")
        ->capture_default_str();

    std::string format = "json";
    auto add_format = [&format](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
    };

    std::uint64_t denom_n = 0;
    std::string method = "formula";
    auto* denom = app.add_subcommand("denom", "Denominator of B_n(x) - B_n");
    denom->add_option("n", denom_n, "Index n >= 1")->required();
    denom->add_option("--method", method, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();
    add_format(denom, {"json", "csv", "plain"});

    std::string frac_n;
    std::uint64_t frac_p = 0;
    auto* frac = app.add_subcommand("frac", "Fractional-part sum <n|p>");
    frac->add_option("n", frac_n)->required();
    frac->add_option("p", frac_p)->required();
    add_format(frac, {"json", "csv", "plain"});

    std::string suite;
    std::uint64_t min_n = 1, max_n = 300;
    unsigned jobs = 0;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite, "main, bound, squarefree, binom, fracsum, clausen, witness, btnp or all")->required();
    verify->add_option("--min-n", min_n)->capture_default_str();
    verify->add_option("--max-n", max_n)->capture_default_str();
    verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->envname("BERNDEN_JOBS")->capture_default_str();
    add_format(verify, {"json", "csv", "plain"});

    std::string scan_n, scan_primes;
    std::uint64_t k_cap = kDefaultKCap;
    auto* scan = app.add_subcommand("scan", "Smallest powers n^k with <n^k|p> > 1");
    scan->add_option("n", scan_n)->required();
    scan->add_option("--primes", scan_primes, "Comma-separated primes")->required();
    scan->add_option("--k-cap", k_cap)->envname("BERNDEN_K_CAP")->capture_default_str();
    add_format(scan, {"json", "csv", "plain"});

    std::string growth_n;
    std::uint64_t growth_p = 0, growth_cap = kDefaultKCap;
    auto* growth = app.add_subcommand("growth", "Digit sums s_p(n^k) for k = 1..k-cap");
    growth->add_option("n", growth_n)->required();
    growth->add_option("p", growth_p)->required();
    growth->add_option("--k-cap", growth_cap)->envname("BERNDEN_K_CAP")->capture_default_str();
    add_format(growth, {"json", "csv", "plain"});

    std::size_t bern_max = 0;
    auto* bern = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_0..B_max");
    bern->add_option("--max", bern_max)->required();
    add_format(bern, {"json", "csv"});

    std::string stewart_n;
    double stewart_c = 0;
    auto* stewart = app.add_subcommand("stewart", "Evaluate Stewart's digit-sum lower bound");
    stewart->add_option("n", stewart_n)->required();
    stewart->add_option("--c", stewart_c, "Positive constant")->required();
    add_format(stewart, {"json", "csv", "plain"});

    std::vector<std::string> argv_storage{"bernden"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto start = Clock::now();
    Rendered rendered;
    try {
        if (*denom)
            rendered = cmd_denom(denom_n, method, bernoulli_cap, ctx);
        else if (*frac)
            rendered = cmd_frac(frac_n, frac_p);
        else if (*verify)
            rendered = cmd_verify(suite, min_n, max_n, jobs);
        else if (*scan)
            rendered = cmd_scan(scan_n, parse_prime_list(scan_primes), k_cap);
        else if (*growth)
            rendered = cmd_growth(growth_n, growth_p, growth_cap);
        else if (*bern)
            rendered = cmd_bernoulli(bern_max, bernoulli_cap);
        else if (*stewart)
            rendered = cmd_stewart(stewart_n, stewart_c);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    const std::string text = render(rendered, format, elapsed);

    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << output_path << "\n";
            return kExitUsage;
        }
        file << text;
    }
    return rendered.code;
}

} // namespace bernden::cli
