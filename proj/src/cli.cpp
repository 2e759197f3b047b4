#include "supercoinv/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "supercoinv/verify.hpp"

namespace supercoinv {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int n = 3;
    std::optional<int> k;
    std::optional<int> j;
    std::optional<int> m;
    std::optional<int> degree_bound;
    std::string cache_dir;
    std::string out_path;
    std::string format = "json";
    int jobs = 1;
    std::optional<size_t> ceiling;
    std::string envelope_path;
    std::string series = "all";
    std::string check_id;
    std::string input_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Options& o, std::ostream& out, const std::string& text)
{
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path);
    if (!f)
        throw UsageError("cannot write " + o.out_path);
    f << text;
}

int field_int(const Json& j, const char* name)
{
    if (!j.contains(name) || !j.at(name).is_number_integer())
        throw ParseError(std::string("missing integer field \"") + name + "\"");
    return j.at(name).get<int>();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void configure_engines(const Options& o)
{
    EngineOptions& e = default_engine_options();
    e.cache_dir = resolve_cache_dir(o.cache_dir);
    e.jobs = o.jobs;
    e.ceiling = o.ceiling.value_or(EngineOptions{}.ceiling);
    reset_shared_engines();
}

Json character_series_json(CoinvariantEngine& engine)
{
    engine.run_to_termination();
    const auto classes = conjugacy_classes(engine.context().n);
    Json out = Json::array();
    for (const auto& d : engine.computed_degrees()) {
        if (engine.component(d).dim() == 0)
            continue;
        Json traces = Json::object();
        for (const auto& rho : classes)
            traces[rho.rho.str()] = engine.quotient_character(d, rho).str();
        out.push_back(Json{{"deg", to_json(d)}, {"traces", traces}});
    }
    return out;
}

int run_compute(const Options& o, std::ostream& out)
{
    const int k = o.k.value_or(1), j = o.j.value_or(0);
    CoinvariantEngine& engine = shared_engine(o.n, k, j);
    const bool all = o.series == "all";
    const bool want_h = all || o.series == "hilbert";
    const bool want_f = all || o.series == "frobenius";
    const bool want_c = all || o.series == "character";
    std::ostringstream os;
    if (o.format == "json") {
        Json j_out{{"n", o.n}, {"k", k}, {"j", j}};
        if (want_h)
            j_out["hilbert"] = to_json(engine.hilbert_series());
        if (want_f)
            j_out["frobenius"] = to_json(engine.frobenius_series());
        if (want_c)
            j_out["characters"] = character_series_json(engine);
        os << dump(j_out);
    }
    else if (o.format == "text") {
        if (want_h)
            os << pretty(engine.hilbert_series()) << "\n";
        if (want_f)
            os << frobenius_text(engine.frobenius_series());
        if (want_c)
            for (const auto& c : character_series_json(engine)) {
                os << pretty(monomial_of(Alphabet{k, j, 0}, multidegree_from_json(c["deg"]))) << ":";
                for (const auto& [rho, v] : c["traces"].items())
                    os << " " << rho << "=" << v.get<std::string>();
                os << "\n";
            }
    }
    else {
        if (want_h)
            os << (all ? "# hilbert\n" : "") << qupoly_csv(engine.hilbert_series());
        if (want_f)
            os << (all ? "# frobenius\n" : "") << frobenius_csv(engine.frobenius_series());
        if (want_c) {
            if (all)
                os << "# characters\n";
            os << "deg,class,trace\n";
            for (const auto& c : character_series_json(engine))
                for (const auto& [rho, v] : c["traces"].items())
                    os << "\"" << multidegree_from_json(c["deg"]).str() << "\",\"" << rho << "\"," << v.get<std::string>() << "\n";
        }
    }
    emit(o, out, os.str());
    return 0;
}

CoeffTable bounded(CoeffTable t, std::optional<int> degree_bound)
{
    if (!degree_bound)
        return t;
    for (auto it = t.entries.begin(); it != t.entries.end();)
        it = it->first.first.size() > *degree_bound ? t.entries.erase(it) : std::next(it);
    return t;
}

int run_expand(const Options& o, std::ostream& out)
{
    const int k = o.k.value_or(1), j = o.j.value_or(1);
    CoeffTable t = bounded(coeff_table(shared_engine(o.n, k, j).frobenius_series()), o.degree_bound);
    if (o.format == "json")
        emit(o, out, dump(to_json(t)));
    else if (o.format == "csv")
        emit(o, out, coeff_table_csv(t));
    else
        emit(o, out, coeff_table_text(t));
    return 0;
}

std::string report_line(const CheckReport& r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.params.dump();
    if (!r.pass)
        os << "  witness=" << r.witness.dump();
    os << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
    return os.str();
}

std::string reports_text(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    for (const auto& r : reports)
        os << report_line(r) << "\n";
    return os.str();
}

std::string reports_csv(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    os << "id,status,seconds,params,witness\n";
    auto quote = [](std::string s) {
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    for (const auto& r : reports)
        os << r.id << "," << (r.pass ? "pass" : "fail") << "," << r.seconds << "," << quote(r.params.dump()) << ","
           << quote(r.witness.dump()) << "\n";
    return os.str();
}

Envelope load_envelope(const Options& o)
{
    if (!o.envelope_path.empty())
        return Envelope::load(o.envelope_path);
    std::ifstream probe(SUPERCOINV_DEFAULT_ENVELOPE);
    Envelope env = probe ? Envelope::load(SUPERCOINV_DEFAULT_ENVELOPE) : Envelope::defaults();
    return env;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    Envelope env = load_envelope(o);
    if (o.ceiling) {
        // An explicit ceiling replaces the per-check size limits.
        env.ceiling = *o.ceiling;
        env.max_n.clear();
    }
    default_engine_options().ceiling = env.ceiling;
    reset_shared_engines();

    std::vector<std::string> ids;
    if (o.check_id == "all") {
        for (const auto& c : check_registry()) {
            if (env.admits(c.id, o.n))
                ids.push_back(c.id);
            else
                err << "skipping " << c.id << ": n=" << o.n << " exceeds envelope max n=" << env.max_n.at(c.id) << "\n";
        }
    }
    else {
        if (!find_check(o.check_id))
            throw UsageError("unknown check id: " + o.check_id);
        ids.push_back(o.check_id);
    }
    CheckParams params;
    params.n = o.n;
    params.k = o.k;
    params.j = o.j;
    params.m = o.m;
    std::vector<CheckReport> reports = run_checks(ids, params, env, o.jobs);

    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        emit(o, out, dump(arr));
    }
    else if (o.format == "csv") {
        emit(o, out, reports_csv(reports));
    }
    else {
        emit(o, out, reports_text(reports));
    }
    for (const auto& r : reports)
        if (!r.pass)
            return kExitFail;
    return 0;
}

int run_cauchy(const Options& o, std::ostream& out)
{
    const int k = o.k.value_or(1), j = o.j.value_or(1), d = o.degree_bound.value_or(6);
    CauchyResult c = super_cauchy_check(k, j, o.n, d);
    Json res{{"k", k}, {"j", j}, {"n", o.n}, {"degree_bound", d}, {"status", c.pass ? "pass" : "fail"},
             {"first_failing_degree", c.first_failing_degree}};
    if (o.format == "json")
        emit(o, out, dump(res));
    else if (o.format == "csv")
        emit(o, out, "k,j,n,degree_bound,status,first_failing_degree\n" + std::to_string(k) + "," + std::to_string(j) + "," +
                         std::to_string(o.n) + "," + std::to_string(d) + "," + (c.pass ? "pass" : "fail") + "," +
                         std::to_string(c.first_failing_degree) + "\n");
    else
        emit(o, out, std::string(c.pass ? "PASS" : "FAIL") + "  super Cauchy k=" + std::to_string(k) + " j=" + std::to_string(j) +
                         " n=" + std::to_string(o.n) + " up to degree " + std::to_string(d) + "\n");
    return c.pass ? 0 : kExitFail;
}

int run_table(const Options& o, std::ostream& out)
{
    std::ifstream in(o.input_path);
    if (!in)
        throw UsageError("cannot open " + o.input_path);
    Json j;
    try {
        j = Json::parse(in);
    }
    catch (const Json::exception& e) {
        throw ParseError(o.input_path + ": " + e.what());
    }
    const bool csv = o.format == "csv";
    if (o.format == "json")
        throw UsageError("table renders text or csv");

    if (j.is_object() && j.contains("entries") && j.contains("source")) {
        CoeffTable t = coeff_table_from_json(j);
        emit(o, out, csv ? coeff_table_csv(t) : coeff_table_text(t));
    }
    else if (j.is_object() && j.contains("components")) {
        FrobeniusSeries f = frobenius_from_json(j);
        emit(o, out, csv ? frobenius_csv(f) : frobenius_text(f));
    }
    else if (j.is_object() && (j.contains("hilbert") || j.contains("frobenius"))) {
        Alphabet a{field_int(j, "k"), field_int(j, "j"), 0};
        std::string text;
        if (j.contains("hilbert")) {
            QUPoly h = qupoly_from_json(j.at("hilbert"), a);
            text += csv ? qupoly_csv(h) : pretty(h) + "\n";
        }
        if (j.contains("frobenius")) {
            FrobeniusSeries f = frobenius_from_json(j.at("frobenius"));
            text += csv ? frobenius_csv(f) : frobenius_text(f);
        }
        emit(o, out, text);
    }
    else if (j.is_array() || (j.is_object() && j.contains("status") && j.contains("id"))) {
        std::vector<CheckReport> reports;
        if (j.is_array())
            for (const auto& r : j)
                reports.push_back(check_report_from_json(r));
        else
            reports.push_back(check_report_from_json(j));
        emit(o, out, csv ? reports_csv(reports) : reports_text(reports));
    }
    else if (j.is_object() && j.contains("terms") && j.contains("degree_bound")) {
        SuperSchurExpansion e = expansion_from_json(j);
        std::ostringstream os;
        if (csv)
            os << "lambda,coeff\n";
        for (const auto& [lambda, c] : e.coeffs)
            os << (csv ? "\"" + lambda.str() + "\"," : "  s" + lambda.str() + "  ") << c.get_str() << "\n";
        emit(o, out, os.str());
    }
    else {
        throw ParseError(o.input_path + ": unrecognized artifact");
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact superspace coinvariant computations and checks", "supercoinv"};
    app.require_subcommand(1);
    Options o;

    auto add_ring = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of positions")->check(CLI::Range(1, 30));
        sub->add_option("--k", o.k, "bosonic sets")->check(CLI::Range(0, 8));
        sub->add_option("--j", o.j, "fermionic sets")->check(CLI::Range(0, 8));
    };
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out_path, "write output to this file");
        sub->add_option("--cache-dir", o.cache_dir, "on-disk ideal cache (SUPERCOINV_CACHE overrides)");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--ceiling", o.ceiling, "largest monomial space per multidegree")->check(CLI::PositiveNumber);
    };

    CLI::App* compute = app.add_subcommand("compute", "Hilbert, Frobenius and character series of one ring");
    add_ring(compute);
    add_common(compute, {"json", "csv", "text"});
    compute->add_option("--series", o.series, "which series")->check(CLI::IsMember({"all", "hilbert", "frobenius", "character"}));

    CLI::App* expand = app.add_subcommand("expand", "coefficient table c[lambda, mu] from one ring");
    add_ring(expand);
    add_common(expand, {"json", "csv", "text"});
    expand->add_option("--degree-bound", o.degree_bound, "keep |lambda| <= bound")->check(CLI::NonNegativeNumber);

    CLI::App* verify = app.add_subcommand("verify", "run checks by id, or all of them");
    verify->add_option("check", o.check_id, "check id or 'all'")->required();
    add_ring(verify);
    add_common(verify, {"json", "csv", "text"});
    verify->add_option("--m", o.m, "cancellation depth")->check(CLI::NonNegativeNumber);
    verify->add_option("--envelope", o.envelope_path, "envelope file (per-check max n)");

    CLI::App* cauchy = app.add_subcommand("cauchy", "truncated super Cauchy identity");
    cauchy->add_option("--n", o.n, "number of z letters")->check(CLI::Range(0, 30));
    cauchy->add_option("--k", o.k, "bosonic letters")->check(CLI::Range(0, 8));
    cauchy->add_option("--j", o.j, "fermionic letters")->check(CLI::Range(0, 8));
    cauchy->add_option("--degree-bound", o.degree_bound, "largest z degree")->check(CLI::NonNegativeNumber);
    cauchy->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cauchy->add_option("--out", o.out_path, "write output to this file");

    CLI::App* table = app.add_subcommand("table", "render a JSON artifact as text or CSV");
    table->add_option("file", o.input_path, "JSON artifact")->required();
    table->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "csv"}))->default_str("text");
    table->add_option("--out", o.out_path, "write output to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        if (!args.empty() && args.front() == "table")
            o.format = "text";
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (table->parsed())
            return run_table(o, out);
        if (cauchy->parsed())
            return run_cauchy(o, out);
        configure_engines(o);
        if (compute->parsed())
            return run_compute(o, out);
        if (expand->parsed())
            return run_expand(o, out);
        return run_verify(o, out, err);
    }
    catch (const ResourceExceeded& e) {
        err << "resource limit: " << e.what() << "\n";
    }
    catch (const OutsideEnvelope& e) {
        err << "outside envelope: " << e.what() << "\n";
    }
    catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    }
    catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    }
    catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
    }
    return kExitUsage;
}

int cli_main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace supercoinv
