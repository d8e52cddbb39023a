#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "sgx/families.hpp"
#include "sgx/forbidden.hpp"
#include "sgx/io.hpp"
#include "sgx/report.hpp"
#include "sgx/search.hpp"
#include "sgx/spectra.hpp"
#include "sgx/verify.hpp"

namespace sgx::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t parse_size(const std::string& text, const std::string& what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError(what + ": '" + text + "' is not a non-negative integer");
    return v;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const std::size_t v = parse_size(text, "range");
        return {v, v};
    }
    const std::size_t lo = parse_size(text.substr(0, colon), "range"), hi = parse_size(text.substr(colon + 1), "range");
    if (lo > hi) throw UsageError("range '" + text + "': lo exceeds hi");
    return {lo, hi};
}

nlohmann::json big(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

struct Options {
    std::string format = "table";
    bool timing = false;
    double eig_tol = kDefaultEigenTol;
    std::optional<double> tol;

    std::string family, file, output, forbid, target, range;
    std::size_t n = 0, top = 1, restarts = 1000;
    std::optional<std::size_t> workers;
    std::uint64_t seed = 42;
    std::vector<std::string> exclude;
};

std::size_t resolve_workers(const Options& o) {
    if (o.workers) {
        if (*o.workers == 0) throw UsageError("--workers must be at least 1");
        return *o.workers;
    }
    if (const char* env = std::getenv("SGX_WORKERS")) {
        const std::size_t w = parse_size(env, "SGX_WORKERS");
        if (w == 0) throw UsageError("SGX_WORKERS must be at least 1");
        return w;
    }
    return 1;
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    int construct() {
        const SignedGraph g = parse_family_spec(o_.family).build();
        if (!o_.output.empty()) {
            write_sg_file(g, o_.output);
            if (json()) emit({{"kind", "construct"}, {"family", o_.family}, {"output", o_.output}});
            return 0;
        }
        if (json()) {
            emit({{"kind", "construct"}, {"family", o_.family}, {"graph", to_json(g)}});
        } else {
            out_ << write_sg(g);
        }
        return 0;
    }

    int index() {
        const double v = sgx::index(read_sg_file(o_.file), o_.eig_tol);
        if (json())
            emit({{"kind", "index"}, {"index", v}});
        else
            out_ << format_index(v) << "\n";
        return 0;
    }

    int spectrum() {
        const Spectrum s = sgx::spectrum(read_sg_file(o_.file), o_.eig_tol);
        if (json()) {
            emit({{"kind", "spectrum"}, {"values", s.values}, {"index", s.index()},
                  {"spectral_radius", s.spectral_radius()}});
        } else {
            for (std::size_t i = 0; i < s.values.size(); ++i) out_ << (i ? " " : "") << format_index(s.values[i]);
            out_ << "\n";
        }
        return 0;
    }

    int charpoly() {
        const Polynomial p = char_poly(read_sg_file(o_.file));
        if (json()) {
            nlohmann::json c = nlohmann::json::array();
            for (const auto& x : p.coeffs()) c.push_back(big(x));
            emit({{"kind", "charpoly"}, {"coefficients", c}, {"text", to_string(p)}});
        } else {
            out_ << to_string(p) << "\n";
        }
        return 0;
    }

    int triangles() {
        const auto tri = unbalanced_triangles(read_sg_file(o_.file));
        if (json()) {
            emit({{"kind", "triangles"}, {"count", tri.size()}, {"triangles", tri}});
        } else {
            out_ << "unbalanced triangles: " << tri.size() << "\n";
            for (const auto& t : tri) out_ << t[0] << " " << t[1] << " " << t[2] << "\n";
        }
        return 0;
    }

    int check() {
        const ForbiddenSpec spec = parse_forbidden_spec(o_.forbid);
        const SignedGraph g = read_sg_file(o_.file);
        const bool free = is_forbidden_free(g, spec);
        const std::size_t tri = count_unbalanced_triangles(g);
        const auto book = book_count(g);
        const auto friendship = friendship_count(g);
        if (json()) {
            emit({{"kind", "check"},
                  {"forbid", spec.str()},
                  {"free", free},
                  {"unbalanced_triangles", tri},
                  {"book", {{"count", book.count}, {"edge", {book.edge.u, book.edge.v}}}},
                  {"friendship", {{"count", friendship.count}, {"vertex", friendship.vertex}}}});
            return 0;
        }
        out_ << "free: " << (free ? "true" : "false") << " (";
        switch (spec.kind) {
            case ForbiddenSpec::Kind::TC3:
            case ForbiddenSpec::Kind::C3: out_ << "unbalanced triangles = " << tri; break;
            case ForbiddenSpec::Kind::Book:
                out_ << "book = " << book.count << " on edge " << book.edge.u << "-" << book.edge.v;
                break;
            case ForbiddenSpec::Kind::Friendship:
                out_ << "friendship = " << friendship.count << " at vertex " << friendship.vertex;
                break;
        }
        out_ << ")\n";
        return 0;
    }

    int enumerate() {
        const auto r = enumerate_extremal(o_.n, parse_forbidden_spec(o_.forbid), o_.top, resolve_workers(o_));
        if (json())
            out_ << to_json(r, o_.timing).dump(2) << "\n";
        else
            out_ << to_table(r, o_.timing);
        return 0;
    }

    int search() {
        LocalSearchOptions options;
        options.seed = o_.seed;
        options.restarts = o_.restarts;
        for (const auto& e : o_.exclude) options.exclude.push_back(parse_classification_tag(e));
        const auto r = local_search(o_.n, parse_forbidden_spec(o_.forbid), options);
        if (json())
            out_ << to_json(r, o_.timing).dump(2) << "\n";
        else
            out_ << to_table(r, o_.timing);
        return 0;
    }

    int verify() {
        const auto [lo, hi] = parse_range(o_.range);
        VerifyReport r;
        const std::string& t = o_.target;
        if (t == "identities") r = verify_identities(lo, hi);
        else if (t == "gamma-root") r = verify_gamma_root(lo, hi, o_.tol.value_or(1e-8));
        else if (t == "lq1") r = verify_gamma_sigma_crossing(lo, hi, o_.tol.value_or(1e-9));
        else if (t == "lqq1") r = verify_gamma_u1(lo, hi, o_.tol.value_or(1e-9));
        else if (t == "c3bound") r = verify_c3_bound(lo, hi, o_.tol.value_or(1e-9));
        else if (t == "thm1") r = verify_extremal_exhaustive(lo, hi, resolve_workers(o_), o_.tol.value_or(1e-9));
        else if (t == "thm2") r = verify_runner_up_search(lo, hi, o_.seed, o_.restarts, o_.tol.value_or(1e-9));
        else throw UsageError("unknown verify target '" + t + "'");
        if (json())
            out_ << to_json(r, o_.timing).dump(2) << "\n";
        else
            out_ << to_table(r, o_.timing);
        return r.passed ? 0 : 1;
    }

private:
    bool json() const { return o_.format == "json"; }

    void emit(nlohmann::json j) {
        j["schema"] = kReportSchema;
        out_ << j.dump(2) << "\n";
    }

    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Signed-graph spectral toolkit", "sgx"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--timing", o.timing, "Include wall time and evaluation counts in reports");
    app.add_option("--eig-tol", o.eig_tol, "Off-diagonal norm at which the eigensolver stops (default 1e-12)");
    app.add_option("--tol", o.tol, "Comparison tolerance for verify targets (default depends on target)");

    auto* construct = app.add_subcommand("construct", "Build a named graph and write it as .sg");
    construct->add_option("family", o.family, "gamma:n,t | sigma:s,t,r | u1:n | knminus:n:u,v;.. | knplus:n")
        ->required();
    construct->add_option("-o,--output", o.output, "Output .sg path (default stdout)");

    CLI::App* file_commands[4];
    const char* names[4][2] = {{"index", "Largest adjacency eigenvalue, 9 decimals"},
                               {"spectrum", "All adjacency eigenvalues, descending"},
                               {"charpoly", "Exact characteristic polynomial"},
                               {"triangles", "Unbalanced triangles"}};
    for (int i = 0; i < 4; ++i) {
        file_commands[i] = app.add_subcommand(names[i][0], names[i][1]);
        file_commands[i]->add_option("file", o.file, ".sg input")->required();
    }

    auto* check = app.add_subcommand("check", "Test a graph against a forbidden configuration");
    check->add_option("--forbid", o.forbid, "tc3:t | book:t | friendship:t | c3")->required();
    check->add_option("file", o.file, ".sg input")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive extremal search (n <= 7)");
    enumerate->add_option("--n", o.n, "Order")->required();
    enumerate->add_option("--forbid", o.forbid, "Forbidden configuration")->required();
    enumerate->add_option("--top", o.top, "Classes to keep (ties with the last are kept too)");
    enumerate->add_option("--workers", o.workers, "Worker threads (default $SGX_WORKERS or 1)");

    auto* search = app.add_subcommand("search", "Seeded hill-climbing search");
    search->add_option("--n", o.n, "Order")->required();
    search->add_option("--forbid", o.forbid, "Forbidden configuration")->required();
    search->add_option("--seed", o.seed, "PRNG seed");
    search->add_option("--restarts", o.restarts, "Restart count");
    search->add_option("--exclude", o.exclude, "Class never accepted as incumbent, e.g. Gamma(9,5)");

    auto* verify = app.add_subcommand("verify", "Run a verification target over a range of orders");
    verify->add_option("--target", o.target, "identities | gamma-root | lq1 | lqq1 | c3bound | thm1 | thm2")
        ->required();
    verify->add_option("--range", o.range, "lo:hi")->required();
    verify->add_option("--workers", o.workers, "Worker threads for thm1");
    verify->add_option("--seed", o.seed, "PRNG seed for thm2");
    verify->add_option("--restarts", o.restarts, "Restarts per t for thm2");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "sgx: " << e.what() << "\n";
        return 2;
    }

    Runner runner(o, out);
    try {
        if (*construct) return runner.construct();
        if (*file_commands[0]) return runner.index();
        if (*file_commands[1]) return runner.spectrum();
        if (*file_commands[2]) return runner.charpoly();
        if (*file_commands[3]) return runner.triangles();
        if (*check) return runner.check();
        if (*enumerate) return runner.enumerate();
        if (*search) return runner.search();
        if (*verify) return runner.verify();
    } catch (const UsageError& e) {
        err << "sgx: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "sgx: " << e.what() << "\n";
        return 2;
    } catch (const GraphError& e) {
        err << "sgx: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        err << "sgx: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "sgx: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace sgx::cli
