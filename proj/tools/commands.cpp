#include "commands.hpp"

#include "slabh/complex_oracle.hpp"
#include "slabh/difference_eq.hpp"
#include "slabh/poly_io.hpp"
#include "slabh/random.hpp"
#include "slabh/slab_dirichlet.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

namespace slabh::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t max_grid_rows = 10'000'000;

json read_json_file(const fs::path& path)
{
    if (path.empty()) throw FormatError("no --input given");
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_atomically(const fs::path& path, const std::string& text)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o) throw std::runtime_error("cannot write " + tmp.string());
        o << text;
        if (!o.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output.empty())
        out << text;
    else
        write_atomically(cfg.output, text);
}

// Reports go to stdout unless stdout already carries the JSON document.
std::ostream& log_stream(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return cfg.output.empty() ? err : out;
}

int print_reports(const RunConfig& cfg, const std::vector<VerificationReport>& reports, std::ostream& log)
{
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.status == CheckStatus::pass;
        if (!cfg.quiet || r.status == CheckStatus::fail) log << format_report(r);
    }
    return ok ? exit_ok : exit_verification_failed;
}

json reports_json(const std::vector<VerificationReport>& reports)
{
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

VerificationReport renamed(VerificationReport r, std::string name)
{
    r.check = std::move(name);
    return r;
}

// A bare polynomial, or a solve-slab / solve-diffeq output document.
MultiPoly read_solution_poly(const json& j)
{
    if (j.is_object() && j.contains("terms")) return poly_from_json(j);
    if (j.is_object() && j.contains("solution")) return poly_from_json(j["solution"]);
    if (j.is_object() && j.contains("h")) return poly_from_json(j["h"]);
    throw FormatError("expected a polynomial or a document with \"solution\" or \"h\"");
}

Rational parse_grid_number(const std::string& s)
{
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::parse(s);
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (neg) whole.erase(0, 1);
    if (whole.empty() && frac.empty()) throw FormatError("malformed number \"" + s + "\"");
    if (whole.empty()) whole = "0";
    Rational num = Rational::parse(whole + frac);
    Rational value = num / pow(Rational(10), static_cast<unsigned>(frac.size()));
    return neg ? -value : value;
}

std::vector<VerificationReport> slab_reports(const MultiPoly& h, const SlabProblem& prob)
{
    std::vector<VerificationReport> reports{verify_boundary(h, prob)};
    if (is_harmonic(h)) {
        reports.push_back(renamed(even_reflection_identity(shift_t(h, prob.a())), "even_reflection_at_a"));
        if (prob.f0().is_zero()) reports.push_back(renamed(odd_wall_reflection(h, prob.a()), "odd_reflection_at_a"));
        if (prob.f1().is_zero()) reports.push_back(renamed(odd_wall_reflection(h, prob.b()), "odd_reflection_at_b"));
        if (prob.f0().is_zero() && prob.f1().is_zero()) reports.push_back(zero_data_rigidity(h, prob.a(), prob.b()));
    }
    return reports;
}

int solve_slab_one(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    SlabProblem prob = slab_problem_from_json(read_json_file(cfg.input));
    MultiPoly h = solve_slab(prob);
    auto reports = slab_reports(h, prob);
    json doc{{"problem", slab_problem_to_json(prob)}, {"solution", poly_to_json(h)}, {"reports", reports_json(reports)}};
    emit(cfg, doc.dump(2) + "\n", out);
    auto& log = log_stream(cfg, out, err);
    if (!cfg.quiet) log << "solution: " << h << '\n';
    return print_reports(cfg, reports, log);
}

int solve_diffeq_one(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    DiffEqProblem prob = diffeq_problem_from_json(read_json_file(cfg.input));
    DiffEqSolution sol = solve(prob);
    const auto& pv = sol.provenance;

    std::vector<VerificationReport> reports{
        verify_difference(sol.h, prob.g()),
        renamed(verify_difference(pv.h_even, pv.g_even), "difference_even_part"),
        renamed(verify_difference(pv.h_odd, pv.g_odd), "difference_odd_part"),
        VerificationReport::from_residuals("antiderivative", {{"derivative", derivative(pv.u, 0) - pv.g_odd},
                                                              {"laplacian", laplacian(pv.u)},
                                                              {"odd_part", pv.u - negate_t(pv.u)}})};

    json doc = diffeq_solution_to_json(sol);
    doc["g"] = poly_to_json(prob.g());
    doc["reports"] = reports_json(reports);
    emit(cfg, doc.dump(2) + "\n", out);
    auto& log = log_stream(cfg, out, err);
    if (!cfg.quiet) log << "solution: " << sol.h << '\n';
    return print_reports(cfg, reports, log);
}

template <typename Fn>
int guarded(Fn&& fn, std::ostream& err)
{
    try {
        return fn();
    } catch (const FormatError& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::logic_error& e) {
        err << "error: internal check failed: " << e.what() << '\n';
        return exit_verification_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    }
}

using SingleCommand = int (*)(const RunConfig&, std::ostream&, std::ostream&);

// Directory input: every *.json file is an independent instance written to
// the same file name under the output directory.
int run_maybe_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err, SingleCommand single)
{
    if (!fs::is_directory(cfg.input)) return guarded([&] { return single(cfg, out, err); }, err);
    if (cfg.output.empty()) {
        err << "error: directory input needs --output <directory>\n";
        return exit_bad_input;
    }
    fs::create_directories(cfg.output);

    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(cfg.input))
        if (entry.is_regular_file() && entry.path().extension() == ".json") inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());

    struct Outcome {
        int code;
        std::string log;
    };
    std::vector<std::future<Outcome>> jobs;
    for (const auto& path : inputs)
        jobs.push_back(std::async(std::launch::async, [&cfg, path, single] {
            RunConfig one = cfg;
            one.input = path;
            one.output = cfg.output / path.filename();
            std::ostringstream o, e;
            int code = guarded([&] { return single(one, o, e); }, e);
            return Outcome{code, path.filename().string() + ": exit " + std::to_string(code) + "\n" + o.str() + e.str()};
        }));

    int worst = exit_ok;
    for (auto& job : jobs) {
        Outcome r = job.get();
        worst = std::max(worst, r.code);
        if (!cfg.quiet || r.code != exit_ok) out << r.log;
    }
    return worst;
}

} // namespace

std::vector<GridAxis> parse_grid(const std::string& spec)
{
    std::vector<GridAxis> axes;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw FormatError("grid axis \"" + item + "\" must be var=lo:hi:step");
        std::string var = item.substr(0, eq);
        std::vector<std::string> parts;
        std::stringstream rs(item.substr(eq + 1));
        std::string part;
        while (std::getline(rs, part, ':')) parts.push_back(part);
        if (parts.size() != 3) throw FormatError("grid axis \"" + item + "\" must be var=lo:hi:step");
        GridAxis axis;
        try {
            axis = {var, parse_grid_number(parts[0]), parse_grid_number(parts[1]), parse_grid_number(parts[2])};
        } catch (const std::invalid_argument& e) {
            throw FormatError("grid axis \"" + item + "\": " + e.what());
        }
        if (axis.step.sign() <= 0) throw FormatError("grid axis \"" + var + "\" needs a positive step");
        if (axis.hi < axis.lo) throw FormatError("grid axis \"" + var + "\" has an empty range");
        axes.push_back(std::move(axis));
    }
    if (axes.empty()) throw FormatError("empty grid");
    return axes;
}

int cmd_solve_slab(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return run_maybe_batch(cfg, out, err, solve_slab_one);
}

int cmd_solve_diffeq(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return run_maybe_batch(cfg, out, err, solve_diffeq_one);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(
        [&] {
            json problem = read_json_file(cfg.input);
            if (cfg.solution.empty()) throw FormatError("verify needs --solution");
            MultiPoly h = read_solution_poly(read_json_file(cfg.solution));

            std::vector<VerificationReport> reports;
            if (problem.contains("g")) {
                DiffEqProblem prob = diffeq_problem_from_json(problem);
                if (h.dim() != prob.dim()) throw FormatError("solution dimension differs from problem");
                reports.push_back(verify_difference(h, prob.g()));
            } else {
                SlabProblem prob = slab_problem_from_json(problem);
                if (h.dim() != prob.dim()) throw FormatError("solution dimension differs from problem");
                reports.push_back(verify_boundary(h, prob));
            }
            if (!cfg.output.empty()) emit(cfg, reports_json(reports).dump(2) + "\n", out);
            return print_reports(cfg, reports, out);
        },
        err);
}

int cmd_oracle_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(
        [&] {
            DiffEqProblem prob = diffeq_problem_from_json(read_json_file(cfg.input));
            if (prob.dim() != 1) throw FormatError("oracle-compare needs d = 1");
            MultiPoly h_general =
                cfg.solution.empty() ? solve(prob).h : read_solution_poly(read_json_file(cfg.solution));
            if (h_general.dim() != 1) throw FormatError("solution dimension differs from problem");

            VerificationReport rep = [&] {
                try {
                    return oracle_compare(prob.g(), h_general);
                } catch (const std::logic_error& e) {
                    // supplied solution fails verification, or the difference depends on t
                    VerificationReport failed = VerificationReport::from_residuals(
                        "oracle_compare", {{"difference", shift_t(h_general, Rational(1)) - h_general - prob.g()},
                                           {"laplacian", laplacian(h_general)}});
                    failed.status = CheckStatus::fail;
                    failed.note = e.what();
                    return failed;
                }
            }();

            json doc{{"d", 1}, {"g", poly_to_json(prob.g())}, {"h_general", poly_to_json(h_general)}};
            for (const auto& v : rep.values) doc[v.name] = poly_to_json(v.value);
            if (rep.passed())
                doc["oracle_complex"] =
                    complex_poly_to_json(solve_complex_difference(harmonic_conjugate_completion(prob.g())));
            doc["report"] = report_to_json(rep);
            emit(cfg, doc.dump(2) + "\n", out);
            return print_reports(cfg, {rep}, log_stream(cfg, out, err));
        },
        err);
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(
        [&] {
            MultiPoly p = read_solution_poly(read_json_file(cfg.input));
            auto axes = parse_grid(cfg.grid);
            const VarSpace space = p.space();

            std::vector<std::vector<double>> samples(space.num_vars());
            std::vector<bool> seen(space.num_vars(), false);
            for (const auto& axis : axes) {
                int v = -1;
                for (int i = 0; i < space.num_vars(); ++i)
                    if (space.var_name(i) == axis.var) v = i;
                if (v < 0) throw FormatError("grid variable \"" + axis.var + "\" not in d=" + std::to_string(space.dim()));
                if (seen[v]) throw FormatError("grid variable \"" + axis.var + "\" given twice");
                seen[v] = true;
                for (Rational x = axis.lo; x <= axis.hi; x += axis.step) {
                    samples[v].push_back(x.to_double());
                    if (samples[v].size() > max_grid_rows) throw FormatError("grid too large");
                }
            }
            std::size_t rows = 1;
            for (int v = 0; v < space.num_vars(); ++v) {
                if (!seen[v]) throw FormatError("grid misses variable " + space.var_name(v));
                rows *= samples[v].size();
                if (rows > max_grid_rows) throw FormatError("grid too large");
            }

            std::ostringstream csv;
            for (int v = 0; v < space.num_vars(); ++v) csv << space.var_name(v) << ',';
            csv << "value\n";
            char buf[64];
            auto fmt = [&buf](double x) {
                std::snprintf(buf, sizeof buf, "%.17g", x);
                return std::string(buf);
            };
            std::vector<std::size_t> idx(space.num_vars(), 0);
            std::vector<double> point(space.num_vars());
            for (std::size_t r = 0; r < rows; ++r) {
                for (int v = 0; v < space.num_vars(); ++v) {
                    point[v] = samples[v][idx[v]];
                    csv << fmt(point[v]) << ',';
                }
                csv << fmt(eval_float(p, point)) << '\n';
                // last variable varies fastest
                for (int v = space.num_vars() - 1; v >= 0; --v) {
                    if (++idx[v] < samples[v].size()) break;
                    idx[v] = 0;
                }
            }
            emit(cfg, csv.str(), out);
            return static_cast<int>(exit_ok);
        },
        err);
}

int cmd_self_test(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(
        [&] {
            std::uint64_t seed = 1;
            if (const char* env = std::getenv("SLAB_HARMONICS_SEED")) {
                try {
                    seed = std::stoull(env);
                } catch (const std::exception&) {
                    throw FormatError(std::string("SLAB_HARMONICS_SEED is not an integer: ") + env);
                }
            }
            gen::Rng rng(seed);
            unsigned passed = 0, total = 0;
            auto tally = [&](const VerificationReport& r, const std::string& what) {
                ++total;
                if (r.passed())
                    ++passed;
                else
                    err << what << '\n' << format_report(r);
            };
            for (unsigned i = 0; i < cfg.count; ++i) {
                VarSpace space(static_cast<int>(i % 3) + 1);
                Rational a = gen::any_rational(rng);
                Rational width = gen::rational(rng);
                if (width.sign() < 0) width = -width;
                SlabProblem slab(a, a + width, gen::t_free_poly(rng, space, 6), gen::t_free_poly(rng, space, 6));
                tally(verify_boundary(solve_slab(slab), slab), "slab instance " + std::to_string(i));

                MultiPoly g = gen::harmonic_poly(rng, space, 6);
                tally(verify_difference(solve(DiffEqProblem(g)).h, g), "difference instance " + std::to_string(i));

                MultiPoly g1 = gen::harmonic_poly(rng, VarSpace(1), 6);
                tally(oracle_compare(g1, solve(DiffEqProblem(g1)).h), "oracle instance " + std::to_string(i));
            }
            out << "self-test seed=" << seed << ": " << passed << "/" << total << " checks passed\n";
            return passed == total ? static_cast<int>(exit_ok) : static_cast<int>(exit_verification_failed);
        },
        err);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact polynomial solver for the slab Dirichlet problem and the harmonic difference equation"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_io = [&cfg](CLI::App* sub) {
        sub->add_option("--input,-i", cfg.input, "problem or polynomial JSON file (or a directory for batch mode)")
            ->required();
        sub->add_option("--output,-o", cfg.output, "output file (default: stdout)");
        sub->add_flag("--quiet,-q", cfg.quiet, "only print failing checks");
    };

    auto* slab = app.add_subcommand("solve-slab", "solve the Dirichlet problem on a slab");
    add_io(slab);
    auto* diffeq = app.add_subcommand("solve-diffeq", "solve h(t+1,y) - h(t,y) = g(t,y)");
    add_io(diffeq);
    auto* verify = app.add_subcommand("verify", "check a solution against a slab or difference problem");
    add_io(verify);
    verify->add_option("--solution,-s", cfg.solution, "solution JSON (bare polynomial or solver output)")->required();
    auto* oracle = app.add_subcommand("oracle-compare", "compare with the Bernoulli-polynomial route (d = 1)");
    add_io(oracle);
    oracle->add_option("--solution,-s", cfg.solution, "solution to compare (default: run the solver)");
    auto* eval = app.add_subcommand("eval", "sample a polynomial on a grid as CSV (floating point)");
    add_io(eval);
    eval->add_option("--grid,-g", cfg.grid, "grid spec, e.g. \"t=0:1:0.25,y1=-1:1:0.5\"")->required();
    auto* self = app.add_subcommand("self-test", "random instances seeded by SLAB_HARMONICS_SEED");
    self->add_option("--count,-n", cfg.count, "number of random instances");
    self->add_flag("--quiet,-q", cfg.quiet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_bad_input;
    }

    if (*slab) return cmd_solve_slab(cfg, out, err);
    if (*diffeq) return cmd_solve_diffeq(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*oracle) return cmd_oracle_compare(cfg, out, err);
    if (*eval) return cmd_eval(cfg, out, err);
    return cmd_self_test(cfg, out, err);
}

} // namespace slabh::cli
