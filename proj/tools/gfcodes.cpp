#include "gfc/blocking.hpp"
#include "gfc/code.hpp"
#include "gfc/constructions.hpp"
#include "gfc/ghw.hpp"
#include "gfc/minimality.hpp"
#include "gfc/reproduce.hpp"
#include "gfc/subspace.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gfc;

constexpr int kOk = 0, kMismatch = 1, kInputError = 2, kBudgetExceeded = 3;

std::uint64_t env_budget(std::uint64_t fallback) {
    const char* v = std::getenv("GFCODES_BUDGET");
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == nullptr || *end != '\0' || parsed == 0)
        throw ValueError("GFCODES_BUDGET must be a positive integer");
    return parsed;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void note_timing(bool enabled, const std::string& label, const Timer& t) {
    if (enabled)
        std::cerr << "timing " << label << " " << std::fixed << std::setprecision(1) << t.ms()
                  << " ms\n";
}

// Input is a path to a code file, or the name of a registry example.
LinearCode load_code(const std::string& input) {
    if (std::filesystem::exists(input)) return read_code_file(input);
    const auto names = example_names();
    if (std::find(names.begin(), names.end(), input) != names.end()) return example_code(input);
    throw ParseError("no such file or example code: " + input);
}

// Largest prefix 1..S of levels whose per-level subspace count fits the
// budget (counts are the same on either scan side).
std::uint32_t clamp_smax(const LinearCode& C, std::uint32_t requested, std::uint64_t budget) {
    std::uint32_t used = 0;
    for (std::uint32_t s = 1; s <= requested; ++s) {
        if (gaussian_binomial(std::uint32_t(C.k()), s, C.q()) > bigint(budget)) break;
        used = s;
    }
    return used;
}

std::string code_label(const LinearCode& C, const WeightReport* rep) {
    std::ostringstream os;
    os << "[" << C.n() << "," << C.k();
    if (rep != nullptr && rep->smax() >= 1) os << "," << rep->d(1);
    os << "]_" << C.q();
    return os.str();
}

MinimalityAlg parse_alg(const std::string& alg) {
    if (alg == "rank") return MinimalityAlg::Rank;
    if (alg == "brute") return MinimalityAlg::Brute;
    throw ValueError("unknown algorithm: " + alg);
}

void render_report_text(std::ostream& out, const WeightReport& rep) {
    out << "hierarchy:\n      s    d_s    D_s\n";
    for (std::uint32_t s = 1; s <= rep.smax(); ++s)
        out << "  " << std::setw(5) << s << "  " << std::setw(5) << rep.d(s) << "  " << std::setw(5)
            << rep.D(s) << "\n";
}

void render_sswd_text(std::ostream& out, const WeightReport& rep) {
    out << "support weight distribution (j:count):\n";
    for (const auto& row : rep.rows) {
        out << "  s=" << row.s << ":";
        for (std::size_t j = 0; j < row.histogram.size(); ++j)
            if (row.histogram[j]) out << " " << j << ":" << row.histogram[j];
        out << "\n";
    }
}

void render_profile_text(std::ostream& out, const MinimalityProfile& prof,
                         const std::string& alg) {
    out << "minimality (alg=" << alg << "):\n      s  d_{s+1}    D_s  s-minimal  condition\n";
    for (const auto& row : prof.rows)
        out << "  " << std::setw(5) << row.s << "  " << std::setw(7) << row.d_next << "  "
            << std::setw(5) << row.D_s << "  " << std::setw(9) << (row.minimal ? "yes" : "no")
            << "  " << gab_name(row.gab) << "\n";
}

struct AnalyzeOpts {
    std::string input;
    std::uint32_t smax = 0;
    bool sswd = false;
    std::string alg = "rank";
    unsigned workers = 1;
    std::string format = "text";
    bool timings = false;
};

int cmd_analyze(const AnalyzeOpts& opt) {
    const std::uint64_t budget = env_budget(kDefaultSubspaceBudget);
    const std::uint64_t cw_budget = env_budget(kDefaultCodewordBudget);
    const LinearCode C = load_code(opt.input);

    const auto k = std::uint32_t(C.k());
    const std::uint32_t requested = opt.smax == 0 ? k : std::min(opt.smax, k);
    const std::uint32_t usable = clamp_smax(C, requested, budget);
    if (usable == 0) {
        std::cerr << "budget exceeded: even s=1 needs " << gaussian_binomial(k, 1, C.q())
                  << " subspaces (budget " << budget << ")\n";
        return kBudgetExceeded;
    }

    Timer t_weights;
    const WeightReport rep = support_weights(C, usable, opt.workers, budget);
    note_timing(opt.timings, "support_weights", t_weights);

    const MinimalityAlg alg = parse_alg(opt.alg);
    MinimalityProfile prof;
    prof.report = rep;
    Timer t_prof;
    for (std::uint32_t s = 1; s + 1 <= usable && s <= k - 1; ++s) {
        ProfileRow row;
        row.s = s;
        row.d_next = rep.d(s + 1);
        row.D_s = rep.D(s);
        row.minimal = is_s_minimal(C, s, alg, opt.workers, budget).minimal;
        row.gab = gab_check(rep, s);
        row.regimes = exact_regimes(rep, s);
        prof.rows.push_back(row);
    }
    note_timing(opt.timings, "minimality", t_prof);

    if (opt.format == "csv") {
        std::cout << hierarchy_csv(rep) << "\n" << profile_csv(prof);
        if (opt.sswd) std::cout << "\n" << sswd_csv(rep);
    } else {
        std::cout << "code: " << code_label(C, &rep) << " (input: " << opt.input << ")\n";
        if (C.rows_were_reduced()) std::cout << "note: dependent input rows were reduced\n";
        std::cout << "projective: " << (is_projective(C) ? "yes" : "no") << "\n";
        render_report_text(std::cout, rep);
        render_profile_text(std::cout, prof, opt.alg);
        if (opt.sswd) render_sswd_text(std::cout, rep);
    }

    const WeightDistribution* distp = nullptr;
    WeightDistribution dist;
    try {
        dist = scan_codewords(C, cw_budget).dist;
        distp = &dist;
    } catch (const BudgetError&) {
        // bounds involving the codeword distribution are skipped
    }
    const auto violations = check_bounds(rep, distp);
    for (const auto& v : violations) std::cerr << "bound violation: " << v << "\n";
    if (!violations.empty()) return kMismatch;

    if (usable < requested) {
        std::cerr << "budget exceeded: s=" << (usable + 1) << " needs "
                  << gaussian_binomial(k, usable + 1, C.q()) << " subspaces (budget " << budget
                  << "); table truncated\n";
        return kBudgetExceeded;
    }
    return kOk;
}

struct ConstructOpts {
    std::string out;
    std::string emit = "code-file";
    bool verify = false;
    unsigned workers = 1;
    bool timings = false;
};

void emit_constructed(const LinearCode& C, const ConstructOpts& opt, std::uint64_t budget,
                      unsigned workers) {
    std::ostringstream body;
    if (opt.emit == "matrix") {
        const MatrixGF& G = C.generator();
        for (std::size_t r = 0; r < G.rows(); ++r) {
            for (std::size_t c = 0; c < G.cols(); ++c) body << (c ? " " : "") << G.at(r, c);
            body << "\n";
        }
    } else if (opt.emit == "report") {
        const std::uint32_t usable = clamp_smax(C, std::uint32_t(C.k()), budget);
        if (usable == 0) throw BudgetError("report needs at least the s=1 sweep within budget");
        const WeightReport rep = support_weights(C, usable, workers, budget);
        body << "code: " << code_label(C, &rep) << "\n";
        render_report_text(body, rep);
    } else {
        std::ostringstream cf;
        write_code(cf, C);
        body << cf.str();
    }
    if (opt.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(opt.out);
        if (!f) throw ValueError("cannot write output file: " + opt.out);
        f << body.str();
    }
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw ValueError(msg);
}

// Family-specific --verify checks. Failures throw ValueError; the caller maps
// verify failures to exit 1.
struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void verify_require(bool cond, const std::string& msg) {
    if (!cond) throw VerifyFailure("verify failed: " + msg);
}

WeightReport full_report_or_throw(const LinearCode& C, std::uint64_t budget, unsigned workers,
                                  std::uint32_t smax) {
    const std::uint32_t usable = clamp_smax(C, smax, budget);
    if (usable < smax)
        throw BudgetError("verification needs " +
                          gaussian_binomial(std::uint32_t(C.k()), usable + 1, C.q()).str() +
                          " subspaces at s=" + std::to_string(usable + 1));
    return support_weights(C, smax, workers, budget);
}

void verify_simplex(const LinearCode& C, std::uint32_t q, std::uint32_t k, std::uint64_t budget,
                    unsigned workers) {
    const WeightReport rep = full_report_or_throw(C, budget, workers, k);
    for (std::uint32_t s = 1; s <= k; ++s) {
        const bigint w = (boost::multiprecision::pow(bigint(q), k) -
                          boost::multiprecision::pow(bigint(q), k - s)) /
                         (q - 1);
        verify_require(bigint(rep.d(s)) == w && bigint(rep.D(s)) == w,
                       "simplex level s=" + std::to_string(s) + " is not constant-weight " +
                           w.str());
    }
}

void verify_guaranteed_minimal(const LinearCode& C, std::uint64_t budget, unsigned workers,
                               const std::function<bool(std::uint32_t)>& guaranteed) {
    for (std::uint32_t s = 1; s + 1 <= C.k(); ++s) {
        if (!guaranteed(s)) break;  // guarantees only weaken as s grows
        verify_require(is_s_minimal(C, s, MinimalityAlg::Rank, workers, budget).minimal,
                       "guaranteed s-minimality failed at s=" + std::to_string(s));
    }
}

void verify_ss_weights(const LinearCode& C, std::uint32_t q, std::uint32_t k,
                       const std::vector<std::uint32_t>& u, std::uint64_t cw_budget) {
    if (u.size() > 2) return;  // closed form covers one or two blocks
    const WeightDistribution predicted = ss_predicted_weights(q, k, u);
    const WeightDistribution got = scan_codewords(C, cw_budget).dist;
    verify_require(predicted == got, "enumerated weights differ from the closed form");
}

void verify_pad(const LinearCode& base, const LinearCode& padded, std::uint32_t t,
                std::uint64_t budget, unsigned workers) {
    const auto k = std::uint32_t(base.k());
    const std::uint32_t usable = clamp_smax(base, k, budget);
    verify_require(usable >= 1, "padding verification needs at least one level within budget");
    const WeightReport rb = support_weights(base, usable, workers, budget);
    const WeightReport rp = support_weights(padded, usable, workers, budget);
    const std::uint32_t q = base.q();
    for (std::uint32_t s = 1; s <= usable; ++s) {
        const bigint shift = bigint(t) *
                             (boost::multiprecision::pow(bigint(q), k) -
                              boost::multiprecision::pow(bigint(q), k - s)) /
                             (q - 1);
        verify_require(bigint(rp.d(s)) == bigint(rb.d(s)) + shift &&
                           bigint(rp.D(s)) == bigint(rb.D(s)) + shift,
                       "hierarchy shift law failed at s=" + std::to_string(s));
    }
}

void verify_cyclic(const LinearCode& C) {
    const MatrixGF& G = C.generator();
    const MatrixGF& R = C.rref_generator();
    for (std::size_t r = 0; r < G.rows(); ++r) {
        std::vector<elem_t> shifted(C.n());
        for (std::size_t c = 0; c < C.n(); ++c) shifted[(c + 1) % C.n()] = G.at(r, c);
        verify_require(in_row_space(R, shifted),
                       "cyclic shift of generator row " + std::to_string(r) + " left the code");
    }
}

void verify_example(const LinearCode& C, std::uint64_t budget, unsigned workers) {
    const std::uint32_t usable = clamp_smax(C, std::uint32_t(C.k()), budget);
    verify_require(usable >= 1, "verification needs at least one level within budget");
    const WeightReport rep = support_weights(C, usable, workers, budget);
    const auto violations = check_bounds(rep);
    if (!violations.empty()) throw VerifyFailure("verify failed: " + violations.front());
}

struct BlockingVerifyOpts {
    std::string points;
    std::uint32_t t = 1, s = 1;
    bool cutting = false;
    unsigned workers = 1;
    bool timings = false;
};

int cmd_blocking_verify(const BlockingVerifyOpts& opt) {
    const std::uint64_t budget = env_budget(kDefaultSubspaceBudget);
    const PGPointSet ps = read_pointset_file(opt.points);
    std::cout << "points: " << ps.points.size() << " in PG(" << (ps.k - 1) << ","
              << ps.ctx->q() << ")\n";
    Timer t_scan;
    const BlockingVerdict v = opt.cutting
                                  ? is_cutting_s_blocking(ps, opt.s, opt.workers, budget)
                                  : is_t_fold_s_blocking(ps, opt.t, opt.s, opt.workers, budget);
    note_timing(opt.timings, "blocking_scan", t_scan);
    if (opt.cutting)
        std::cout << "cutting " << opt.s << "-blocking: " << (v.ok ? "yes" : "no") << "\n";
    else
        std::cout << opt.t << "-fold " << opt.s << "-blocking: " << (v.ok ? "yes" : "no") << "\n";
    if (!v.ok && v.witness.has_value()) {
        std::cout << "witness: subspace #" << v.witness->ordinal << " with basis rows\n";
        const MatrixGF& B = v.witness->basis;
        for (std::size_t r = 0; r < B.rows(); ++r) {
            std::cout << " ";
            for (std::size_t c = 0; c < B.cols(); ++c) std::cout << " " << B.at(r, c);
            std::cout << "\n";
        }
    }
    return kOk;
}

struct BlockingBoundsOpts {
    std::uint32_t t = 1, s = 1, k = 0, q = 0;
    bool spanning = false, nonspanning = false;
};

int cmd_blocking_bounds(const BlockingBoundsOpts& opt) {
    std::optional<bool> spanning;
    if (opt.spanning) spanning = true;
    if (opt.nonspanning) spanning = false;
    std::cout << render_bounds(blocking_bounds(opt.t, opt.s, opt.k, opt.q, spanning));
    return kOk;
}

int cmd_reproduce(const std::string& id, unsigned workers, bool timings) {
    std::vector<ReproResult> results;
    Timer t_all;
    if (id == "all")
        results = run_all_reproductions(workers);
    else
        results.push_back(run_reproduction(id, workers));
    note_timing(timings, "reproduce", t_all);
    bool any_diff = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << results[i].rendered;
        if (results[i].ok()) {
            std::cout << "result: PASS\n";
        } else {
            std::cout << "result: FAIL (" << results[i].diffs.size() << " mismatched cells)\n";
            any_diff = true;
        }
    }
    return any_diff ? kMismatch : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear code analysis over GF(q): weight hierarchies, subcode support weights,\n"
                 "s-minimality, code constructions, and blocking-set verification"};
    app.require_subcommand(1);

    AnalyzeOpts an;
    CLI::App* analyze = app.add_subcommand("analyze", "weight hierarchy and minimality profile");
    analyze->add_option("input", an.input, "code file or example name")->required();
    analyze->add_option("--smax", an.smax, "highest level s to compute (default: k)");
    analyze->add_flag("--sswd", an.sswd, "include the full support weight distribution");
    analyze->add_option("--alg", an.alg, "minimality algorithm: rank|brute")
        ->check(CLI::IsMember({"rank", "brute"}));
    analyze->add_option("--workers", an.workers, "worker threads")->check(CLI::PositiveNumber);
    analyze->add_option("--format", an.format, "output format: text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    analyze->add_flag("--timings", an.timings, "timing notes on stderr");

    CLI::App* construct = app.add_subcommand("construct", "build a code and emit it");
    construct->require_subcommand(1);
    ConstructOpts co;
    struct {
        std::uint32_t q = 0, k = 0, n = 0, t = 0, s = 0;
        std::vector<std::size_t> drop;
        std::vector<std::uint32_t> u, exclude;
        std::string in, example, name;
    } cp;
    auto add_common = [&](CLI::App* c) {
        c->add_option("-o,--out", co.out, "output file (default: stdout)");
        c->add_option("--emit", co.emit, "what to emit: code-file|matrix|report")
            ->check(CLI::IsMember({"code-file", "matrix", "report"}));
        c->add_flag("--verify", co.verify, "re-check the construction's guarantees first");
        c->add_option("--workers", co.workers, "worker threads")->check(CLI::PositiveNumber);
        c->add_flag("--timings", co.timings, "timing notes on stderr");
    };
    CLI::App* c_simplex = construct->add_subcommand("simplex", "simplex code S(k,q)");
    c_simplex->add_option("--q", cp.q)->required();
    c_simplex->add_option("--k", cp.k)->required();
    add_common(c_simplex);
    CLI::App* c_punct =
        construct->add_subcommand("punctured-simplex", "simplex with columns removed");
    c_punct->add_option("--q", cp.q)->required();
    c_punct->add_option("--k", cp.k)->required();
    c_punct->add_option("--drop", cp.drop, "column indices to remove")
        ->required()
        ->delimiter(',');
    add_common(c_punct);
    CLI::App* c_ss =
        construct->add_subcommand("ss", "Solomon-Stiffler code: simplex minus subspace blocks");
    c_ss->add_option("--q", cp.q)->required();
    c_ss->add_option("--k", cp.k)->required();
    c_ss->add_option("--u", cp.u, "block dimensions, strictly increasing")
        ->required()
        ->delimiter(',');
    add_common(c_ss);
    CLI::App* c_pad = construct->add_subcommand("pad", "append t simplex copies to a code");
    c_pad->add_option("--in", cp.in, "base code file");
    c_pad->add_option("--example", cp.example, "base example name");
    c_pad->add_option("--t", cp.t, "number of simplex copies")->required();
    add_common(c_pad);
    CLI::App* c_abx = construct->add_subcommand(
        "abx", "extension that stays s-minimal while violating the ratio condition");
    c_abx->add_option("--in", cp.in, "base code file");
    c_abx->add_option("--example", cp.example, "base example name");
    c_abx->add_option("--s", cp.s, "minimality level")->required();
    add_common(c_abx);
    CLI::App* c_cyclic = construct->add_subcommand("cyclic", "cyclic code from excluded cosets");
    c_cyclic->add_option("--q", cp.q)->required();
    c_cyclic->add_option("--n", cp.n)->required();
    c_cyclic->add_option("--exclude", cp.exclude, "cyclotomic coset leaders excluded from g(x)")
        ->required()
        ->delimiter(',');
    add_common(c_cyclic);
    CLI::App* c_example = construct->add_subcommand("example", "a registry example code");
    c_example->add_option("name", cp.name, "example name")->required();
    add_common(c_example);

    CLI::App* blocking = app.add_subcommand("blocking", "blocking-set verification and bounds");
    blocking->require_subcommand(1);
    BlockingVerifyOpts bv;
    CLI::App* b_verify = blocking->add_subcommand("verify", "check a point-set file");
    b_verify->add_option("--points", bv.points, "point-set file")->required();
    auto* bt = b_verify->add_option("--t", bv.t, "fold count");
    b_verify->add_option("--s", bv.s, "codimension of the checked subspaces")->required();
    auto* bc = b_verify->add_flag("--cutting", bv.cutting, "check the cutting property instead");
    bc->excludes(bt);
    b_verify->add_option("--workers", bv.workers, "worker threads")->check(CLI::PositiveNumber);
    b_verify->add_flag("--timings", bv.timings, "timing notes on stderr");
    BlockingBoundsOpts bb;
    CLI::App* b_bounds = blocking->add_subcommand("bounds", "size lower bounds");
    b_bounds->add_option("--t", bb.t)->required();
    b_bounds->add_option("--s", bb.s)->required();
    b_bounds->add_option("--k", bb.k)->required();
    b_bounds->add_option("--q", bb.q)->required();
    auto* bsp = b_bounds->add_flag("--spanning", bb.spanning,
                                   "the complement of the set spans GF(q)^k");
    auto* bns = b_bounds->add_flag("--nonspanning", bb.nonspanning,
                                   "the complement of the set does not span GF(q)^k");
    bsp->excludes(bns);
    bns->excludes(bsp);

    std::string repro_id;
    unsigned repro_workers = 1;
    bool repro_timings = false;
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "recompute a reference table and diff it");
    reproduce->add_option("id", repro_id, "one of t1,t2,t3,t4,t5,cyclic85,abx37,abx33 or 'all'")
        ->required()
        ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "t5", "cyclic85", "abx37", "abx33", "all"}));
    reproduce->add_option("--workers", repro_workers, "worker threads")
        ->check(CLI::PositiveNumber);
    reproduce->add_flag("--timings", repro_timings, "timing notes on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(an);
        if (blocking->parsed()) {
            if (b_verify->parsed()) return cmd_blocking_verify(bv);
            return cmd_blocking_bounds(bb);
        }
        if (reproduce->parsed()) return cmd_reproduce(repro_id, repro_workers, repro_timings);

        // construct
        const std::uint64_t budget = env_budget(kDefaultSubspaceBudget);
        const std::uint64_t cw_budget = env_budget(kDefaultCodewordBudget);
        Timer t_build;
        std::optional<LinearCode> built;
        std::optional<LinearCode> base;
        if (c_pad->parsed() || c_abx->parsed()) {
            require(cp.in.empty() != cp.example.empty(),
                    "exactly one of --in and --example is required");
            base = cp.in.empty() ? example_code(cp.example) : read_code_file(cp.in);
        }
        if (c_simplex->parsed()) {
            built = simplex_code(make_field(cp.q), cp.k);
        } else if (c_punct->parsed()) {
            built = punctured_simplex(make_field(cp.q), cp.k, cp.drop);
        } else if (c_ss->parsed()) {
            built = solomon_stiffler(make_field(cp.q), cp.k, cp.u);
        } else if (c_pad->parsed()) {
            built = pad_with_simplex(*base, cp.t);
        } else if (c_abx->parsed()) {
            const ExtensionResult ext = ab_violating_extend(*base, cp.s, co.workers, budget);
            if (co.verify) {
                verify_require(ext.verified_s_minimal, "extension lost s-minimality");
                const WeightReport rep =
                    full_report_or_throw(ext.code, budget, co.workers, cp.s + 1);
                verify_require(gab_check(rep, cp.s) == GabVerdict::Inconclusive,
                               "extension does not violate the sufficient conditions");
                std::cerr << "verified: s-minimal, sufficient conditions inconclusive\n";
            }
            built = ext.code;
        } else if (c_cyclic->parsed()) {
            built = cyclic_code(cp.q, cp.n, cp.exclude);
        } else {
            built = example_code(cp.name);
        }
        note_timing(co.timings, "construct", t_build);

        if (co.verify && !c_abx->parsed()) {
            Timer t_verify;
            if (c_simplex->parsed()) {
                verify_simplex(*built, cp.q, cp.k, budget, co.workers);
                std::cerr << "verified: constant-weight hierarchy\n";
            } else if (c_punct->parsed()) {
                verify_guaranteed_minimal(*built, budget, co.workers, [&](std::uint32_t s) {
                    return punctured_simplex_minimal_guaranteed(cp.q, cp.k, cp.drop.size(), s);
                });
                std::cerr << "verified: s-minimal wherever guaranteed\n";
            } else if (c_ss->parsed()) {
                verify_ss_weights(*built, cp.q, cp.k, cp.u, cw_budget);
                verify_guaranteed_minimal(*built, budget, co.workers, [&](std::uint32_t s) {
                    return ss_minimal_guaranteed(cp.q, cp.k, cp.u, s);
                });
                std::cerr << "verified: weights match the closed form; s-minimal wherever "
                             "guaranteed\n";
            } else if (c_pad->parsed()) {
                verify_pad(*base, *built, cp.t, budget, co.workers);
                std::cerr << "verified: hierarchy shift law\n";
            } else if (c_cyclic->parsed()) {
                verify_cyclic(*built);
                std::cerr << "verified: shift closure\n";
            } else {
                verify_example(*built, budget, co.workers);
                std::cerr << "verified: hierarchy bounds\n";
            }
            note_timing(co.timings, "verify", t_verify);
        }
        emit_constructed(*built, co, budget, co.workers);
        return kOk;
    } catch (const VerifyFailure& e) {
        std::cerr << e.what() << "\n";
        return kMismatch;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ValueError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
