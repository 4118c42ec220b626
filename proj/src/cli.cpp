#include "qverify/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <thread>

#include "qverify/catalog.hpp"
#include "qverify/report.hpp"

namespace qverify {

namespace {

struct RunConfig {
    std::string ids = "all";
    long m_min = 0;
    long m_max = 6;
    long order = 50;
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    bool fail_fast = false;
    bool inject_fault = false;
};

struct Task {
    const IdentitySpec *spec;
    long m;
};

struct Outcome {
    VerificationReport report;
    std::string error;
};

// Perturbs the product side: b_m + q for corollaries, +q elsewhere.
IdentitySpec with_fault(const IdentitySpec &s)
{
    if (s.kind == EntryKind::corollary) {
        return corollary_spec(s.id, Perturbation{});
    }
    if (s.kind == EntryKind::slater) {
        return slater_spec(s.id, Monomial::q(1));
    }
    IdentitySpec f = s;
    f.equations = [inner = s.equations](long m, long order) {
        std::vector<Equation> eqs = inner(m, order);
        eqs.front().rhs += LaurentSeries::monomial(Monomial::q(1));
        return eqs;
    };
    return f;
}

Outcome run_task(const Task &t, long order)
{
    Outcome o;
    o.report.identity = t.spec->id;
    o.report.m = t.m;
    o.report.order = order;
    try {
        o.report = verify_spec(*t.spec, t.m, order);
    } catch (const std::exception &e) {
        o.error = e.what();
    }
    return o;
}

void emit(std::ostream &os, const Outcome &o, const std::string &format)
{
    if (format == "json") {
        nlohmann::json j = report_to_json(o.report);
        if (!o.error.empty()) {
            j["error"] = o.error;
        }
        os << j.dump() << '\n';
    } else if (!o.error.empty()) {
        os << "ERROR " << o.report.identity << " m=" << o.report.m << " order=" << o.report.order << ": "
           << o.error << '\n';
    } else {
        os << format_text(o.report) << '\n';
    }
    os.flush();
}

int cmd_list(const RunConfig &cfg, std::ostream &out)
{
    auto specs = Catalog::standard().select(cfg.ids);
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto *s : specs) {
            arr.push_back(spec_to_json(*s));
        }
        out << arr.dump(2) << '\n';
        return exit_ok;
    }
    for (const auto *s : specs) {
        out << s->id << '\t' << to_string(s->kind) << '\t' << s->m_domain.describe() << '\t' << s->anchor << '\t'
            << s->description << '\n';
    }
    return exit_ok;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    if (cfg.order < 1) {
        err << "error: --order must be >= 1\n";
        return exit_usage;
    }
    if (cfg.m_min > cfg.m_max) {
        err << "error: --m-min exceeds --m-max\n";
        return exit_usage;
    }
    const Catalog &catalog = Catalog::standard();
    auto selected = catalog.select(cfg.ids);

    std::vector<IdentitySpec> faulty;
    faulty.reserve(selected.size());
    if (cfg.inject_fault) {
        for (auto &s : selected) {
            faulty.push_back(with_fault(*s));
            s = &faulty.back();
        }
    }

    std::vector<Task> tasks;
    for (const auto *s : selected) {
        const long lo = std::max(cfg.m_min, s->m_domain.lo);
        const long hi = s->m_domain.hi ? std::min(cfg.m_max, *s->m_domain.hi) : cfg.m_max;
        for (long m = lo; m <= hi; ++m) {
            tasks.push_back({s, m});
        }
    }

    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << '\n';
            return exit_usage;
        }
    }
    std::ostream &os = cfg.out_path.empty() ? out : file;

    std::vector<std::optional<Outcome>> results(tasks.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || stop.load()) {
                return;
            }
            Outcome o = run_task(tasks[i], cfg.order);
            const bool bad = !o.error.empty() || !o.report.pass;
            {
                std::lock_guard lock(mu);
                results[i] = std::move(o);
                if (bad && cfg.fail_fast) {
                    stop.store(true);
                }
            }
            cv.notify_all();
        }
    };

    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(tasks.size(), 1))));
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) {
        pool.emplace_back(worker);
    }

    bool any_mismatch = false;
    bool any_error = false;
    // Print in task order; with --fail-fast stop at the first failure.
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return results[i].has_value() || stop.load(); });
        if (!results[i]) {
            // Fail-fast stop: let in-flight tasks finish, then see whether this one ran.
            lock.unlock();
            for (auto &th : pool) {
                if (th.joinable()) {
                    th.join();
                }
            }
            lock.lock();
            if (!results[i]) {
                break;
            }
        }
        const Outcome &o = *results[i];
        emit(os, o, cfg.format);
        any_error = any_error || !o.error.empty();
        any_mismatch = any_mismatch || (o.error.empty() && !o.report.pass);
        if (cfg.fail_fast && (any_error || any_mismatch)) {
            stop.store(true);
            break;
        }
    }
    for (auto &th : pool) {
        if (th.joinable()) {
            th.join();
        }
    }
    if (any_error) {
        return exit_builder;
    }
    return any_mismatch ? exit_mismatch : exit_ok;
}

int cmd_expand(const std::string &side, const std::string &id, long m, long order, std::ostream &out,
               std::ostream &err)
{
    if (side != "lhs" && side != "rhs") {
        err << "error: side must be lhs or rhs\n";
        return exit_usage;
    }
    if (order < 0) {
        err << "error: --order must be >= 0\n";
        return exit_usage;
    }
    const IdentitySpec &spec = Catalog::standard().find(id);
    if (!spec.m_domain.contains(m)) {
        throw OutOfDomain(id + ": m = " + std::to_string(m) + " outside " + spec.m_domain.describe());
    }
    if (order == 0) {
        out << '\n';
        return exit_ok;
    }
    LaurentSeries s = side == "lhs" ? spec.lhs(m, order) : spec.rhs(m, order);
    out << to_string(s, Precision::at(order)) << '\n';
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of q-series identities"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--ids", cfg.ids, "all, comma-separated ids, or prefix*")->capture_default_str();
        sub->add_option("--format", cfg.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App *list = app.add_subcommand("list", "List catalog entries");
    add_common(list);

    CLI::App *verify = app.add_subcommand("verify", "Verify identities over a range of m");
    add_common(verify);
    verify->add_option("--m-min", cfg.m_min, "smallest m")->capture_default_str();
    verify->add_option("--m-max", cfg.m_max, "largest m")->capture_default_str();
    verify->add_option("--order", cfg.order, "compare coefficients below q^order")->capture_default_str();
    verify->add_option("--out", cfg.out_path, "write the report stream here");
    verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_flag("--fail-fast", cfg.fail_fast, "stop at the first failure");
    verify->add_flag("--inject-fault", cfg.inject_fault, "perturb the product side by +q")->group("");

    std::string side, id;
    long exp_m = 0, exp_order = 50;
    CLI::App *expand = app.add_subcommand("expand", "Print one side of an identity");
    expand->add_option("side", side, "lhs or rhs")->required();
    expand->add_option("id", id, "identity id")->required();
    expand->add_option("--m", exp_m, "value of m")->capture_default_str();
    expand->add_option("--order", exp_order, "truncation order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*list) {
            return cmd_list(cfg, out);
        }
        if (*verify) {
            return cmd_verify(cfg, out, err);
        }
        return cmd_expand(side, id, exp_m, exp_order, out, err);
    } catch (const UnknownIdentity &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const OutOfDomain &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_builder;
    }
}

} // namespace qverify
