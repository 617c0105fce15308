#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "basel/basel.h"

namespace basel::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

constexpr const char* kSynopsis =
    "usage: basel <zeta|kernel|action|comb|fourier|sinc> [options] [--format csv|json|text] [--out PATH] [--tol T]";

struct TableDeleter {
    void operator()(basel_table* t) const noexcept { basel_table_destroy(t); }
};
struct TestFnDeleter {
    void operator()(basel_testfn* f) const noexcept { basel_testfn_destroy(f); }
};
using TablePtr = std::unique_ptr<basel_table, TableDeleter>;
using TestFnPtr = std::unique_ptr<basel_testfn, TestFnDeleter>;

struct CommonOptions {
    std::string format = "text";
    std::string out;
    double tol = 1e-10;
};

struct PhiOptions {
    std::string phi = "plateau";
    std::optional<double> center;
    std::optional<double> radius;
};

int usage_error(const std::string& message)
{
    std::cerr << "basel: " << message << "\n" << kSynopsis << "\n";
    return kExitUsage;
}

int exit_code(basel_status status)
{
    switch (status) {
    case BASEL_OK:
        return kExitOk;
    case BASEL_ERR_INVALID_ARGUMENT:
    case BASEL_ERR_DOMAIN:
        return kExitUsage;
    case BASEL_ERR_NUMERICAL:
        return kExitNumerical;
    default:
        return kExitFailure;
    }
}

int report_failure(basel_status status)
{
    if (exit_code(status) == kExitUsage)
        return usage_error(basel_last_error());
    std::cerr << "basel: " << basel_status_string(status) << ": " << basel_last_error() << "\n";
    return exit_code(status);
}

void add_common(CLI::App& sub, CommonOptions& common)
{
    sub.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    sub.add_option("--out", common.out, "Write the table to PATH instead of standard output");
    sub.add_option("--tol", common.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
}

void add_phi(CLI::App& sub, PhiOptions& phi)
{
    sub.add_option("--phi", phi.phi, "Test function")->check(CLI::IsMember({"plateau", "gauss"}));
    sub.add_option("--center", phi.center, "Center of the gauss bump");
    sub.add_option("--radius", phi.radius, "Radius of the gauss bump");
}

basel_format to_format(const std::string& name)
{
    if (name == "csv")
        return BASEL_FORMAT_CSV;
    if (name == "json")
        return BASEL_FORMAT_JSON;
    return BASEL_FORMAT_TEXT;
}

basel_status make_phi(const PhiOptions& opts, TestFnPtr& out, std::string& usage)
{
    basel_testfn* raw = nullptr;
    basel_status s;
    if (opts.phi == "plateau") {
        if (opts.center || opts.radius) {
            usage = "--center/--radius only apply to --phi gauss";
            return BASEL_ERR_INVALID_ARGUMENT;
        }
        s = basel_testfn_standard_plateau(&raw);
    } else {
        s = basel_testfn_gauss(opts.center.value_or(0.0), opts.radius.value_or(1.0), &raw);
    }
    out.reset(raw);
    return s;
}

int emit(basel_status status, TablePtr table, const CommonOptions& common)
{
    if (status != BASEL_OK)
        return report_failure(status);
    const basel_status w =
        basel_table_write(table.get(), to_format(common.format), common.out.empty() ? nullptr : common.out.c_str());
    if (w != BASEL_OK)
        return report_failure(w);
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv)
{
    CLI::App app{"Exact and numerical experiments around the Basel sum", "basel"};
    app.require_subcommand(1);

    CommonOptions common;
    PhiOptions phi;

    unsigned max_k = 0;
    bool oracle = false;
    auto* zeta = app.add_subcommand("zeta", "Exact zeta(2k) from the antiderivative ladder");
    zeta->add_option("--max-k", max_k, "Largest k")->required()->check(CLI::PositiveNumber);
    zeta->add_flag("--oracle", oracle, "Add the Bernoulli-number column");

    std::uint32_t kernel_n = 0;
    std::size_t samples = 2001;
    double xmin = -std::numbers::pi;
    double xmax = std::numbers::pi;
    auto* kernel = app.add_subcommand("kernel", "Sample the truncated Dirichlet kernel");
    kernel->add_option("--n", kernel_n, "Kernel order N")->required();
    kernel->add_option("--samples", samples, "Grid points");
    kernel->add_option("--xmin", xmin, "Left end of the grid");
    kernel->add_option("--xmax", xmax, "Right end of the grid");

    std::vector<std::uint64_t> n_list;
    auto* action = app.add_subcommand("action", "delta_N[phi] against 2 pi phi(0)");
    add_phi(*action, phi);
    action->add_option("--n-list", n_list, "Comma separated orders")->required()->delimiter(',');

    std::uint64_t comb_n = 0;
    auto* comb = app.add_subcommand("comb", "Partial-sum action of the comb against 2 pi sum phi(2 pi n)");
    add_phi(*comb, phi);
    comb->add_option("--n", comb_n, "Partial-sum order N")->required();

    unsigned order = 0;
    std::uint64_t fourier_n = 0;
    std::size_t fourier_samples = 0;
    double fourier_xmin = 0.0;
    double fourier_xmax = 0.0;
    auto* fourier = app.add_subcommand("fourier", "Fourier partial sums against floor/ceiling closed forms");
    fourier->add_option("--order", order, "Antiderivative order")->required()->check(CLI::IsMember({1u, 2u}));
    fourier->add_option("--n", fourier_n, "Partial-sum order N")->required();
    fourier->add_option("--samples", fourier_samples, "Grid points")->required();
    fourier->add_option("--xmin", fourier_xmin, "Left end of the grid")->required();
    fourier->add_option("--xmax", fourier_xmax, "Right end of the grid")->required();

    unsigned n_max = 0;
    auto* sinc = app.add_subcommand("sinc", "Truncated sinc integrals against pi");
    sinc->add_option("--n-max", n_max, "Largest N")->required();

    for (auto* sub : {zeta, kernel, action, comb, fourier, sinc})
        add_common(*sub, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    basel_table* raw = nullptr;
    if (zeta->parsed()) {
        const basel_status s = basel_table_zeta(max_k, oracle ? 1 : 0, &raw);
        return emit(s, TablePtr(raw), common);
    }
    if (kernel->parsed()) {
        const basel_status s = basel_table_kernel(kernel_n, samples, xmin, xmax, &raw);
        return emit(s, TablePtr(raw), common);
    }
    if (fourier->parsed()) {
        const basel_status s = basel_table_fourier(order, fourier_n, fourier_samples, fourier_xmin, fourier_xmax, &raw);
        return emit(s, TablePtr(raw), common);
    }
    if (sinc->parsed()) {
        const basel_status s = basel_table_sinc(n_max, common.tol, &raw);
        return emit(s, TablePtr(raw), common);
    }

    TestFnPtr fn;
    std::string usage;
    if (const basel_status s = make_phi(phi, fn, usage); s != BASEL_OK)
        return usage.empty() ? report_failure(s) : usage_error(usage);
    if (action->parsed()) {
        const basel_status s = basel_table_action(fn.get(), n_list.data(), n_list.size(), common.tol, &raw);
        return emit(s, TablePtr(raw), common);
    }
    const basel_status s = basel_table_comb(fn.get(), comb_n, common.tol, &raw);
    return emit(s, TablePtr(raw), common);
}

} // namespace basel::cli
