#include "wlanul/scenario.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <thread>

using namespace wlanul;

namespace
{

PhyCatalog
LoadCatalog(const std::string& overrideFile)
{
    return overrideFile.empty() ? PhyCatalog::Builtin() : PhyCatalog::WithOverrides(overrideFile);
}

void
PrintReport(const ScenarioSpec& spec, int mcs, const ThroughputReport& r)
{
    const auto& b = r.breakdown;
    std::cout << spec.flavor.Label() << " stations=" << spec.totalStations << " mcs=" << mcs
              << " window=" << ToString(spec.ackWindow) << " ber=" << spec.ber
              << " msdu=" << spec.msduLen << '\n'
              << "  plan: X=" << r.plan.MpduCount() << " Y=" << r.plan.MinMsdus() << ".."
              << r.plan.MaxMsdus() << " msdus=" << r.plan.TotalMsdus() << '\n'
              << "  throughput: " << std::setprecision(6) << r.throughputMbps << " Mbps\n"
              << "  cycle: " << FormatMicros(r.cycle) << " us"
              << "  access delay: " << FormatMicros(r.accessDelay) << " us\n"
              << "  aifs=" << FormatMicros(b.aifs) << " bo=" << FormatMicros(b.backoff)
              << " p_dl=" << FormatMicros(b.dlPreambles) << " tf=" << FormatMicros(b.tTf)
              << " sifs=" << FormatMicros(b.sifsTotal) << " p_ul=" << FormatMicros(b.ulPreamble)
              << " data=" << FormatMicros(b.tData) << " pe=" << FormatMicros(b.pe)
              << " ack=" << FormatMicros(b.tAck) << '\n';
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"UL throughput and A-MPDU structure optimizer for 802.11ac/ax"};
    app.require_subcommand(1);

    std::string catalogFile;
    app.add_option("--catalog", catalogFile, "JSON file overriding PHY table rows")
        ->check(CLI::ExistingFile);

    auto* run = app.add_subcommand("run", "compute the configured tables and write CSV files");
    std::string configFile;
    std::string outDir = "out";
    std::vector<std::string> emit;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    run->add_option("-c,--config", configFile, "run configuration (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("-o,--out", outDir, "output directory");
    run->add_option("--emit", emit, "override the configured outputs (fig1,fig2,fig3,raw)")
        ->delimiter(',');
    run->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* eval = app.add_subcommand("eval", "best A-MPDU plan for one scenario");
    std::string standardText = "ax";
    std::string flavorText = "mu";
    std::string sizingText = "compact";
    int group = 4;
    int stations = 0;
    int mcs = -1;
    double ber = 0.0;
    int msduLen = 1500;
    int window = 256;
    eval->add_option("--standard", standardText, "ac or ax");
    eval->add_option("--flavor", flavorText, "su, su-trig or mu")
        ->check(CLI::IsMember({"su", "su-trig", "mu"}));
    eval->add_option("--group", group, "MU group size");
    eval->add_option("--stations", stations, "stations in the system (default: group size)");
    eval->add_option("--mcs", mcs, "MCS index (default: best)");
    eval->add_option("--ber", ber, "bit error rate");
    eval->add_option("--msdu", msduLen, "MSDU length in bytes");
    eval->add_option("--window", window, "acknowledgment window")->check(CLI::IsMember({64, 256}));
    eval->add_option("--ack-sizing", sizingText, "compact, per-plan or window")
        ->check(CLI::IsMember({"compact", "per-plan", "window"}));

    auto* catalog = app.add_subcommand("catalog", "print the PHY table");
    bool validate = false;
    catalog->add_flag("--validate", validate, "list rows whose DL rate breaks the selection rule");

    CLI11_PARSE(app, argc, argv);

    try
    {
        const auto phy = LoadCatalog(catalogFile);
        const auto& tc = DefaultTiming();

        if (*run)
        {
            auto config = LoadRunConfig(configFile);
            if (!emit.empty())
            {
                config.outputs.clear();
                for (const auto& e : emit)
                {
                    const auto o = ParseOutput(e);
                    if (!o)
                    {
                        std::cerr << "error: unknown output '" << e << "'\n";
                        return 2;
                    }
                    config.outputs.push_back(*o);
                }
            }
            const auto result = Run(config, phy, tc, jobs);
            for (const auto& path : WriteOutputs(result, outDir))
            {
                std::cout << path.string() << '\n';
            }
            if (result.errors > 0)
            {
                std::cerr << result.errors << " cell(s) failed; see the status column\n";
                return 1;
            }
            return 0;
        }

        if (*eval)
        {
            const auto standard = ParseStandard(standardText);
            if (!standard)
            {
                std::cerr << "error: unknown standard '" << standardText << "'\n";
                return 2;
            }
            Flavor flavor = Flavor::AxMu(group);
            if (flavorText == "su")
            {
                flavor = *standard == Standard::Ac ? Flavor::AcSuSingle() : Flavor::AxSuSingle();
            }
            else if (flavorText == "su-trig")
            {
                flavor = Flavor::AxSuTriggered();
            }
            ScenarioSpec spec{flavor,
                              stations > 0 ? stations : flavor.concurrent,
                              std::max(mcs, 0),
                              ber,
                              window == 64 ? AckWindow::W64 : AckWindow::W256,
                              msduLen,
                              *ParseAckSizing(sizingText)};
            if (mcs >= 0)
            {
                PrintReport(spec, mcs, BestPlan(spec, phy, tc));
                return 0;
            }
            const auto sweep = SweepMcs(spec, phy, tc);
            for (const auto& o : sweep.byMcs)
            {
                if (o.report)
                {
                    PrintReport(spec, o.mcs, *o.report);
                }
                else
                {
                    std::cout << spec.flavor.Label() << " mcs=" << o.mcs << ": " << o.skipReason
                              << '\n';
                }
            }
            if (const auto* b = sweep.Best())
            {
                std::cout << "best MCS: " << b->mcs << '\n';
            }
            return 0;
        }

        if (*catalog)
        {
            std::cout << "standard,flavor,stations,mcs,ul_rate_mbps,ul_preamble_us,dl_rate_mbps,"
                         "dl_preamble_us\n";
            for (const auto& e : phy.Entries())
            {
                std::cout << ToString(e.standard) << ',' << ToString(e.flavor) << ','
                          << e.concurrentStations << ',' << e.mcs << ',' << e.ulRate.Mbps() << ','
                          << FormatMicros(e.ulPreamble) << ',' << e.dlRate.Mbps() << ','
                          << FormatMicros(e.dlPreamble) << '\n';
            }
            if (validate)
            {
                const auto issues = ValidateCatalog(phy, tc);
                std::cerr << issues.size() << " DL rate discrepancies\n";
                for (const auto& d : issues)
                {
                    std::cerr << "  " << ToString(d.entry.standard) << ' '
                              << ToString(d.entry.flavor) << ' ' << d.entry.concurrentStations
                              << " stations MCS" << d.entry.mcs << ": table "
                              << d.entry.dlRate.Mbps() << " Mbps, rule " << d.ruleDlRate.Mbps()
                              << " Mbps\n";
                }
            }
            return 0;
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
