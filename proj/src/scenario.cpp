#include "wlanul/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace wlanul
{

namespace
{

using nlohmann::json;

std::pair<int, int>
LineColumn(std::string_view text, std::size_t byte)
{
    int line = 1;
    int column = 1;
    const auto end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            column = 1;
        }
        else
        {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void
Fail(const std::string& msg)
{
    throw ConfigError("config: " + msg);
}

const json&
NonEmptyList(const json& doc, const char* key)
{
    if (!doc.contains(key))
    {
        Fail(std::string("missing key '") + key + "'");
    }
    const auto& v = doc.at(key);
    if (!v.is_array() || v.empty())
    {
        Fail(std::string("'") + key + "' must be a non-empty array");
    }
    return v;
}

template <typename T>
void
PushUnique(std::vector<T>& out, T value, const std::string& where)
{
    if (std::find(out.begin(), out.end(), value) != out.end())
    {
        Fail(where + ": duplicate value");
    }
    out.push_back(value);
}

int
IntItem(const json& v, const std::string& where)
{
    if (!v.is_number_integer())
    {
        Fail(where + ": expected an integer");
    }
    return v.get<int>();
}

std::string
StringItem(const json& v, const std::string& where)
{
    if (!v.is_string())
    {
        Fail(where + ": expected a string");
    }
    return v.get<std::string>();
}

std::string
Where(const char* key, std::size_t i)
{
    return std::string(key) + "[" + std::to_string(i) + "]";
}

ResultRow
RowFor(const ScenarioSpec& spec)
{
    ResultRow r;
    r.standard = spec.flavor.GetStandard();
    r.flavor = spec.flavor.Label();
    r.totalStations = spec.totalStations;
    r.concurrent = spec.Concurrent();
    r.cycles = spec.Cycles();
    r.window = spec.ackWindow;
    r.ber = spec.ber;
    r.msduLen = spec.msduLen;
    return r;
}

ResultRow
McsRow(const ScenarioSpec& spec, const McsOutcome& o)
{
    auto r = RowFor(spec);
    r.mcs = o.mcs;
    r.report = o.report;
    if (!o.report)
    {
        r.status = "skipped: " + o.skipReason;
    }
    return r;
}

using Tagged = std::vector<std::pair<Output, ResultRow>>;

struct Job
{
    std::vector<Output> targets;
    std::function<Tagged()> cell;
    ResultRow context;
};

} // namespace

std::string_view
ToString(Output o)
{
    switch (o)
    {
    case Output::Fig1:
        return "fig1";
    case Output::Fig2:
        return "fig2";
    case Output::Fig3:
        return "fig3";
    case Output::Raw:
        return "raw";
    }
    return "?";
}

std::optional<Output>
ParseOutput(std::string_view text)
{
    for (auto o : {Output::Fig1, Output::Fig2, Output::Fig3, Output::Raw})
    {
        if (text == ToString(o))
        {
            return o;
        }
    }
    return std::nullopt;
}

RunConfig
ParseRunConfig(std::string_view jsonText)
{
    static const std::set<std::string> kKeys{
        "stations", "standards", "bers", "msdu_lens", "ack_windows", "outputs", "ack_sizing"};

    json doc;
    std::set<std::string> seen;
    std::string duplicate;
    const json::parser_callback_t track = [&](int depth, json::parse_event_t event, json& parsed) {
        if (depth == 1 && event == json::parse_event_t::key)
        {
            const auto key = parsed.get<std::string>();
            if (!seen.insert(key).second && duplicate.empty())
            {
                duplicate = key;
            }
        }
        return true;
    };
    try
    {
        doc = json::parse(jsonText.begin(), jsonText.end(), track);
    }
    catch (const json::parse_error& e)
    {
        const auto [line, column] = LineColumn(jsonText, e.byte);
        throw ConfigError("config: syntax error at line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + e.what(),
                          line,
                          column);
    }
    if (!doc.is_object())
    {
        Fail("top level must be an object");
    }
    if (!duplicate.empty())
    {
        Fail("duplicate key '" + duplicate + "'");
    }
    for (const auto& [k, v] : doc.items())
    {
        if (!kKeys.contains(k))
        {
            Fail("unknown key '" + k + "'");
        }
    }

    RunConfig cfg;
    const auto& stations = NonEmptyList(doc, "stations");
    for (std::size_t i = 0; i < stations.size(); ++i)
    {
        const auto where = Where("stations", i);
        const int s = IntItem(stations[i], where);
        if (!IsStationCount(s))
        {
            Fail(where + ": " + std::to_string(s) + " is not one of 1,4,8,16,32,64");
        }
        PushUnique(cfg.stations, s, where);
    }

    const auto& standards = NonEmptyList(doc, "standards");
    for (std::size_t i = 0; i < standards.size(); ++i)
    {
        const auto where = Where("standards", i);
        const auto text = StringItem(standards[i], where);
        const auto s = ParseStandard(text);
        if (!s)
        {
            Fail(where + ": unknown standard '" + text + "'");
        }
        PushUnique(cfg.standards, *s, where);
    }

    const auto& bers = NonEmptyList(doc, "bers");
    for (std::size_t i = 0; i < bers.size(); ++i)
    {
        const auto where = Where("bers", i);
        if (!bers[i].is_number())
        {
            Fail(where + ": expected a number");
        }
        const double b = bers[i].get<double>();
        if (!(b >= 0.0 && b < 1.0))
        {
            Fail(where + ": BER must lie in [0, 1)");
        }
        PushUnique(cfg.bers, b, where);
    }

    const auto& lens = NonEmptyList(doc, "msdu_lens");
    for (std::size_t i = 0; i < lens.size(); ++i)
    {
        const auto where = Where("msdu_lens", i);
        const int len = IntItem(lens[i], where);
        if (len < 1 || len > 11454)
        {
            Fail(where + ": MSDU length must lie in 1..11454 bytes");
        }
        PushUnique(cfg.msduLens, len, where);
    }

    const auto& windows = NonEmptyList(doc, "ack_windows");
    for (std::size_t i = 0; i < windows.size(); ++i)
    {
        const auto where = Where("ack_windows", i);
        const int w = IntItem(windows[i], where);
        if (w != 64 && w != 256)
        {
            Fail(where + ": window must be 64 or 256");
        }
        PushUnique(cfg.ackWindows, w == 64 ? AckWindow::W64 : AckWindow::W256, where);
    }

    const auto& outputs = NonEmptyList(doc, "outputs");
    for (std::size_t i = 0; i < outputs.size(); ++i)
    {
        const auto where = Where("outputs", i);
        const auto text = StringItem(outputs[i], where);
        const auto o = ParseOutput(text);
        if (!o)
        {
            Fail(where + ": unknown output '" + text + "' (fig1, fig2, fig3, raw)");
        }
        PushUnique(cfg.outputs, *o, where);
    }

    if (doc.contains("ack_sizing"))
    {
        const auto text = StringItem(doc.at("ack_sizing"), "ack_sizing");
        const auto a = ParseAckSizing(text);
        if (!a)
        {
            Fail("ack_sizing: unknown policy '" + text + "' (compact, per-plan, window)");
        }
        cfg.ackSizing = *a;
    }
    return cfg;
}

RunConfig
LoadRunConfig(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
    {
        throw ConfigError("config: cannot open " + file.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ParseRunConfig(ss.str());
}

const ResultTable*
RunResult::Find(Output o) const
{
    for (const auto& t : tables)
    {
        if (t.output == o)
        {
            return &t;
        }
    }
    return nullptr;
}

RunResult
Run(const RunConfig& config, const PhyCatalog& catalog, const TimingConstants& tc, int jobs)
{
    auto wants = [&](Output o) {
        return std::find(config.outputs.begin(), config.outputs.end(), o) != config.outputs.end();
    };
    const bool hasAx =
        std::find(config.standards.begin(), config.standards.end(), Standard::Ax) !=
        config.standards.end();

    std::vector<Job> work;

    if (wants(Output::Fig1) || wants(Output::Raw))
    {
        std::vector<Output> targets;
        for (auto o : {Output::Fig1, Output::Raw})
        {
            if (wants(o))
            {
                targets.push_back(o);
            }
        }
        const bool fig1 = wants(Output::Fig1);
        const bool raw = wants(Output::Raw);
        for (auto standard : config.standards)
        {
            // 11ac only has the 64-MPDU window.
            const auto windows =
                standard == Standard::Ax ? config.ackWindows : std::vector{AckWindow::W64};
            for (int s : config.stations)
            {
                for (double ber : config.bers)
                {
                    for (int len : config.msduLens)
                    {
                        for (auto w : windows)
                        {
                            ResultRow ctx;
                            ctx.standard = standard;
                            ctx.flavor = "*";
                            ctx.totalStations = s;
                            ctx.window = w;
                            ctx.ber = ber;
                            ctx.msduLen = len;
                            auto cell = [=, &catalog, &tc, &config] {
                                Tagged rows;
                                for (const auto& o : SweepFlavors(
                                         s, standard, ber, len, w, catalog, tc, 1, config.ackSizing))
                                {
                                    auto summary = RowFor(o.spec);
                                    if (const auto* b = o.sweep.Best())
                                    {
                                        summary.mcs = b->mcs;
                                        summary.report = b->report;
                                    }
                                    else if (o.status == FlavorOutcome::Status::OutOfScope)
                                    {
                                        summary.status = o.note;
                                    }
                                    else
                                    {
                                        summary.status = "skipped: " + o.note;
                                    }
                                    if (fig1)
                                    {
                                        rows.emplace_back(Output::Fig1, summary);
                                    }
                                    if (!raw)
                                    {
                                        continue;
                                    }
                                    if (o.status == FlavorOutcome::Status::OutOfScope)
                                    {
                                        rows.emplace_back(Output::Raw, summary);
                                    }
                                    for (const auto& m : o.sweep.byMcs)
                                    {
                                        rows.emplace_back(Output::Raw, McsRow(o.spec, m));
                                    }
                                }
                                return rows;
                            };
                            work.push_back({targets, cell, ctx});
                        }
                    }
                }
            }
        }
    }

    if (wants(Output::Fig2) && hasAx)
    {
        for (int n : {4, 64})
        {
            for (auto w : config.ackWindows)
            {
                for (double ber : config.bers)
                {
                    for (int len : config.msduLens)
                    {
                        const ScenarioSpec spec{Flavor::AxMu(n), n, 0, ber, w, len, config.ackSizing};
                        work.push_back({{Output::Fig2},
                                        [spec, &catalog, &tc] {
                                            Tagged rows;
                                            for (const auto& m : SweepMcs(spec, catalog, tc).byMcs)
                                            {
                                                rows.emplace_back(Output::Fig2, McsRow(spec, m));
                                            }
                                            return rows;
                                        },
                                        RowFor(spec)});
                    }
                }
            }
        }
    }

    if (wants(Output::Fig3) && hasAx)
    {
        const auto window = std::find(config.ackWindows.begin(),
                                      config.ackWindows.end(),
                                      AckWindow::W256) != config.ackWindows.end()
                                ? AckWindow::W256
                                : AckWindow::W64;
        constexpr int kXMax = 256;
        for (auto [n, mcs] : {std::pair{4, 11}, std::pair{64, 9}})
        {
            for (int len : config.msduLens)
            {
                for (double ber : config.bers)
                {
                    const ScenarioSpec spec{
                        Flavor::AxMu(n), n, mcs, ber, window, len, config.ackSizing};
                    auto ctx = RowFor(spec);
                    ctx.mcs = mcs;
                    work.push_back({{Output::Fig3},
                                    [spec, ctx, &catalog, &tc] {
                                        Tagged rows;
                                        const auto curve = ThroughputCurve(spec, catalog, tc, kXMax);
                                        for (int x = 1; x <= kXMax; ++x)
                                        {
                                            auto r = ctx;
                                            r.x = x;
                                            r.report = curve[x - 1];
                                            if (x > MaxMpdus(spec.ackWindow))
                                            {
                                                r.status = "skipped: exceeds the acknowledgment window";
                                            }
                                            else if (!r.report)
                                            {
                                                r.status = "skipped: no plan fits the PPDU limit";
                                            }
                                            rows.emplace_back(Output::Fig3, std::move(r));
                                        }
                                        return rows;
                                    },
                                    ctx});
                }
            }
        }
    }

    std::vector<Tagged> produced(work.size());
    ParallelFor(work.size(), jobs, [&](std::size_t i) {
        try
        {
            produced[i] = work[i].cell();
        }
        catch (const std::exception& e)
        {
            produced[i].clear();
            for (auto o : work[i].targets)
            {
                auto r = work[i].context;
                r.status = std::string("error: ") + e.what();
                produced[i].emplace_back(o, std::move(r));
            }
        }
    });

    RunResult result;
    for (auto o : config.outputs)
    {
        if ((o == Output::Fig2 || o == Output::Fig3) && !hasAx)
        {
            continue;
        }
        ResultTable table{o, {}};
        for (const auto& rows : produced)
        {
            for (const auto& [target, row] : rows)
            {
                if (target != o)
                {
                    continue;
                }
                if (row.status.starts_with("error:"))
                {
                    ++result.errors;
                }
                table.rows.push_back(row);
            }
        }
        result.tables.push_back(std::move(table));
    }
    return result;
}

} // namespace wlanul
