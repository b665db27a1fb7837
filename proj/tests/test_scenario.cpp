#include "wlanul/scenario.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace wlanul;

namespace
{

const char* kFull = R"({
  "stations": [1, 64],
  "standards": ["ac", "ax"],
  "bers": [0, 1e-5],
  "msdu_lens": [512, 1500],
  "ack_windows": [64, 256],
  "outputs": ["fig1", "raw"],
  "ack_sizing": "compact"
})";

std::string
Csv(const RunResult& r, Output o)
{
    std::ostringstream os;
    WriteCsv(*r.Find(o), os);
    return os.str();
}

RunConfig
Small(std::vector<Output> outputs)
{
    RunConfig c;
    c.stations = {1};
    c.standards = {Standard::Ax};
    c.bers = {0.0};
    c.msduLens = {1500};
    c.ackWindows = {AckWindow::W256};
    c.outputs = std::move(outputs);
    return c;
}

} // namespace

TEST_CASE("config parsing")
{
    const auto c = ParseRunConfig(kFull);
    CHECK(c.stations == std::vector{1, 64});
    CHECK(c.standards == std::vector{Standard::Ac, Standard::Ax});
    CHECK(c.bers == std::vector{0.0, 1e-5});
    CHECK(c.msduLens == std::vector{512, 1500});
    CHECK(c.ackWindows == std::vector{AckWindow::W64, AckWindow::W256});
    CHECK(c.outputs == std::vector{Output::Fig1, Output::Raw});
    CHECK(c.ackSizing == AckSizing::Compact);

    const std::string noSizing = R"({"stations":[4],"standards":["ax"],"bers":[0],)"
                                 R"("msdu_lens":[64],"ack_windows":[64],"outputs":["fig2"]})";
    CHECK(ParseRunConfig(noSizing).ackSizing == AckSizing::Compact);
}

TEST_CASE("config syntax errors report line and column")
{
    try
    {
        ParseRunConfig("{\n  \"stations\": [1,\n  ]\n}");
        FAIL("accepted");
    }
    catch (const ConfigError& e)
    {
        CHECK(e.Line() == 3);
        CHECK(e.Column() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("config field errors name the field")
{
    auto message = [](std::string from, std::string to) {
        std::string text = kFull;
        text.replace(text.find(from), from.size(), to);
        try
        {
            ParseRunConfig(text);
        }
        catch (const ConfigError& e)
        {
            return std::string(e.what());
        }
        return std::string("accepted");
    };
    auto has = [](const std::string& s, const char* part) { return s.find(part) != std::string::npos; };

    CHECK(has(message("[1, 64]", "[1, 5]"), "stations[1]"));
    CHECK(has(message("[1, 64]", "[1, 1]"), "duplicate"));
    CHECK(has(message("[1, 64]", "[]"), "non-empty"));
    CHECK(has(message("[1, 64]", "[1.5]"), "stations[0]"));
    CHECK(has(message("\"ac\", \"ax\"", "\"ac\", \"be\""), "standards[1]"));
    CHECK(has(message("[0, 1e-5]", "[0, 1]"), "bers[1]"));
    CHECK(has(message("[512, 1500]", "[0]"), "msdu_lens[0]"));
    CHECK(has(message("[64, 256]", "[128]"), "ack_windows[0]"));
    CHECK(has(message("\"fig1\", \"raw\"", "\"fig4\""), "outputs[0]"));
    CHECK(has(message("\"compact\"", "\"huge\""), "ack_sizing"));
    CHECK(has(message("\"outputs\"", "\"output\""), "unknown key 'output'"));
    CHECK(has(message("\"ack_sizing\": \"compact\"", "\"bers\": [0]"), "duplicate key 'bers'"));
    CHECK(has(message("\"stations\": [1, 64],", ""), "missing key 'stations'"));
    CHECK_THROWS_AS(ParseRunConfig("[]"), ConfigError);
    CHECK_THROWS_AS(LoadRunConfig("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("example config file")
{
    const auto c = LoadRunConfig(std::filesystem::path(WLANUL_TEST_DATA_DIR) / "single_station.json");
    CHECK(c == Small({Output::Fig1}));
}

TEST_CASE("single station run gives one row ahead of 11ac by about 64%")
{
    const auto ax = Run(Small({Output::Fig1}), PhyCatalog::Builtin());
    CHECK(ax.errors == 0);
    const auto& rows = ax.Find(Output::Fig1)->rows;
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].report);
    CHECK(rows[0].mcs == 11);
    CHECK(rows[0].status == "ok");

    auto acConfig = Small({Output::Fig1});
    acConfig.standards = {Standard::Ac};
    const auto ac = Run(acConfig, PhyCatalog::Builtin());
    const auto& acRow = ac.Find(Output::Fig1)->rows.at(0);
    REQUIRE(acRow.report);
    CHECK(acRow.window == AckWindow::W64);
    const double gain = rows[0].report->throughputMbps / acRow.report->throughputMbps - 1.0;
    CHECK(gain == doctest::Approx(0.64).epsilon(0.05));
}

TEST_CASE("11ac with many stations is marked out of scope")
{
    auto config = Small({Output::Fig1, Output::Raw});
    config.standards = {Standard::Ac};
    config.stations = {64};
    const auto r = Run(config, PhyCatalog::Builtin());
    for (auto o : {Output::Fig1, Output::Raw})
    {
        const auto& rows = r.Find(o)->rows;
        REQUIRE(rows.size() == 1);
        CHECK_FALSE(rows[0].report.has_value());
        CHECK(rows[0].status == "unsupported: contention model out of scope");
    }
    const auto csv = Csv(r, Output::Fig1);
    CHECK(csv.find("unsupported: contention model out of scope") != std::string::npos);
}

TEST_CASE("per-X curve peaks near 70 then declines")
{
    auto config = Small({Output::Fig3});
    const auto r = Run(config, PhyCatalog::Builtin());
    const auto& rows = r.Find(Output::Fig3)->rows;
    REQUIRE(rows.size() == 2 * 256);
    int peak = 0;
    double best = 0.0;
    for (int i = 0; i < 256; ++i)
    {
        const auto& row = rows[static_cast<std::size_t>(i)];
        CHECK(row.flavor == "MU_AX(4)");
        CHECK(row.x == i + 1);
        REQUIRE(row.report);
        if (row.report->throughputMbps > best)
        {
            best = row.report->throughputMbps;
            peak = i + 1;
        }
    }
    CHECK(peak >= 65);
    CHECK(peak <= 80);
    CHECK(rows[255].report->throughputMbps < best);
    // 64 stations at MCS9 run out of airtime beyond 20 MPDUs.
    CHECK(rows[256 + 19].report.has_value());
    CHECK_FALSE(rows[256 + 20].report.has_value());
    CHECK(rows[256 + 20].status.starts_with("skipped"));
}

TEST_CASE("per-MCS table covers both group sizes and skips nothing silently")
{
    auto config = Small({Output::Fig2});
    config.ackWindows = {AckWindow::W64, AckWindow::W256};
    const auto r = Run(config, PhyCatalog::Builtin());
    const auto& rows = r.Find(Output::Fig2)->rows;
    CHECK(rows.size() == 2 * 12 + 2 * 10);
    for (const auto& row : rows)
    {
        CHECK((row.report.has_value() || row.status.starts_with("skipped")));
    }
}

TEST_CASE("11ac-only configs produce no 11ax tables")
{
    auto config = Small({Output::Fig1, Output::Fig2, Output::Fig3});
    config.standards = {Standard::Ac};
    const auto r = Run(config, PhyCatalog::Builtin());
    CHECK(r.tables.size() == 1);
    CHECK(r.Find(Output::Fig2) == nullptr);
}

TEST_CASE("csv rows carry the full breakdown")
{
    const auto r = Run(Small({Output::Fig1}), PhyCatalog::Builtin());
    const auto& row = r.Find(Output::Fig1)->rows.at(0);
    const auto fields = CsvFields(row);
    REQUIRE(fields.size() == CsvColumns().size());
    auto col = [&](const std::string& name) {
        const auto it = std::find(CsvColumns().begin(), CsvColumns().end(), name);
        REQUIRE(it != CsvColumns().end());
        return fields[static_cast<std::size_t>(it - CsvColumns().begin())];
    };
    CHECK(col("aifs_us") == "43");
    CHECK(col("backoff_us") == "67.5");
    CHECK(col("ul_preamble_us") == "60.8");
    CHECK(col("status") == "ok");
    CHECK(col("x") == std::to_string(row.report->plan.MpduCount()));

    double sum = 0.0;
    for (const char* c : {"aifs_us", "backoff_us", "dl_preambles_us", "t_tf_us", "sifs_us",
                          "ul_preamble_us", "t_data_us", "pe_us", "t_ack_us"})
    {
        sum += std::stod(col(c));
    }
    CHECK(sum == doctest::Approx(std::stod(col("cycle_us"))).epsilon(1e-12));
    CHECK(std::stod(col("throughput_mbps")) ==
          doctest::Approx(row.report->throughputMbps).epsilon(1e-5));
}

TEST_CASE("csv output is identical across runs and thread counts")
{
    const auto config = ParseRunConfig(kFull);
    const auto a = Run(config, PhyCatalog::Builtin(), DefaultTiming(), 1);
    const auto b = Run(config, PhyCatalog::Builtin(), DefaultTiming(), 4);
    for (auto o : {Output::Fig1, Output::Raw})
    {
        CHECK(Csv(a, o) == Csv(b, o));
    }
    const auto dir = std::filesystem::temp_directory_path() / "wlanul_scenario_test";
    std::filesystem::remove_all(dir);
    const auto files = WriteOutputs(a, dir);
    REQUIRE(files.size() == 2);
    std::ifstream in(files[0]);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == Csv(a, Output::Fig1));
    std::filesystem::remove_all(dir);
}

TEST_CASE("output names")
{
    CHECK(FileName(Output::Fig3) == "fig3.csv");
    CHECK(ParseOutput("raw") == Output::Raw);
    CHECK_FALSE(ParseOutput("fig9").has_value());
}
