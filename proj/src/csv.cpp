#include "wlanul/scenario.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace wlanul
{

namespace
{

std::string
Escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos)
    {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell)
    {
        if (c == '"')
        {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string
Significant(double v, int digits)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

template <typename T>
std::string
Opt(const std::optional<T>& v)
{
    return v ? std::to_string(*v) : std::string();
}

} // namespace

std::string
FileName(Output o)
{
    return std::string(ToString(o)) + ".csv";
}

const std::vector<std::string>&
CsvColumns()
{
    static const std::vector<std::string> kColumns{
        "standard",        "flavor",     "total_stations", "concurrent",      "cycles",
        "ack_window",      "ber",        "msdu_len",       "mcs",             "x",
        "y_min",           "y_max",      "total_msdus",    "throughput_mbps", "cycle_us",
        "access_delay_us", "aifs_us",    "backoff_us",     "dl_preambles_us", "t_tf_us",
        "sifs_us",         "ul_preamble_us", "t_data_us",  "pe_us",           "t_ack_us",
        "status",
    };
    return kColumns;
}

std::vector<std::string>
CsvFields(const ResultRow& row)
{
    std::vector<std::string> f{
        std::string(ToString(row.standard)),
        row.flavor,
        std::to_string(row.totalStations),
        std::to_string(row.concurrent),
        std::to_string(row.cycles),
        std::string(ToString(row.window)),
        Significant(row.ber, 6),
        std::to_string(row.msduLen),
        Opt(row.mcs),
    };
    if (!row.report)
    {
        f.push_back(Opt(row.x));
        f.resize(CsvColumns().size() - 1);
        f.push_back(row.status);
        return f;
    }
    const auto& r = *row.report;
    const auto& b = r.breakdown;
    for (auto s : {std::to_string(r.plan.MpduCount()),
                   std::to_string(r.plan.MinMsdus()),
                   std::to_string(r.plan.MaxMsdus()),
                   std::to_string(r.plan.TotalMsdus()),
                   Significant(r.throughputMbps, 6),
                   FormatMicros(r.cycle),
                   FormatMicros(r.accessDelay),
                   FormatMicros(b.aifs),
                   FormatMicros(b.backoff),
                   FormatMicros(b.dlPreambles),
                   FormatMicros(b.tTf),
                   FormatMicros(b.sifsTotal),
                   FormatMicros(b.ulPreamble),
                   FormatMicros(b.tData),
                   FormatMicros(b.pe),
                   FormatMicros(b.tAck),
                   row.status})
    {
        f.push_back(std::move(s));
    }
    return f;
}

void
WriteCsv(const ResultTable& table, std::ostream& os)
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
        {
            os << (i ? "," : "") << Escape(cells[i]);
        }
        os << '\n';
    };
    line(CsvColumns());
    for (const auto& row : table.rows)
    {
        line(CsvFields(row));
    }
}

std::vector<std::filesystem::path>
WriteOutputs(const RunResult& result, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    for (const auto& table : result.tables)
    {
        const auto path = dir / FileName(table.output);
        std::ofstream out(path, std::ios::binary);
        if (!out)
        {
            throw std::runtime_error("cannot write " + path.string());
        }
        WriteCsv(table, out);
        if (!out.flush())
        {
            throw std::runtime_error("write failed for " + path.string());
        }
        written.push_back(path);
    }
    return written;
}

} // namespace wlanul
