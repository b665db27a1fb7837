#pragma once

#include "wlanul/optimizer.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wlanul
{

/// Malformed run configuration. Syntax errors carry a 1-based line and column.
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what),
          m_line(line),
          m_column(column)
    {
    }

    int Line() const
    {
        return m_line;
    }

    int Column() const
    {
        return m_column;
    }

  private:
    int m_line;
    int m_column;
};

enum class Output
{
    Fig1, ///< best strategy per station count
    Fig2, ///< throughput per MCS
    Fig3, ///< throughput per MPDU count
    Raw,  ///< every flavor and MCS behind fig1
};

std::string_view ToString(Output o);
std::optional<Output> ParseOutput(std::string_view text);

struct RunConfig
{
    std::vector<int> stations;
    std::vector<Standard> standards;
    std::vector<double> bers;
    std::vector<int> msduLens;
    std::vector<AckWindow> ackWindows;
    std::vector<Output> outputs;
    AckSizing ackSizing{AckSizing::Compact};

    bool operator==(const RunConfig&) const = default;
};

/**
 * Strict JSON reader:
 *   {"stations":[1,4], "standards":["ac","ax"], "bers":[0,1e-5],
 *    "msdu_lens":[1500], "ack_windows":[64,256], "outputs":["fig1"],
 *    "ack_sizing":"compact"}
 * ack_sizing is optional. Unknown keys, empty or duplicate list items are errors.
 */
RunConfig ParseRunConfig(std::string_view jsonText);
RunConfig LoadRunConfig(const std::filesystem::path& file);

struct ResultRow
{
    Standard standard{Standard::Ax};
    std::string flavor;
    int totalStations{1};
    int concurrent{1};
    int cycles{1};
    AckWindow window{AckWindow::W64};
    double ber{0.0};
    int msduLen{0};
    std::optional<int> mcs;
    /// MPDU count requested by a per-X sweep.
    std::optional<int> x;
    std::optional<ThroughputReport> report;
    /// "ok", "skipped: ...", "unsupported: ..." or "error: ..."
    std::string status{"ok"};
};

struct ResultTable
{
    Output output{Output::Fig1};
    std::vector<ResultRow> rows;
};

struct RunResult
{
    std::vector<ResultTable> tables;
    /// Number of rows whose computation failed unexpectedly.
    int errors{0};

    const ResultTable* Find(Output o) const;
};

/// Computes every requested table. `jobs` > 1 spreads cells over threads; the rows
/// and their order do not depend on it.
RunResult Run(const RunConfig& config,
              const PhyCatalog& catalog,
              const TimingConstants& tc = DefaultTiming(),
              int jobs = 1);

std::string FileName(Output o);

/// Header row of every table.
const std::vector<std::string>& CsvColumns();

/// Formatted cells of one row, aligned with CsvColumns().
std::vector<std::string> CsvFields(const ResultRow& row);

void WriteCsv(const ResultTable& table, std::ostream& os);

/// Writes one file per table into `dir` (created if missing). Returns the paths.
std::vector<std::filesystem::path> WriteOutputs(const RunResult& result,
                                                const std::filesystem::path& dir);

} // namespace wlanul
